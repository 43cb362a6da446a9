#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fam/automaton.hpp"

namespace fam {

// Unary chain over {a}: states 0..n, i.a = i+1, loop at n, F = {n}; accepts
// words of length >= n. Moore depth n-1 (slow). n >= 1.
Dfa gen_unary(int n);

// Dyck-prefix automaton of height n over {a,b}: counter states 0..n plus an
// absorbing sink n+1; `a` moves up (n.a = sink), `b` moves down (0.b = sink);
// initial and final state 0. Accepts words with every prefix balance in
// [0, n] and total balance 0. Moore depth n (slow). n >= 1.
Dfa gen_dyck(int n);

// Cyclic unary automaton of a binary word w of length n: state q stands for
// the 1-based position q+1 of w, q.a = (q+1) mod n, initial state 0
// (position 1), q final iff w[q] == '1'. So accepts(A_w, a^j) iff the bit at
// position (j mod n) + 1 is 1.
Dfa gen_cyclic(std::string_view bits);

// 1-based start positions p such that u occurs in w read circularly from p
// (u may wrap around several times). u = epsilon matches everywhere.
std::vector<int> circular_occurrences(std::string_view w, std::string_view u);

// Binary de Bruijn word of length 2^order: concatenation, in lexicographic
// order, of the Lyndon words over {0,1} whose length divides `order`
// (already its own least rotation). Every binary word of length `order`
// occurs exactly once circularly.
std::string debruijn_word(int order);

// Prefix of the standard Sturmian word of the directive sequence
// (d1, d2, ...): s_{-1} = 1, s_0 = 0, s_{n+1} = s_n^{d_{n+1}} s_{n-1}.
// A finite directive is extended by repeating its last entry, so
// fibonacci_word(len) == sturmian_word({1}, len).
std::string sturmian_word(const std::vector<int>& directive, int len);
std::string fibonacci_word(int len);

// Uniform random complete Dfa: every transition target uniform over states,
// every state final with probability 1/2, initial 0. Fixed SplitMix64
// generator, so (n, k, seed) reproduces bit-identically everywhere.
// `trimmed` additionally trims (the result may then be partial or empty).
Dfa random_dfa(int n, int k, uint64_t seed, bool trimmed = false);

// Decorrelated per-sample seed stream for benchmarks.
uint64_t derive_seed(uint64_t base, uint64_t index);

// Slow for Moore: depth == num_states - 2, the maximum possible.
bool is_slow_moore(const Dfa& d);

}  // namespace fam
