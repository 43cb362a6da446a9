#include "fam/generators.hpp"

#include <functional>
#include <stdexcept>

#include "fam/moore.hpp"

namespace fam {

Dfa gen_unary(int n) {
  if (n < 1) throw std::invalid_argument("gen_unary: n must be >= 1");
  Dfa d = Dfa::blank(n + 1, "a");
  d.initial = 0;
  for (int q = 0; q < n; ++q) d.set_next(q, 0, q + 1);
  d.set_next(n, 0, n);
  d.finals[n] = true;
  return d;
}

Dfa gen_dyck(int n) {
  if (n < 1) throw std::invalid_argument("gen_dyck: n must be >= 1");
  const int sink = n + 1;
  Dfa d = Dfa::blank(n + 2, "ab");
  d.initial = 0;
  for (int q = 0; q <= n; ++q) {
    d.set_next(q, 0, q < n ? q + 1 : sink);  // a: one step up
    d.set_next(q, 1, q > 0 ? q - 1 : sink);  // b: one step down
  }
  d.set_next(sink, 0, sink);
  d.set_next(sink, 1, sink);
  d.finals[0] = true;
  return d;
}

Dfa gen_cyclic(std::string_view bits) {
  if (bits.empty()) fail(Err::Parse, "cyclic word must be non-empty");
  for (char c : bits)
    if (c != '0' && c != '1') fail(Err::Parse, "cyclic word must be over {0,1}");
  const int n = static_cast<int>(bits.size());
  Dfa d = Dfa::blank(n, "a");
  d.initial = 0;
  for (int q = 0; q < n; ++q) {
    d.set_next(q, 0, (q + 1) % n);
    d.finals[q] = bits[q] == '1';
  }
  return d;
}

std::vector<int> circular_occurrences(std::string_view w, std::string_view u) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int p = 0; p < n; ++p) {
    bool match = true;
    for (size_t i = 0; i < u.size() && match; ++i) match = u[i] == w[(p + i) % n];
    if (match) out.push_back(p + 1);
  }
  return out;
}

std::string debruijn_word(int order) {
  if (order < 1) throw std::invalid_argument("debruijn_word: order must be >= 1");
  std::string out;
  out.reserve(static_cast<size_t>(1) << order);
  std::vector<int> a(order + 1, 0);
  // Lexicographically least sequence: emit each Lyndon word over {0,1} whose
  // length divides the order, in increasing order.
  std::function<void(int, int)> gen = [&](int t, int p) {
    if (t > order) {
      if (order % p == 0)
        for (int i = 1; i <= p; ++i) out.push_back(static_cast<char>('0' + a[i]));
      return;
    }
    a[t] = a[t - p];
    gen(t + 1, p);
    if (a[t - p] == 0) {
      a[t] = 1;
      gen(t + 1, t);
    }
  };
  gen(1, 1);
  return out;
}

std::string sturmian_word(const std::vector<int>& directive, int len) {
  if (directive.empty()) throw std::invalid_argument("sturmian_word: directive must be non-empty");
  for (int d : directive)
    if (d < 1) throw std::invalid_argument("sturmian_word: directive entries must be >= 1");
  if (len < 0) throw std::invalid_argument("sturmian_word: negative length");
  std::string prev = "1";
  std::string cur = "0";
  for (size_t i = 0; cur.size() < static_cast<size_t>(len); ++i) {
    int d = directive[std::min(i, directive.size() - 1)];
    std::string next;
    next.reserve(cur.size() * d + prev.size());
    for (int j = 0; j < d; ++j) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.substr(0, len);
}

std::string fibonacci_word(int len) { return sturmian_word({1}, len); }

namespace {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Uniform in [0, n) without modulo bias.
uint64_t uniform_below(uint64_t& state, uint64_t n) {
  uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
  while (true) {
    uint64_t v = splitmix64(state);
    if (v >= reject_below) return v % n;
  }
}

}  // namespace

Dfa random_dfa(int n, int k, uint64_t seed, bool trimmed) {
  if (n < 1 || k < 1 || k > 26) throw std::invalid_argument("random_dfa: need n >= 1 and 1 <= k <= 26");
  std::string alphabet;
  for (int x = 0; x < k; ++x) alphabet.push_back(static_cast<char>('a' + x));
  Dfa d = Dfa::blank(n, alphabet);
  d.initial = 0;
  uint64_t state = seed;
  // Draw order is part of the format: all transitions row-major, then finals.
  for (int q = 0; q < n; ++q)
    for (int x = 0; x < k; ++x) d.set_next(q, x, static_cast<int>(uniform_below(state, n)));
  for (int q = 0; q < n; ++q) d.finals[q] = (splitmix64(state) & 1) != 0;
  return trimmed ? trim(d) : d;
}

uint64_t derive_seed(uint64_t base, uint64_t index) {
  uint64_t state = base + 0x9e3779b97f4a7c15ull * (index + 1);
  return splitmix64(state);
}

bool is_slow_moore(const Dfa& d) { return moore_depth(d) == d.num_states - 2; }

}  // namespace fam
