// Test-side helper utilities and independent reference implementations.
//
// The reference implementations here are deliberately written with different
// machinery than the library (plain maps and sets, breadth-first scans) so
// that agreement between the two is meaningful.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fam/automaton.hpp"

namespace helpers {

using fam::Dfa;
using fam::Nfa;

// All words over `alphabet` of length <= max_len, in shortlex order.
inline std::vector<std::string> all_words(std::string_view alphabet, int max_len) {
  std::vector<std::string> out = {""};
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    level_begin = level_end;
  }
  return out;
}

// Membership in an NFA's language by direct subset simulation.
inline bool nfa_accepts(const Nfa& a, std::string_view word) {
  std::set<int> cur(a.initials.begin(), a.initials.end());
  for (char c : word) {
    int letter = fam::letter_index(a.alphabet, c);
    if (letter < 0) return false;
    std::set<int> next;
    for (const fam::Transition& t : a.transitions)
      if (t.letter == letter && cur.count(t.from)) next.insert(t.to);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  for (int f : a.finals)
    if (cur.count(f)) return true;
  return false;
}

// True when the two automata accept exactly the same words up to max_len.
inline bool same_language_upto(const Dfa& a, const Dfa& b, std::string_view alphabet,
                               int max_len) {
  for (const std::string& w : all_words(alphabet, max_len))
    if (fam::accepts(a, w) != fam::accepts(b, w)) return false;
  return true;
}

inline std::optional<std::string> first_difference_upto(const Dfa& a, const Dfa& b,
                                                        std::string_view alphabet,
                                                        int max_len) {
  for (const std::string& w : all_words(alphabet, max_len))
    if (fam::accepts(a, w) != fam::accepts(b, w)) return w;
  return std::nullopt;
}

// Number of accessible subsets produced by a textbook subset construction
// (counting only nonempty subsets, matching determinize's convention).
inline int subset_count(const Nfa& a) {
  std::set<int> start(a.initials.begin(), a.initials.end());
  if (start.empty()) return 0;
  std::set<std::set<int>> seen = {start};
  std::vector<std::set<int>> todo = {start};
  int k = static_cast<int>(a.alphabet.size());
  while (!todo.empty()) {
    std::set<int> cur = todo.back();
    todo.pop_back();
    for (int letter = 0; letter < k; ++letter) {
      std::set<int> next;
      for (const fam::Transition& t : a.transitions)
        if (t.letter == letter && cur.count(t.from)) next.insert(t.to);
      if (!next.empty() && seen.insert(next).second) todo.push_back(next);
    }
  }
  return static_cast<int>(seen.size());
}

// Reference refinement depth: refine state classes by (finality, successor
// classes) with plain ordered maps until stable; the number of refining
// rounds is the depth.  Requires a complete automaton.
inline int reference_depth(const Dfa& d) {
  if (d.num_states == 0) return 0;
  std::vector<int> cls(static_cast<size_t>(d.num_states));
  for (int q = 0; q < d.num_states; ++q) cls[static_cast<size_t>(q)] = d.finals[static_cast<size_t>(q)] ? 1 : 0;
  int depth = 0;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(static_cast<size_t>(d.num_states));
    for (int q = 0; q < d.num_states; ++q) {
      std::vector<int> key = {cls[static_cast<size_t>(q)]};
      for (int letter = 0; letter < d.k(); ++letter)
        key.push_back(cls[static_cast<size_t>(d.next(q, letter))]);
      next[static_cast<size_t>(q)] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
    }
    bool changed = false;
    for (int q = 0; q < d.num_states; ++q) {
      for (int p = 0; p < q; ++p) {
        bool before = cls[static_cast<size_t>(p)] == cls[static_cast<size_t>(q)];
        bool after = next[static_cast<size_t>(p)] == next[static_cast<size_t>(q)];
        if (before != after) changed = true;
      }
    }
    cls = std::move(next);
    if (!changed) break;
    ++depth;
  }
  return depth;
}

// Random NFA with edge density `prob` per (state, letter, state) triple.
inline Nfa random_nfa(int n, int k, uint64_t seed, double prob = 0.18) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(prob);
  std::bernoulli_distribution flag(0.35);
  Nfa a;
  a.num_states = n;
  a.alphabet = std::string("abcdefgh").substr(0, static_cast<size_t>(k));
  for (int q = 0; q < n; ++q) {
    if (flag(rng)) a.initials.push_back(q);
    if (flag(rng)) a.finals.push_back(q);
    for (int letter = 0; letter < k; ++letter)
      for (int r = 0; r < n; ++r)
        if (edge(rng)) a.transitions.push_back({q, letter, r});
  }
  if (a.initials.empty()) a.initials.push_back(0);
  std::sort(a.transitions.begin(), a.transitions.end());
  a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                      a.transitions.end());
  return a;
}

// Random sorted word list over the first k letters of the alphabet.
inline std::vector<std::string> random_word_set(int max_words, int max_len, int k,
                                                uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, k - 1);
  std::uniform_int_distribution<int> count_dist(1, max_words);
  std::set<std::string> words;
  int want = count_dist(rng);
  for (int i = 0; i < want; ++i) {
    int len = len_dist(rng);
    std::string w;
    for (int j = 0; j < len; ++j) w += static_cast<char>('a' + letter_dist(rng));
    words.insert(w);
  }
  return {words.begin(), words.end()};
}

}  // namespace helpers
