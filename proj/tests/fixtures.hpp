// Shared test fixtures: small automata with hand-checked structure.
//
// All state ids are 0-based and dense.  Each fixture documents its language
// and the structural facts the tests rely on.
#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "fam/automaton.hpp"

namespace fixtures {

using fam::Dfa;
using fam::Nfa;

using Arc = std::tuple<int, char, int>;

inline Dfa make_dfa(int n, std::string alphabet, int initial, std::vector<int> final_ids,
                    const std::vector<Arc>& arcs) {
  Dfa d;
  d.num_states = n;
  d.alphabet = std::move(alphabet);
  d.initial = initial;
  d.finals.assign(static_cast<size_t>(n), false);
  for (int f : final_ids) d.finals[static_cast<size_t>(f)] = true;
  d.delta.assign(static_cast<size_t>(n) * d.alphabet.size(), -1);
  for (const auto& [from, letter, to] : arcs)
    d.set_next(from, fam::letter_index(d.alphabet, letter), to);
  return d;
}

inline Nfa make_nfa(int n, std::string alphabet, std::vector<int> initials,
                    std::vector<int> finals, std::vector<Arc> arcs) {
  Nfa a;
  a.num_states = n;
  a.alphabet = std::move(alphabet);
  a.initials = std::move(initials);
  a.finals = std::move(finals);
  for (const auto& [from, letter, to] : arcs)
    a.transitions.push_back({from, fam::letter_index(a.alphabet, letter), to});
  std::sort(a.initials.begin(), a.initials.end());
  std::sort(a.finals.begin(), a.finals.end());
  std::sort(a.transitions.begin(), a.transitions.end());
  a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                      a.transitions.end());
  return a;
}

// A complete, trim, already-minimal 10-state DFA over {a,b}.  Its Moore
// refinement stabilizes in exactly two rounds:
//   M_1 = {0,3,4 | 1,2 | 5,6 | 7,9 | 8},  M_2 = identity, depth = 2.
// Used as the running example for refinement traces and preimage tables.
inline Dfa minimal_ten() {
  return make_dfa(10, "ab", 0, {7, 8, 9},
                  {{0, 'a', 2}, {1, 'a', 1}, {2, 'a', 3}, {3, 'a', 3}, {4, 'a', 5},
                   {5, 'a', 7}, {6, 'a', 8}, {7, 'a', 1}, {8, 'a', 7}, {9, 'a', 6},
                   {0, 'b', 9}, {1, 'b', 1}, {2, 'b', 5}, {3, 'b', 7}, {4, 'b', 8},
                   {5, 'b', 7}, {6, 'b', 8}, {7, 'b', 1}, {8, 'b', 7}, {9, 'b', 4}});
}

// Two all-final states swapped by the single letter; recognizes a*.
// Its two states are equivalent but have distinct local signatures, so no
// signature-fusion pass alone can merge them.  Minimal form: one state.
inline Dfa swap_pair() {
  return make_dfa(2, "a", 0, {0, 1}, {{0, 'a', 1}, {1, 'a', 0}});
}

// (n+1)-state NFA over {a,b} recognizing A* a A^(n-1): guess the a that sits
// n letters before the end.  Determinizing it needs 2^n states.
inline Nfa window_nfa(int n) {
  std::vector<Arc> arcs = {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}};
  for (int i = 1; i < n; ++i) {
    arcs.push_back({i, 'a', i + 1});
    arcs.push_back({i, 'b', i + 1});
  }
  return make_nfa(n + 1, "ab", {0}, {n}, std::move(arcs));
}

// The reversal of window_nfa(n): deterministic, minimal, recognizes A^n a A*.
inline Nfa window_nfa_reversed(int n) {
  std::vector<Arc> arcs = {{0, 'a', 0}, {0, 'b', 0}, {1, 'a', 0}};
  for (int i = 1; i < n; ++i) {
    arcs.push_back({i + 1, 'a', i});
    arcs.push_back({i + 1, 'b', i});
  }
  return make_nfa(n + 1, "ab", {n}, {0}, std::move(arcs));
}

// 7-state trim DFA over {a,b,c} recognizing (ab)+ u {abc, acb}.
inline Dfa lang7() {
  return make_dfa(7, "abc", 0, {2, 5, 6},
                  {{0, 'a', 1},
                   {1, 'b', 2}, {1, 'c', 3},
                   {2, 'a', 4}, {2, 'c', 5},
                   {3, 'b', 5},
                   {4, 'b', 6},
                   {6, 'a', 4}});
}

// Minimal 9-state DFA for the language of lang7() minus the word abab.
inline Dfa minimal9() {
  return make_dfa(9, "abc", 0, {2, 5, 8},
                  {{0, 'a', 1},
                   {1, 'b', 2}, {1, 'c', 3},
                   {2, 'a', 4}, {2, 'c', 5},
                   {3, 'b', 5},
                   {4, 'b', 6},
                   {6, 'a', 7},
                   {7, 'b', 8},
                   {8, 'a', 7}});
}

// lang7() with the path of abab duplicated: states 7..11 clone the states
// visited by abab (7 is the new initial), the original initial component
// 0,1,2 becomes unreachable, and the clone of the abab endpoint (state 11)
// is non-final.  Trimming yields a 9-state automaton isomorphic to
// minimal9().  Recognizes L(lang7()) minus abab.
inline Dfa lang7_unfused() {
  return make_dfa(12, "abc", 7, {2, 5, 6, 9},
                  {{0, 'a', 1},
                   {1, 'b', 2}, {1, 'c', 3},
                   {2, 'a', 4}, {2, 'c', 5},
                   {3, 'b', 5},
                   {4, 'b', 6},
                   {6, 'a', 4},
                   {7, 'a', 8},
                   {8, 'b', 9}, {8, 'c', 3},
                   {9, 'a', 10}, {9, 'c', 5},
                   {10, 'b', 11},
                   {11, 'a', 4}});
}

// --- Dictionary construction snapshots for the sorted word list
//     aa, aba, ba, bba, bc (alphabet abc). ---

// After inserting aa and aba: a pure trie, two final leaves (2 and 4).
inline Dfa dict_after_aba() {
  return make_dfa(5, "abc", 0, {2, 4},
                  {{0, 'a', 1}, {1, 'a', 2}, {1, 'b', 3}, {3, 'a', 4}});
}

// After inserting ba: the final leaf of aba has been merged into the final
// leaf of aa (state 2), and the fresh path for ba is still unmerged.
inline Dfa dict_after_ba() {
  return make_dfa(6, "abc", 0, {2, 5},
                  {{0, 'a', 1}, {0, 'b', 4}, {1, 'a', 2}, {1, 'b', 3}, {3, 'a', 2},
                   {4, 'a', 5}});
}

// After inserting bba.
inline Dfa dict_after_bba() {
  return make_dfa(7, "abc", 0, {2, 6},
                  {{0, 'a', 1}, {0, 'b', 4}, {1, 'a', 2}, {1, 'b', 3}, {3, 'a', 2},
                   {4, 'a', 2}, {4, 'b', 5}, {5, 'a', 6}});
}

// After inserting bc (before the closing merge pass): 6 states, two finals.
inline Dfa dict_after_bc() {
  return make_dfa(6, "abc", 0, {2, 5},
                  {{0, 'a', 1}, {0, 'b', 4}, {1, 'a', 2}, {1, 'b', 3}, {3, 'a', 2},
                   {4, 'a', 2}, {4, 'b', 3}, {4, 'c', 5}});
}

// The finished minimal automaton for {aa, aba, ba, bba, bc}: 5 states.
inline Dfa dict_final() {
  return make_dfa(5, "abc", 0, {2},
                  {{0, 'a', 1}, {0, 'b', 4}, {1, 'a', 2}, {1, 'b', 3}, {3, 'a', 2},
                   {4, 'a', 2}, {4, 'b', 3}, {4, 'c', 2}});
}

// --- Cycle-fusion fixtures (trim automata whose nontrivial SCCs are simple
//     cycles). ---

// 12-state simple automaton over {a,b} with two cycles: {1,3} and {2,4,8,5}.
inline Dfa simple12() {
  return make_dfa(12, "ab", 0, {1, 4, 5, 7, 10, 11},
                  {{0, 'a', 1}, {0, 'b', 2},
                   {1, 'a', 3}, {1, 'b', 6},
                   {2, 'a', 10}, {2, 'b', 4},
                   {3, 'a', 11}, {3, 'b', 1},
                   {4, 'a', 8}, {4, 'b', 6},
                   {5, 'a', 2}, {5, 'b', 9},
                   {6, 'b', 7},
                   {8, 'a', 7}, {8, 'b', 5},
                   {9, 'b', 7}});
}

// simple12() after its acyclic tail has been fused (9 states): the cycle
// {2,4,8,5} now carries a weak signature word that is a square, so a further
// pass halves it.
inline Dfa simple12_mid9() {
  return make_dfa(9, "ab", 0, {1, 4, 5, 7},
                  {{0, 'a', 1}, {0, 'b', 2},
                   {1, 'a', 3}, {1, 'b', 6},
                   {2, 'a', 7}, {2, 'b', 4},
                   {3, 'a', 7}, {3, 'b', 1},
                   {4, 'a', 8}, {4, 'b', 6},
                   {5, 'a', 2}, {5, 'b', 6},
                   {6, 'b', 7},
                   {8, 'a', 7}, {8, 'b', 5}});
}

// Seven states: the two remaining cycles {1,3} and {2,4} are conjugate
// (their weak signature words are rotations of each other).
inline Dfa simple12_mid7() {
  return make_dfa(7, "ab", 0, {1, 4, 6},
                  {{0, 'a', 1}, {0, 'b', 2},
                   {1, 'a', 3}, {1, 'b', 5},
                   {2, 'a', 6}, {2, 'b', 4},
                   {3, 'a', 6}, {3, 'b', 1},
                   {4, 'a', 2}, {4, 'b', 5},
                   {5, 'b', 6}});
}

// The minimal automaton of simple12(): 5 states, one 2-cycle {1,2}.
inline Dfa simple12_min() {
  return make_dfa(5, "ab", 0, {1, 4},
                  {{0, 'a', 1}, {0, 'b', 2},
                   {1, 'a', 2}, {1, 'b', 3},
                   {2, 'a', 4}, {2, 'b', 1},
                   {3, 'b', 4}});
}

// 8-state simple automaton over {a,b,c}: two equivalent a-loop states (2 and
// 3) feed through c toward the 2-cycle {6,7}; states 5 and 7 are equivalent.
inline Dfa wrap8() {
  return make_dfa(8, "abc", 0, {5, 7},
                  {{0, 'a', 3}, {0, 'b', 1},
                   {1, 'a', 2}, {1, 'c', 4},
                   {2, 'a', 2}, {2, 'c', 6},
                   {3, 'a', 3}, {3, 'c', 4},
                   {4, 'a', 5},
                   {5, 'b', 6},
                   {6, 'a', 7},
                   {7, 'b', 6}});
}

// wrap8() after merging the equivalent loop states: 6 states.
inline Dfa wrap8_mid6() {
  return make_dfa(6, "abc", 0, {5},
                  {{0, 'a', 3}, {0, 'b', 1},
                   {1, 'a', 2}, {1, 'c', 4},
                   {2, 'a', 2}, {2, 'c', 4},
                   {3, 'a', 3}, {3, 'c', 4},
                   {4, 'a', 5},
                   {5, 'b', 4}});
}

// The minimal automaton of wrap8(): 4 states.
inline Dfa wrap8_min() {
  return make_dfa(4, "abc", 0, {3},
                  {{0, 'a', 1}, {0, 'b', 1},
                   {1, 'a', 1}, {1, 'c', 2},
                   {2, 'a', 3},
                   {3, 'b', 2}});
}

// Two structurally different 5-state NFAs for the same language
// a (b* u c*) a b+.  branch_nfa_a has a final state with no outgoing arc;
// branch_nfa_b has a final state with a self-loop.
inline Nfa branch_nfa_a() {
  return make_nfa(5, "abc", {0}, {4},
                  {{0, 'a', 1}, {0, 'a', 2},
                   {1, 'b', 1}, {1, 'a', 3},
                   {2, 'c', 2}, {2, 'a', 3},
                   {3, 'b', 3}, {3, 'b', 4}});
}

inline Nfa branch_nfa_b() {
  return make_nfa(5, "abc", {0}, {4},
                  {{0, 'a', 1}, {0, 'a', 2},
                   {1, 'b', 1}, {1, 'a', 3},
                   {2, 'c', 2}, {2, 'a', 3},
                   {3, 'b', 4}, {4, 'b', 4}});
}

}  // namespace fixtures
