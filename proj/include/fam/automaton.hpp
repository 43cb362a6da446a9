#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fam/error.hpp"

namespace fam {

// States are dense integers in [0, num_states). Alphabet symbols are single
// printable characters; transitions address them by index into `alphabet`.

struct Transition {
  int from = 0;
  int letter = 0;  // index into alphabet
  int to = 0;
  auto operator<=>(const Transition&) const = default;
};

// General automaton: any number of initial states, nondeterministic edges.
// `initials`, `finals` and `transitions` are kept sorted and duplicate-free.
struct Nfa {
  int num_states = 0;
  std::string alphabet;
  std::vector<int> initials;
  std::vector<int> finals;
  std::vector<Transition> transitions;

  int k() const { return static_cast<int>(alphabet.size()); }
  bool operator==(const Nfa&) const = default;
};

// Deterministic, possibly partial automaton. delta is a dense row-major
// num_states x k table; -1 marks an undefined transition.
//
// The empty language has no canonical automaton; the library-wide convention
// is a 0-state Dfa (is_empty_language() below). complete_with_sink turns it
// into the 1-state non-final sink representation used by the CLI.
struct Dfa {
  int num_states = 0;
  std::string alphabet;
  int initial = 0;
  std::vector<bool> finals;  // size num_states
  std::vector<int> delta;    // size num_states * k, -1 = undefined

  int k() const { return static_cast<int>(alphabet.size()); }
  int next(int q, int a) const { return delta[static_cast<size_t>(q) * alphabet.size() + a]; }
  void set_next(int q, int a, int to) { delta[static_cast<size_t>(q) * alphabet.size() + a] = to; }
  bool is_final(int q) const { return finals[q]; }
  bool is_empty_language() const { return num_states == 0; }

  static Dfa empty_language(std::string alphabet) {
    Dfa d;
    d.alphabet = std::move(alphabet);
    return d;
  }
  // n states, no transitions defined, no finals.
  static Dfa blank(int n, std::string alphabet) {
    Dfa d;
    d.num_states = n;
    d.alphabet = std::move(alphabet);
    d.finals.assign(n, false);
    d.delta.assign(static_cast<size_t>(n) * d.alphabet.size(), -1);
    return d;
  }

  bool operator==(const Dfa&) const = default;
};

// A state's merge key for the fusion algorithms: final flag plus the defined
// outgoing arcs ordered by letter.
struct Signature {
  bool is_final = false;
  std::vector<std::pair<int, int>> arcs;  // (letter, target), letters strictly increasing
  auto operator<=>(const Signature&) const = default;
};

// Index of `symbol` in `alphabet`, or -1.
int letter_index(std::string_view alphabet, char symbol);

Nfa to_nfa(const Dfa& d);
// Interprets an Nfa with exactly one initial state and at most one edge per
// (state, letter) as a Dfa; nullopt otherwise.
std::optional<Dfa> as_dfa(const Nfa& a);

// Swaps initials with finals and flips every edge.
Nfa reverse(const Nfa& a);

// Accessible-subset construction. Subset states are numbered in BFS discovery
// order from the initial subset, letters explored in alphabet order. A letter
// leading to the empty subset is left undefined rather than materialized; the
// empty subset appears only as the initial state of an automaton with no
// initial Nfa states.
Dfa determinize(const Nfa& a);

// Keeps states that are both accessible and co-accessible, renumbered densely
// in their original order. A 0-state result means the language is empty.
Nfa trim(const Nfa& a);
Dfa trim(const Dfa& d);

bool is_complete(const Dfa& d);
// Appends one non-final sink state (id = num_states) absorbing every missing
// transition; returns complete inputs unchanged. The 0-state empty-language
// value becomes the canonical 1-state sink automaton.
Dfa complete_with_sink(const Dfa& d);

bool accepts(const Dfa& d, std::string_view word);  // Err::UnknownSymbol

Signature state_signature(const Dfa& d, int q);

// Words of the (finite) language, sorted lexicographically; throws
// Err::NotAcyclic when the trimmed automaton has a cycle (infinite language).
std::vector<std::string> language_of(const Dfa& d);

}  // namespace fam
