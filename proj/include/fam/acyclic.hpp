#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fam/automaton.hpp"

namespace fam {

// h(q) = length of the longest path starting at q; 0 for arcless states.
// Err::NotAcyclic when a cycle is reachable.
std::vector<int> heights(const Dfa& d);

// Bottom-up fusion by increasing height: states of equal height are sorted by
// signature (targets already remapped through prior merges) and equal runs
// merge into their smallest id. Input must be deterministic and acyclic;
// minimality additionally needs it trim. Err::NotAcyclic.
Dfa revuz_minimize(const Dfa& d);

// Deterministic acyclic automaton whose graph is a tree, accepting exactly
// `words` (duplicates ignored). Alphabet defaults to the sorted distinct
// symbols of the words; passing one explicitly allows a larger alphabet.
Dfa build_trie(const std::vector<std::string>& words);
Dfa build_trie(const std::vector<std::string>& words, std::string alphabet);

struct PrefixSuffixSplit {
  std::string common_prefix;  // x: longest prefix of w with initial.x defined
  std::string suffix;         // y: w = x.y
  int anchor = 0;             // initial.x
};

// Err::UnknownSymbol for symbols outside the alphabet. On the 0-state empty
// value the split is (epsilon, w) with no anchor (anchor = -1).
PrefixSuffixSplit prefix_suffix_decomposition(const Dfa& d, std::string_view w);

// Incremental minimal-automaton construction from a lexicographically
// strictly increasing word sequence (Err::NotSorted otherwise). Between
// insertions the automaton is minimal except along the last inserted word's
// path; snapshot() exposes that intermediate automaton, finish() minimizes
// the final path and returns the minimal result.
class DaciukBuilder {
 public:
  explicit DaciukBuilder(std::string alphabet);

  void insert(std::string_view word);  // Err::NotSorted, Err::UnknownSymbol
  Dfa snapshot() const;                // live states renumbered, order kept
  Dfa finish();                        // no further insertions afterwards

  // Intermediate invariant (test hook): every live state off the current
  // path is registered under exactly its own signature.
  bool register_invariant_ok() const;

 private:
  struct State {
    bool is_final = false;
    bool dead = false;
    std::vector<std::pair<int, int>> arcs;  // (letter, target), sorted
  };
  Signature signature_of(int q) const;
  int arc(int q, int letter) const;
  void set_arc(int q, int letter, int to);
  // Registers or merges path states deeper than depth `keep`.
  void minimize_path_from(size_t keep);
  Dfa materialize() const;

  std::string alphabet_;
  std::vector<State> states_;
  std::map<Signature, int> register_;
  std::vector<int> path_;  // states along prev_word_ from the initial
  std::string prev_word_;
  bool has_words_ = false;
  bool finished_ = false;
};

// Err::NotSorted, Err::UnknownSymbol; empty input gives the 0-state value.
Dfa daciuk_build(const std::vector<std::string>& words);
Dfa daciuk_build(const std::vector<std::string>& words, std::string alphabet);

// Minimal automaton for L(d) \ {w} (Err::WordNotAccepted if w not in L(d)).
// Clones the w-path so no other word is disturbed, unmarks the final clone,
// trims, then re-minimizes the cloned path bottom-up against a register of
// the untouched states. Requires d minimal; d may contain cycles.
Dfa remove_word(const Dfa& d, std::string_view w);

// Minimal automaton for L(d) u {w} (Err::WordAlreadyAccepted if w in L(d)).
// Mirror of remove_word: clones the path of the longest prefix of w present
// in d, appends fresh states for the rest, marks the last state final, then
// trims and re-minimizes the touched path. Requires d minimal.
Dfa add_word(const Dfa& d, std::string_view w);

}  // namespace fam
