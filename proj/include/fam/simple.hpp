#pragma once

#include <vector>

#include "fam/automaton.hpp"

namespace fam {

// Strongly connected components in a deterministic, id-stable order:
// component ids are assigned so that every state keeps the component of its
// Tarjan root; comp_of[q] is dense in [0, num_comps).
struct SccResult {
  int num_comps = 0;
  std::vector<int> comp_of;
  // Nontrivial = more than one state, or a single state with a self-loop.
  std::vector<bool> nontrivial;
};
SccResult strongly_connected_components(const Dfa& d);

// True iff every state of a nontrivial SCC has exactly one outgoing edge
// whose target stays in that SCC (so each nontrivial SCC is one simple
// cycle). Counts edges, not successor vertices: two parallel letters around
// the same two states are two crossing cycles, not a simple one.
bool is_simple(const Dfa& d);

struct CycleProfile {
  std::vector<int> states;  // cyclic order, starting at the smallest id
  // weak_word[i] = signature of states[i] with every arc onto its in-cycle
  // successor replaced by the placeholder target -1, which orders before all
  // real state ids.
  std::vector<Signature> weak_word;
  int canonical_rotation = 0;  // index of the lexicographically least rotation
};

// Profile of a simple cycle given its state set (any order). Err::NotACycle
// if the states do not form one simple cycle of d.
CycleProfile weak_signature_word(const Dfa& d, const std::vector<int>& cycle);

// Booth's least-rotation algorithm: smallest index of the lexicographically
// least rotation, linear time. Nonempty input.
int minimal_rotation(std::string_view word);
int minimal_rotation(const std::vector<Signature>& word);

// Almeida-Zeitoun minimization for simple automata (Err::NotSimple). Works
// bottom-up over condensation heights: acyclic states merge by signature into
// a register, each cycle collapses to its primitive root (weak word
// periodicity), isomorphic cycles merge via their canonical rotations, and a
// wrapping fixpoint winds register-equivalent outside states onto minimized
// cycles. Input should be trim; acyclic inputs reproduce revuz_minimize
// exactly.
Dfa az_minimize(const Dfa& d);

}  // namespace fam
