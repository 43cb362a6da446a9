#pragma once

#include <vector>

#include "fam/automaton.hpp"
#include "fam/partition.hpp"

namespace fam {

// The refinement sequence M_0, M_1, ... M_{l+1} where M_0 = {F, F^c} (empty
// block dropped), each round refines by one-letter successors, and l is the
// first index with M_l = M_{l+1}. The stored list always ends with the two
// equal partitions, so depth() == partitions.size() - 2.
struct MooreTrace {
  std::vector<Partition> partitions;
  int depth() const { return static_cast<int>(partitions.size()) - 2; }
};

// Requires a complete automaton (Err::NotComplete). Each round costs O(kn):
// states are radix-sorted by (class(q), class(q.a1), ..., class(q.ak)).
MooreTrace moore_sequence(const Dfa& d);

struct MooreResult {
  Dfa dfa;
  // old state -> representative old state (smallest id in its class); the
  // representatives in ascending order are the new states 0, 1, ...
  std::vector<int> state_map;
  MooreTrace trace;
};

MooreResult moore_minimize(const Dfa& d);

int moore_depth(const Dfa& d);

// Quotient of a complete-or-partial Dfa by a right congruence. Class
// representative = smallest member; classes renumbered by representative.
Dfa quotient(const Dfa& d, const Partition& p, std::vector<int>* state_map = nullptr);

}  // namespace fam
