#pragma once

#include <string>

#include "fam/automaton.hpp"
#include "fam/partition.hpp"

namespace fam {

// Quadratic table-filling baseline, independent of the refinement machinery:
// mark pairs with exactly one final state, propagate (p.a, q.a) marked =>
// (p,q) marked to fixpoint, quotient by the unmarked relation. Requires a
// complete automaton (Err::NotComplete).
Dfa naive_minimize(const Dfa& d);

// The state partition the table-filling run settles on.
Partition nerode_partition(const Dfa& d);

struct EquivalenceResult {
  bool equivalent = false;
  std::string witness;  // shortest word accepted by exactly one side
  explicit operator bool() const { return equivalent; }
};

// Language equality via BFS over the product of the sink-completed automata.
// Err::AlphabetMismatch when the alphabets differ.
EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

// Structural equality up to state renaming, for trim deterministic automata:
// compares BFS canonical forms (letter-ordered exploration, definedness and
// final flags included). Automata with unreachable states compare false.
bool isomorphic(const Dfa& a, const Dfa& b);

}  // namespace fam
