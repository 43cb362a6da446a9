#pragma once

#include "fam/automaton.hpp"

namespace fam {

// trim(determinize(reverse(a))). When `a` is deterministic and accessible the
// result is the minimal automaton of the reversed language.
Dfa codeterminize(const Nfa& a);
Dfa codeterminize(const Dfa& d);

// Double reversal: codeterminize(codeterminize(a)). Accepts any Nfa and
// returns the trim minimal Dfa; the empty language comes back as the 0-state
// value.
Dfa brzozowski_minimize(const Nfa& a);
Dfa brzozowski_minimize(const Dfa& d);

}  // namespace fam
