#include "fam/brzozowski.hpp"

namespace fam {

Dfa codeterminize(const Nfa& a) { return trim(determinize(reverse(a))); }

Dfa codeterminize(const Dfa& d) { return codeterminize(to_nfa(d)); }

Dfa brzozowski_minimize(const Nfa& a) { return codeterminize(codeterminize(a)); }

Dfa brzozowski_minimize(const Dfa& d) { return brzozowski_minimize(to_nfa(d)); }

}  // namespace fam
