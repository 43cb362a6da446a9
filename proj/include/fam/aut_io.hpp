#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fam/automaton.hpp"

namespace fam {

struct ParsedAut {
  Nfa nfa;
  // True when the automaton has exactly one initial state and at most one
  // transition per (state, symbol) pair, i.e. as_dfa(nfa) will succeed.
  bool deterministic = false;
};

// .aut text format, one directive per line, `#` starts a comment:
//   states N
//   alphabet s1 s2 ...
//   initial q [q ...]
//   final q ...
//   trans p s q
// Throws Err::Parse on malformed input.
ParsedAut parse_aut(std::istream& in);
ParsedAut parse_aut_text(const std::string& text);
ParsedAut parse_aut_file(const std::string& path);

// Canonical serialization: directives in the order above, id lists ascending,
// transitions sorted by (source, letter, target), LF line endings. Satisfies
// parse(print(a)).nfa == a for every valid automaton value.
std::string print_aut(const Nfa& a);
std::string print_aut(const Dfa& d);

void write_file(const std::string& path, const std::string& bytes);

// Wordlist format: one word per line; blank lines ignored, CR stripped.
std::vector<std::string> read_words(std::istream& in);
std::vector<std::string> read_words_file(const std::string& path);

// Graphviz export; not a stability surface.
std::string to_dot(const Nfa& a);

}  // namespace fam
