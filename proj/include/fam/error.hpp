#pragma once

#include <stdexcept>
#include <string>

namespace fam {

// Every library failure mode gets a stable code so callers (CLI, tests) can
// branch on the condition instead of parsing message text.
enum class Err {
  Parse,               // malformed .aut / wordlist input
  UnknownSymbol,       // word uses a symbol outside the alphabet
  NotComplete,         // algorithm requires a complete Dfa
  NotDeterministic,    // operation requires a deterministic automaton
  NotAcyclic,          // cycle found where an acyclic automaton is required
  NotSorted,           // incremental build fed out-of-order words
  WordNotAccepted,     // remove_word on a word outside the language
  WordAlreadyAccepted, // add_word on a word already in the language
  NotSimple,           // automaton has a nontrivial SCC that is not a cycle
  NotACycle,           // state list does not form a simple cycle
  GroundSetMismatch,   // partition operands over different ground sets
  TakeFromEmpty,       // take() on an empty splitter queue
  AlphabetMismatch,    // binary operation on automata with different alphabets
  LimitExceeded,       // exhaustive search exceeded its node budget
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace fam
