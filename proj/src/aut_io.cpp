#include "fam/aut_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace fam {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  fail(Err::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

int parse_state_id(const std::string& tok, int num_states, int line_no) {
  size_t used = 0;
  int id = -1;
  try {
    id = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected state id, got '" + tok + "'");
  }
  if (used != tok.size() || id < 0) parse_fail(line_no, "expected state id, got '" + tok + "'");
  if (id >= num_states) parse_fail(line_no, "state id " + tok + " out of range");
  return id;
}

}  // namespace

ParsedAut parse_aut(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_states = false;
  bool have_alphabet = false;
  Nfa a;
  std::set<Transition> seen;
  std::set<std::pair<int, int>> det_pairs;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream toks(line);
    std::string word;
    if (!(toks >> word)) continue;  // blank or comment-only line

    if (word == "states") {
      if (have_states) parse_fail(line_no, "duplicate states directive");
      std::string n;
      if (!(toks >> n)) parse_fail(line_no, "states needs a count");
      try {
        a.num_states = std::stoi(n);
      } catch (const std::exception&) {
        parse_fail(line_no, "bad state count '" + n + "'");
      }
      if (a.num_states < 0) parse_fail(line_no, "bad state count '" + n + "'");
      have_states = true;
    } else if (word == "alphabet") {
      if (have_alphabet) parse_fail(line_no, "duplicate alphabet directive");
      std::string sym;
      while (toks >> sym) {
        if (sym.size() != 1 || !std::isprint(static_cast<unsigned char>(sym[0])))
          parse_fail(line_no, "alphabet symbols are single printable characters, got '" + sym + "'");
        if (a.alphabet.find(sym[0]) != std::string::npos)
          parse_fail(line_no, std::string("duplicate alphabet symbol '") + sym[0] + "'");
        a.alphabet.push_back(sym[0]);
      }
      have_alphabet = true;
    } else if (word == "initial" || word == "final") {
      if (!have_states) parse_fail(line_no, word + " before states directive");
      auto& ids = word == "initial" ? a.initials : a.finals;
      std::string tok;
      while (toks >> tok) ids.push_back(parse_state_id(tok, a.num_states, line_no));
    } else if (word == "trans") {
      if (!have_states) parse_fail(line_no, "trans before states directive");
      std::string p, s, q;
      if (!(toks >> p >> s >> q)) parse_fail(line_no, "trans needs: source symbol target");
      std::string extra;
      if (toks >> extra) parse_fail(line_no, "trailing tokens after trans");
      if (s.size() != 1) parse_fail(line_no, "transition symbol must be a single character");
      int letter = letter_index(a.alphabet, s[0]);
      if (letter < 0) parse_fail(line_no, "symbol '" + s + "' not in alphabet");
      Transition t{parse_state_id(p, a.num_states, line_no), letter,
                   parse_state_id(q, a.num_states, line_no)};
      seen.insert(t);
      det_pairs.emplace(t.from, t.letter);
    } else {
      parse_fail(line_no, "unknown directive '" + word + "'");
    }
  }
  if (!have_states) fail(Err::Parse, "missing states directive");

  std::sort(a.initials.begin(), a.initials.end());
  a.initials.erase(std::unique(a.initials.begin(), a.initials.end()), a.initials.end());
  std::sort(a.finals.begin(), a.finals.end());
  a.finals.erase(std::unique(a.finals.begin(), a.finals.end()), a.finals.end());
  a.transitions.assign(seen.begin(), seen.end());

  // Duplicate identical transition lines collapse in `seen`, so determinism
  // is exactly: one initial state, no (state, symbol) pair used twice.
  bool deterministic = a.initials.size() == 1 && det_pairs.size() == a.transitions.size();
  return {std::move(a), deterministic};
}

ParsedAut parse_aut_text(const std::string& text) {
  std::istringstream in(text);
  return parse_aut(in);
}

ParsedAut parse_aut_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open " + path);
  return parse_aut(in);
}

std::string print_aut(const Nfa& a) {
  std::ostringstream out;
  out << "states " << a.num_states << "\n";
  if (!a.alphabet.empty()) {
    out << "alphabet";
    for (char c : a.alphabet) out << ' ' << c;
    out << "\n";
  }
  auto id_line = [&](const char* name, const std::vector<int>& ids) {
    if (ids.empty()) return;
    out << name;
    for (int q : ids) out << ' ' << q;
    out << "\n";
  };
  id_line("initial", a.initials);
  id_line("final", a.finals);
  for (const Transition& t : a.transitions)
    out << "trans " << t.from << ' ' << a.alphabet[t.letter] << ' ' << t.to << "\n";
  return out.str();
}

std::string print_aut(const Dfa& d) { return print_aut(to_nfa(d)); }

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::Parse, "cannot open " + path + " for writing");
  out << bytes;
}

std::vector<std::string> read_words(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

std::vector<std::string> read_words_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open " + path);
  return read_words(in);
}

std::string to_dot(const Nfa& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q : a.finals) out << "  " << q << " [shape=doublecircle];\n";
  for (size_t i = 0; i < a.initials.size(); ++i) {
    out << "  __start" << i << " [shape=point];\n";
    out << "  __start" << i << " -> " << a.initials[i] << ";\n";
  }
  for (const Transition& t : a.transitions)
    out << "  " << t.from << " -> " << t.to << " [label=\"" << a.alphabet[t.letter] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace fam
