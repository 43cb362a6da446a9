#include <cstdint>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fam/acyclic.hpp"
#include "fam/aut_io.hpp"
#include "fam/automaton.hpp"
#include "fam/brzozowski.hpp"
#include "fam/generators.hpp"
#include "fam/hopcroft.hpp"
#include "fam/moore.hpp"
#include "fam/oracle.hpp"
#include "fam/simple.hpp"

// Exit codes: 0 success / property holds, 1 property fails or domain error,
// 2 usage error (including an exhausted search limit), 3 malformed input.

namespace {

using namespace fam;

Dfa require_dfa(const ParsedAut& in) {
  std::optional<Dfa> d = as_dfa(in.nfa);
  if (!d) fail(Err::NotDeterministic, "input automaton is not deterministic");
  return *d;
}

QueuePolicy policy_from_name(const std::string& name) {
  if (name == "lifo") return QueuePolicy::LIFO;
  if (name == "two-sets") return QueuePolicy::TWO_SETS;
  return QueuePolicy::FIFO;
}

// Re-addresses the transitions of d over a larger alphabet (language kept).
Dfa widen_alphabet(const Dfa& d, const std::string& alphabet) {
  Dfa out = Dfa::blank(d.num_states, alphabet);
  out.initial = d.initial;
  out.finals = d.finals;
  for (int q = 0; q < d.num_states; ++q)
    for (int x = 0; x < d.k(); ++x) {
      int t = d.next(q, x);
      if (t >= 0) out.set_next(q, letter_index(alphabet, d.alphabet[x]), t);
    }
  return out;
}

// The minimal automaton of d's shape class: complete automata compare against
// the accessible Nerode quotient, partial ones against the trim quotient.
Dfa reference_minimal(const Dfa& d) {
  if (is_complete(d)) return naive_minimize(determinize(to_nfa(d)));
  return trim(naive_minimize(complete_with_sink(d)));
}

std::vector<int> parse_directive(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad directive entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad directive entry '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty directive sequence");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite automata minimization toolkit"};
  app.require_subcommand(1);

  // --- min ---------------------------------------------------------------
  std::string min_algo, min_policy = "fifo", min_in, min_out, min_dot;
  CLI::App* cmd_min = app.add_subcommand("min", "Minimize an automaton");
  cmd_min->add_option("--algo", min_algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"moore", "hopcroft", "brzozowski", "revuz", "az", "naive"}));
  cmd_min->add_option("--policy", min_policy, "Waiting-set policy (hopcroft only)")
      ->check(CLI::IsMember({"fifo", "lifo", "two-sets"}));
  cmd_min->add_option("input", min_in, "Input .aut file")->required();
  cmd_min->add_option("-o,--output", min_out, "Output .aut file")->required();
  cmd_min->add_option("--dot", min_dot, "Also export the result as Graphviz");

  // --- dict --------------------------------------------------------------
  CLI::App* cmd_dict = app.add_subcommand("dict", "Build and edit dictionary automata");
  cmd_dict->require_subcommand(1);
  std::string dict_words, dict_method, dict_out, dict_aut, dict_word;
  CLI::App* dict_build = cmd_dict->add_subcommand("build", "Build a minimal automaton from a wordlist");
  dict_build->add_option("words", dict_words, "Wordlist file, one word per line")->required();
  dict_build->add_option("--method", dict_method, "Construction method")
      ->required()
      ->check(CLI::IsMember({"daciuk", "trie-revuz"}));
  dict_build->add_option("-o,--output", dict_out, "Output .aut file")->required();
  CLI::App* dict_add = cmd_dict->add_subcommand("add", "Add one word (rewrites the file)");
  dict_add->add_option("automaton", dict_aut, "Minimal .aut file to edit")->required();
  dict_add->add_option("word", dict_word, "Word to add")->required();
  CLI::App* dict_remove = cmd_dict->add_subcommand("remove", "Remove one word (rewrites the file)");
  dict_remove->add_option("automaton", dict_aut, "Minimal .aut file to edit")->required();
  dict_remove->add_option("word", dict_word, "Word to remove")->required();

  // --- gen ---------------------------------------------------------------
  CLI::App* cmd_gen = app.add_subcommand("gen", "Generate benchmark families");
  cmd_gen->require_subcommand(1);
  int gen_n = 0;
  std::string gen_word, gen_directive, gen_out;
  CLI::App* gen_unary_cmd = cmd_gen->add_subcommand("unary", "Unary chain automaton");
  gen_unary_cmd->add_option("n", gen_n)->required();
  CLI::App* gen_dyck_cmd = cmd_gen->add_subcommand("dyck", "Bounded-counter automaton");
  gen_dyck_cmd->add_option("n", gen_n)->required();
  CLI::App* gen_cyclic_cmd = cmd_gen->add_subcommand("cyclic", "Cyclic automaton of a binary word");
  gen_cyclic_cmd->add_option("word", gen_word)->required();
  CLI::App* gen_debruijn_cmd = cmd_gen->add_subcommand("debruijn", "Binary de Bruijn word");
  gen_debruijn_cmd->add_option("order", gen_n)->required();
  CLI::App* gen_fib_cmd = cmd_gen->add_subcommand("fib", "Fibonacci word prefix");
  gen_fib_cmd->add_option("length", gen_n)->required();
  CLI::App* gen_sturmian_cmd = cmd_gen->add_subcommand("sturmian", "Standard Sturmian word prefix");
  gen_sturmian_cmd->add_option("directive", gen_directive, "Comma-separated directive entries")->required();
  gen_sturmian_cmd->add_option("length", gen_n)->required();
  for (CLI::App* g : {gen_unary_cmd, gen_dyck_cmd, gen_cyclic_cmd, gen_debruijn_cmd, gen_fib_cmd, gen_sturmian_cmd})
    g->add_option("-o,--output", gen_out, "Output file")->required();

  // --- check -------------------------------------------------------------
  CLI::App* cmd_check = app.add_subcommand("check", "Decide properties (exit code carries the answer)");
  cmd_check->require_subcommand(1);
  std::string check_a, check_b;
  bool check_exhaustive = false;
  long long check_limit = 1000000;
  CLI::App* check_equiv = cmd_check->add_subcommand("equiv", "Language equivalence of two automata");
  check_equiv->add_option("a", check_a)->required();
  check_equiv->add_option("b", check_b)->required();
  CLI::App* check_minimal = cmd_check->add_subcommand("minimal", "Is the automaton minimal?");
  check_minimal->add_option("a", check_a)->required();
  CLI::App* check_slow = cmd_check->add_subcommand("slow", "Is the automaton slow (maximal depth)?");
  check_slow->add_option("a", check_a)->required();
  check_slow->add_flag("--exhaustive", check_exhaustive, "Also enumerate every splitter execution");
  check_slow->add_option("--limit", check_limit, "Configuration budget for --exhaustive");
  CLI::App* check_simple = cmd_check->add_subcommand("simple", "Are all nontrivial SCCs simple cycles?");
  check_simple->add_option("a", check_a)->required();

  // --- bench -------------------------------------------------------------
  CLI::App* cmd_bench = app.add_subcommand("bench", "Benchmarks");
  cmd_bench->require_subcommand(1);
  int bench_n = 0, bench_k = 0, bench_samples = 0;
  uint64_t bench_seed = 0;
  CLI::App* bench_depth = cmd_bench->add_subcommand("depth", "Refinement-depth statistics on random automata");
  bench_depth->add_option("--n", bench_n, "States per sample")->required()->check(CLI::PositiveNumber);
  bench_depth->add_option("--k", bench_k, "Alphabet size")->required()->check(CLI::Range(1, 26));
  bench_depth->add_option("--samples", bench_samples, "Sample count")->required()->check(CLI::PositiveNumber);
  bench_depth->add_option("--seed", bench_seed, "Base seed")->required();

  // --- trace -------------------------------------------------------------
  CLI::App* cmd_trace = app.add_subcommand("trace", "Export an execution trace");
  cmd_trace->require_subcommand(1);
  std::string trace_in, trace_out, trace_policy = "fifo";
  CLI::App* trace_hopcroft = cmd_trace->add_subcommand("hopcroft", "Splitter-by-splitter trace");
  trace_hopcroft->add_option("input", trace_in)->required();
  trace_hopcroft->add_option("--policy", trace_policy)->check(CLI::IsMember({"fifo", "lifo", "two-sets"}));
  trace_hopcroft->add_option("-o,--output", trace_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_min->parsed()) {
      ParsedAut in = parse_aut_file(min_in);
      int states_in = in.nfa.num_states;
      Dfa out;
      long long work = 0, max_removals = 0;
      if (min_algo == "brzozowski") {
        out = brzozowski_minimize(in.nfa);
      } else if (min_algo == "revuz" || min_algo == "az") {
        Dfa d = trim(require_dfa(in));
        out = min_algo == "revuz" ? revuz_minimize(d) : az_minimize(d);
      } else {
        Dfa d = complete_with_sink(trim(require_dfa(in)));
        if (min_algo == "moore") {
          out = moore_minimize(d).dfa;
        } else if (min_algo == "naive") {
          out = naive_minimize(d);
        } else {
          HopcroftResult res = hopcroft_minimize(d, policy_from_name(min_policy));
          out = res.dfa;
          work = res.trace.work;
          max_removals = res.trace.max_removals();
        }
      }
      write_file(min_out, print_aut(out));
      if (!min_dot.empty()) write_file(min_dot, to_dot(to_nfa(out)));
      std::cout << "states_in=" << states_in << "\n";
      std::cout << "states_out=" << out.num_states << "\n";
      if (min_algo == "hopcroft") {
        std::cout << "work=" << work << "\n";
        std::cout << "max_removals=" << max_removals << "\n";
      }
      return 0;
    }

    if (dict_build->parsed()) {
      std::vector<std::string> words = read_words_file(dict_words);
      Dfa out = dict_method == "daciuk" ? daciuk_build(words) : revuz_minimize(build_trie(words));
      write_file(dict_out, print_aut(out));
      return 0;
    }
    if (dict_add->parsed() || dict_remove->parsed()) {
      Dfa d = require_dfa(parse_aut_file(dict_aut));
      Dfa out = dict_add->parsed() ? add_word(d, dict_word) : remove_word(d, dict_word);
      write_file(dict_aut, print_aut(out));
      return 0;
    }

    if (cmd_gen->parsed()) {
      std::string bytes;
      if (gen_unary_cmd->parsed()) bytes = print_aut(gen_unary(gen_n));
      else if (gen_dyck_cmd->parsed()) bytes = print_aut(gen_dyck(gen_n));
      else if (gen_cyclic_cmd->parsed()) bytes = print_aut(gen_cyclic(gen_word));
      else if (gen_debruijn_cmd->parsed()) bytes = debruijn_word(gen_n) + "\n";
      else if (gen_fib_cmd->parsed()) bytes = fibonacci_word(gen_n) + "\n";
      else bytes = sturmian_word(parse_directive(gen_directive), gen_n) + "\n";
      write_file(gen_out, bytes);
      return 0;
    }

    if (check_equiv->parsed()) {
      ParsedAut a = parse_aut_file(check_a);
      ParsedAut b = parse_aut_file(check_b);
      std::set<char> symbols;
      symbols.insert(a.nfa.alphabet.begin(), a.nfa.alphabet.end());
      symbols.insert(b.nfa.alphabet.begin(), b.nfa.alphabet.end());
      std::string alphabet(symbols.begin(), symbols.end());
      EquivalenceResult res = equivalent(widen_alphabet(determinize(a.nfa), alphabet),
                                         widen_alphabet(determinize(b.nfa), alphabet));
      if (!res.equivalent) {
        std::cerr << "not equivalent; witness: \"" << res.witness << "\"\n";
        return 1;
      }
      return 0;
    }
    if (check_minimal->parsed()) {
      Dfa d = require_dfa(parse_aut_file(check_a));
      Dfa ref = reference_minimal(d);
      if (!isomorphic(d, ref)) {
        std::cerr << "not minimal: " << d.num_states << " states, minimal has " << ref.num_states << "\n";
        return 1;
      }
      return 0;
    }
    if (check_slow->parsed()) {
      Dfa d = require_dfa(parse_aut_file(check_a));
      int depth = moore_depth(d);
      if (depth != d.num_states - 2) {
        std::cerr << "not slow: depth " << depth << ", maximal is " << d.num_states - 2 << "\n";
        return 1;
      }
      if (check_exhaustive && !is_slow_hopcroft(d, check_limit)) {
        std::cerr << "not slow: some splitter execution makes a non-uniform split\n";
        return 1;
      }
      return 0;
    }
    if (check_simple->parsed()) {
      if (!is_simple(require_dfa(parse_aut_file(check_a)))) {
        std::cerr << "not simple: some nontrivial SCC is not a single cycle\n";
        return 1;
      }
      return 0;
    }

    if (bench_depth->parsed()) {
      long long total = 0;
      for (int i = 0; i < bench_samples; ++i) {
        Dfa d = random_dfa(bench_n, bench_k, derive_seed(bench_seed, static_cast<uint64_t>(i)));
        int depth = moore_depth(d);
        total += depth;
        std::cout << bench_n << '\t' << bench_k << '\t' << i << '\t' << depth << "\n";
      }
      std::printf("mean_depth=%.6f\n", static_cast<double>(total) / bench_samples);
      return 0;
    }

    if (trace_hopcroft->parsed()) {
      Dfa d = complete_with_sink(trim(require_dfa(parse_aut_file(trace_in))));
      HopcroftResult res = hopcroft_minimize(d, policy_from_name(trace_policy));
      write_file(trace_out, format_trace(res.trace, d.alphabet));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Err::Parse) return 3;
    if (e.code() == Err::LimitExceeded) return 2;
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
