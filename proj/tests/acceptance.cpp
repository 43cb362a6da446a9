// Acceptance gate: runs the six release criteria end to end and prints one
// PASS/FAIL line per criterion. Exit status is nonzero when any line fails.
// All tolerances and budgets are pinned here, in code.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fam/acyclic.hpp"
#include "fam/automaton.hpp"
#include "fam/brzozowski.hpp"
#include "fam/generators.hpp"
#include "fam/hopcroft.hpp"
#include "fam/moore.hpp"
#include "fam/oracle.hpp"
#include "fam/partition.hpp"
#include "fam/simple.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"

using namespace fam;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Records the first failed expectation; later ones still execute so the
// whole corpus is exercised either way.
struct Criterion {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int walk(const Dfa& d, std::string_view w) {
  if (d.num_states == 0) return -1;
  int q = d.initial;
  for (char ch : w) {
    int a = letter_index(d.alphabet, ch);
    if (a < 0) return -1;
    q = d.next(q, a);
    if (q < 0) return -1;
  }
  return q;
}

// Shared Hopcroft cost accounting, filled by criteria 2 and 3 and judged by
// criterion 3: every processed-splitter count removals[(q,a)] must stay at or
// under floor(log2 n) + 1 and total work under k*n*(floor(log2 n)+1).
struct Accounting {
  long long traces = 0;
  long long entry_violations = 0;
  long long work_violations = 0;

  void record(const HopcroftTrace& t) {
    ++traces;
    if (t.num_states <= 0) return;
    long long bound = std::bit_width(static_cast<unsigned long long>(t.num_states));
    for (long long r : t.removals)
      if (r > bound) ++entry_violations;
    if (t.work > static_cast<long long>(t.num_letters) * t.num_states * bound)
      ++work_violations;
  }
};

Accounting g_accounting;

// ---------------------------------------------------------------------------
// Criterion 1: worked-example golden values, exact.
bool criterion1(std::string& detail) {
  Criterion c;
  auto t0 = Clock::now();

  // Moore refinement on the ten-state example: M_1, M_2 = identity, depth 2.
  Dfa ten = fixtures::minimal_ten();
  MooreTrace mt = moore_sequence(ten);
  Partition m1 = Partition::from_class_of({0, 1, 1, 0, 0, 2, 2, 3, 4, 3});
  std::vector<int> iota(10);
  for (int q = 0; q < 10; ++q) iota[static_cast<size_t>(q)] = q;
  c.expect(mt.depth() == 2, "ten-state example: Moore depth != 2");
  c.expect(mt.partitions.size() >= 3 && mt.partitions[1] == m1,
           "ten-state example: M_1 mismatch");
  c.expect(mt.partitions.size() >= 3 && mt.partitions[2] == Partition::from_class_of(iota),
           "ten-state example: M_2 is not the identity partition");

  // Hopcroft's first step (take (F,a)): resulting splits and waiting set.
  HopcroftOptions opts;
  opts.policy = QueuePolicy::FIFO;
  opts.record_pending = true;
  HopcroftResult hr = hopcroft_minimize(ten, opts);
  c.expect(!hr.trace.steps.empty(), "ten-state example: empty Hopcroft trace");
  if (!hr.trace.steps.empty()) {
    const HopcroftStep& s = hr.trace.steps[0];
    c.expect(s.letter == 0, "first step should take letter a");
    c.expect(s.splitter == std::vector<int>{7, 8, 9}, "first step should take the final class");
    using Triple = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
    std::set<Triple> got;
    for (const SplitEvent& e : s.splits) got.insert({e.old_members, e.kept, e.created});
    std::set<Triple> want = {
        {{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4}, {5, 6}},
        {{7, 8, 9}, {7, 9}, {8}},
    };
    c.expect(got == want, "first-step splits are not 01234|56 and 79|8");
    std::vector<std::pair<std::vector<int>, int>> pend = {
        {{5, 6}, 0}, {{8}, 0}, {{5, 6}, 1}, {{7, 9}, 1}, {{8}, 1}};
    c.expect(s.pending_after == pend,
             "waiting set after the first step is not {(79,b),(8,b),(8,a),(56,a),(56,b)}");
  }
  c.expect(isomorphic(hr.dfa, ten), "ten-state example should already be minimal");

  // Preimage table, entry for entry (classes of M_1 x both letters).
  c.expect(preimage(ten, {1, 2}, 0) == std::vector<int>{0, 1, 7}, "a-preimage of {1,2}");
  c.expect(preimage(ten, {5, 6}, 0) == std::vector<int>{4, 9}, "a-preimage of {5,6}");
  c.expect(preimage(ten, {7, 9}, 0) == std::vector<int>{5, 8}, "a-preimage of {7,9}");
  c.expect(preimage(ten, {8}, 0) == std::vector<int>{6}, "a-preimage of {8}");
  c.expect(preimage(ten, {1, 2}, 1) == std::vector<int>{1, 7}, "b-preimage of {1,2}");
  c.expect(preimage(ten, {5, 6}, 1) == std::vector<int>{2}, "b-preimage of {5,6}");
  c.expect(preimage(ten, {7, 9}, 1) == std::vector<int>{0, 3, 5, 8}, "b-preimage of {7,9}");
  c.expect(preimage(ten, {8}, 1) == std::vector<int>{4, 6}, "b-preimage of {8}");
  c.expect(seconds_since(t0) < 1.0, "worked-example goldens exceeded 1 s");

  // Non-simulation: no Hopcroft execution ever passes through M_1.
  auto t1 = Clock::now();
  ExecutionEnumeration en = enumerate_executions(ten, 1000000);
  c.expect(!en.limit_exceeded, "execution enumeration exceeded the 10^6-node limit");
  bool m1_seen =
      std::find(en.partitions.begin(), en.partitions.end(), m1) != en.partitions.end();
  c.expect(!m1_seen, "a Hopcroft execution reached Moore's M_1 partition");
  c.expect(seconds_since(t1) < 30.0, "execution enumeration exceeded 30 s");

  // Incremental dictionary sequence aa, aba, ba, bba, bc.
  DaciukBuilder b("abc");
  b.insert("aa");
  b.insert("aba");
  Dfa after_aba = b.snapshot();
  c.expect(isomorphic(after_aba, fixtures::dict_after_aba()), "snapshot after aba mismatch");
  c.expect(walk(after_aba, "aa") != walk(after_aba, "aba"),
           "after aba the two accepting leaves must still be distinct");
  b.insert("ba");
  Dfa after_ba = b.snapshot();
  c.expect(isomorphic(after_ba, fixtures::dict_after_ba()), "snapshot after ba mismatch");
  c.expect(walk(after_ba, "aa") == walk(after_ba, "aba"),
           "inserting ba must fuse the two accepting leaf states");
  b.insert("bba");
  c.expect(isomorphic(b.snapshot(), fixtures::dict_after_bba()), "snapshot after bba mismatch");
  b.insert("bc");
  Dfa after_bc = b.snapshot();
  c.expect(after_bc.num_states == 6, "snapshot after bc should have 6 states");
  c.expect(isomorphic(after_bc, fixtures::dict_after_bc()), "snapshot after bc mismatch");
  Dfa finished = b.finish();
  c.expect(isomorphic(finished, fixtures::dict_final()),
           "finished dictionary automaton is not the 5-state minimal result");

  // Word removal: lang7 minus abab.
  Dfa lang = fixtures::lang7();
  Dfa removed = remove_word(lang, "abab");
  c.expect(removed.num_states == 9, "remove_word(lang7, abab) should have 9 states");
  c.expect(isomorphic(removed, fixtures::minimal9()), "remove_word(lang7, abab) shape mismatch");
  bool flips_only_abab = accepts(lang, "abab") && !accepts(removed, "abab");
  for (const std::string& w : helpers::all_words("abc", 6))
    if (w != "abab" && accepts(lang, w) != accepts(removed, w)) flips_only_abab = false;
  c.expect(flips_only_abab, "remove_word changed some word other than abab");

  // Cycle fusion on simple automata: 12 -> 5 and the wrapping example 8 -> 4.
  Dfa az12 = az_minimize(fixtures::simple12());
  c.expect(az12.num_states == 5, "cycle fusion on the 12-state example should give 5 states");
  c.expect(isomorphic(az12, fixtures::simple12_min()), "12-state example: wrong minimal shape");
  Dfa az8 = az_minimize(fixtures::wrap8());
  c.expect(az8.num_states == 4, "wrapping example should give 4 states");
  c.expect(isomorphic(az8, fixtures::wrap8_min()), "wrapping example: wrong minimal shape");

  // Determinization blow-up: the (n+1)-state 'a at position n from the end'
  // family has a 2^n-state minimal DFA.
  auto t2 = Clock::now();
  for (int n = 3; n <= 10; ++n) {
    Dfa m = brzozowski_minimize(fixtures::window_nfa(n));
    c.expect(m.num_states == (1 << n),
             "blow-up family at n=" + std::to_string(n) + ": wrong minimal size");
  }
  c.expect(seconds_since(t2) < 10.0, "blow-up family exceeded 10 s");

  char buf[160];
  std::snprintf(buf, sizeof buf, "worked-example goldens, exact (%.2f s)", seconds_since(t0));
  detail = c.ok ? buf : c.why;
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 2: cross-algorithm agreement on 1000 random complete DFAs and the
// exhaustive corpus of word sets (every set of at most 6 words of length at
// most 4 over {a,b}).
bool criterion2(std::string& detail) {
  Criterion c;
  auto t0 = Clock::now();

  for (uint64_t i = 0; i < 1000; ++i) {
    uint64_t s = derive_seed(0x20260814, i);
    int n = 1 + static_cast<int>(s % 25);
    int k = 1 + static_cast<int>((s >> 8) % 3);
    Dfa d = random_dfa(n, k, derive_seed(s, 7));
    std::string tag = " (random sample " + std::to_string(i) + ")";

    Dfa ref = trim(naive_minimize(d));
    Dfa mo = moore_minimize(d).dfa;
    c.expect(isomorphic(trim(mo), ref), "moore disagrees with the oracle" + tag);
    c.expect(equivalent(mo, d).equivalent, "moore changed the language" + tag);
    for (QueuePolicy policy : {QueuePolicy::FIFO, QueuePolicy::LIFO, QueuePolicy::TWO_SETS}) {
      HopcroftResult h = hopcroft_minimize(d, policy);
      g_accounting.record(h.trace);
      c.expect(isomorphic(trim(h.dfa), ref), "hopcroft disagrees with the oracle" + tag);
      c.expect(equivalent(h.dfa, d).equivalent, "hopcroft changed the language" + tag);
    }
    Dfa bz = brzozowski_minimize(d);
    c.expect(isomorphic(bz, ref), "brzozowski disagrees with the oracle" + tag);
    c.expect(equivalent(bz, d).equivalent, "brzozowski changed the language" + tag);
  }

  // Exhaustive word-set corpus. Vocabulary: the 31 words of length <= 4 over
  // {a,b} in lexicographic order; visit every subset of size <= 6.
  std::vector<std::string> vocab = helpers::all_words("ab", 4);
  std::sort(vocab.begin(), vocab.end());
  long long visited = 0;
  std::vector<int> idx;
  std::vector<std::string> words;
  std::function<void(size_t)> visit_all = [&](size_t start) {
    ++visited;
    words.clear();
    for (int j : idx) words.push_back(vocab[static_cast<size_t>(j)]);
    std::string tag = " (word set #" + std::to_string(visited) + ")";

    Dfa d = daciuk_build(words, "ab");
    c.expect(language_of(d) == words, "incremental build: wrong language" + tag);
    Dfa trie = build_trie(words, "ab");
    // The fusion algorithms require trim input; only the empty set's trie
    // (a lone dead root) is not already trim.
    Dfa fus = trim(trie);
    Dfa rv = revuz_minimize(fus);
    Dfa az = az_minimize(fus);
    c.expect(az == rv, "cycle fusion and height fusion disagree on an acyclic input" + tag);
    c.expect(isomorphic(rv, d), "height fusion disagrees with incremental build" + tag);
    Dfa comp = complete_with_sink(trie);
    c.expect(isomorphic(trim(naive_minimize(comp)), d), "oracle disagrees" + tag);
    HopcroftResult h = hopcroft_minimize(comp, QueuePolicy::FIFO);
    g_accounting.record(h.trace);
    c.expect(isomorphic(trim(h.dfa), d), "hopcroft disagrees" + tag);
    c.expect(isomorphic(trim(moore_minimize(comp).dfa), d), "moore disagrees" + tag);
    c.expect(isomorphic(brzozowski_minimize(trie), d), "brzozowski disagrees" + tag);

    if (idx.size() == 6) return;
    for (size_t j = start; j < vocab.size(); ++j) {
      idx.push_back(static_cast<int>(j));
      visit_all(j + 1);
      idx.pop_back();
    }
  };
  visit_all(0);
  c.expect(visited == 942649, "word-set corpus should contain 942649 sets");

  double secs = seconds_since(t0);
  c.expect(secs < 120.0, "cross-algorithm suite exceeded 2 min");
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "1000 random DFAs + %lld word sets, all minimizers agree (%.1f s)", visited,
                secs);
  detail = c.ok ? buf : c.why;
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 3: Hopcroft cost accounting over every trace collected above plus
// the de Bruijn cyclic family.
bool criterion3(std::string& detail) {
  Criterion c;
  for (int order = 3; order <= 10; ++order) {
    Dfa d = gen_cyclic(debruijn_word(order));
    for (QueuePolicy policy : {QueuePolicy::FIFO, QueuePolicy::LIFO, QueuePolicy::TWO_SETS})
      g_accounting.record(hopcroft_minimize(d, policy).trace);
  }
  c.expect(g_accounting.traces > 945000, "accounting corpus unexpectedly small");
  c.expect(g_accounting.entry_violations == 0,
           std::to_string(g_accounting.entry_violations) +
               " transitions exceeded floor(log2 n)+1 removals");
  c.expect(g_accounting.work_violations == 0,
           std::to_string(g_accounting.work_violations) +
               " traces exceeded the k*n*(floor(log2 n)+1) work bound");
  char buf[160];
  std::snprintf(buf, sizeof buf, "removal and work bounds hold on %lld traces",
                g_accounting.traces);
  detail = c.ok ? buf : c.why;
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 4: slow automata.
bool criterion4(std::string& detail) {
  Criterion c;
  auto t0 = Clock::now();

  for (int n = 2; n <= 10; ++n) {
    Dfa u = gen_unary(n);
    c.expect(moore_depth(u) == n - 1, "unary chain n=" + std::to_string(n) + ": wrong depth");
    c.expect(is_slow_moore(u), "unary chain n=" + std::to_string(n) + " should be slow");
    Dfa y = gen_dyck(n);
    c.expect(moore_depth(y) == n, "bounded counter n=" + std::to_string(n) + ": wrong depth");
    c.expect(is_slow_moore(y), "bounded counter n=" + std::to_string(n) + " should be slow");
  }

  // The two slowness notions coincide on automata whose refinement reaches
  // the discrete partition (all states pairwise distinguishable); automata
  // with Nerode-merged states can be vacuously slow for Hopcroft (no pending
  // splitter ever splits) while never slow for Moore.  Assert the forward
  // implication everywhere and the biconditional on distinguishable samples.
  int slow_seen = 0;
  int in_domain = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    int n = 2 + static_cast<int>(seed % 6);
    Dfa d = random_dfa(n, 2, derive_seed(0x510, seed));
    bool slow_m = is_slow_moore(d);
    bool slow_h = is_slow_hopcroft(d, 5000000);
    slow_seen += slow_m ? 1 : 0;
    if (slow_m)
      c.expect(slow_h, "slow-for-Moore sample not slow-for-Hopcroft at seed " +
                           std::to_string(seed));
    if (nerode_partition(d).num_classes == d.num_states) {
      ++in_domain;
      c.expect(slow_m == slow_h,
               "slow-for-Moore and slow-for-Hopcroft disagree at seed " + std::to_string(seed));
    }
  }
  c.expect(in_domain >= 25, "too few pairwise-distinguishable samples");

  for (int len : {8, 13, 21, 34, 55, 89}) {
    Dfa d = gen_cyclic(fibonacci_word(len));
    HopcroftResult h = hopcroft_minimize(d, QueuePolicy::FIFO);
    c.expect(!h.trace.steps.empty(), "Fibonacci cyclic automaton produced no splitter steps");
    for (const HopcroftStep& s : h.trace.steps)
      c.expect(s.pending_at_take == 1,
               "Fibonacci cyclic |w|=" + std::to_string(len) +
                   ": waiting set size != 1 at some take");
  }

  double secs = seconds_since(t0);
  c.expect(secs < 60.0, "slow-automata suite exceeded 1 min");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "slow families exact, equivalence on 50 seeds (%d slow), unique executions "
                "(%.1f s)",
                slow_seen, secs);
  detail = c.ok ? buf : c.why;
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 5: average-depth trend at k = 2 (empirical, generous tolerance).
bool criterion5(std::string& detail) {
  Criterion c;
  auto t0 = Clock::now();
  auto stats = [](int n, uint64_t base) {
    double total = 0;
    int mx = 0;
    for (uint64_t i = 0; i < 200; ++i) {
      int depth = moore_depth(random_dfa(n, 2, derive_seed(base, i)));
      total += depth;
      mx = std::max(mx, depth);
    }
    return std::make_pair(total / 200.0, mx);
  };
  auto [mean100, max100] = stats(100, 0x100);
  auto [mean1000, max1000] = stats(1000, 0x1000);
  (void)max100;
  c.expect(mean100 > 0, "mean depth at n=100 should be positive");
  c.expect(mean1000 < 2.0 * mean100,
           "mean depth at n=1000 is not below twice the mean at n=100");
  c.expect(max1000 < 100, "max depth at n=1000 reached n/10");
  double secs = seconds_since(t0);
  c.expect(secs < 120.0, "average-depth trend exceeded 2 min");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "mean depth %.2f @ n=100 vs %.2f @ n=1000, max %d (%.1f s)", mean100,
                mean1000, max1000, secs);
  detail = c.ok ? buf : c.why;
  return c.ok;
}

// ---------------------------------------------------------------------------
// Criterion 6: dynamic add/remove round trip with oracle minimality.
bool criterion6(std::string& detail) {
  Criterion c;
  for (uint64_t i = 0; i < 100; ++i) {
    std::vector<std::string> words = helpers::random_word_set(8, 6, 2, derive_seed(0x600, i));
    Dfa d = daciuk_build(words, "ab");
    const std::string& w = words[derive_seed(0x601, i) % words.size()];
    std::string tag = " (pair " + std::to_string(i) + ")";

    Dfa removed = remove_word(d, w);
    if (removed.num_states == 0) {
      c.expect(words.size() == 1, "empty result although other words remain" + tag);
    } else {
      Dfa ref = trim(naive_minimize(complete_with_sink(removed)));
      c.expect(isomorphic(removed, ref), "remove_word output fails the oracle check" + tag);
    }
    Dfa back = add_word(removed, w);
    c.expect(isomorphic(back, d), "add_word(remove_word(d,w),w) is not d again" + tag);
  }
  detail = c.ok ? "100 remove/add round trips, all outputs oracle-minimal" : c.why;
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6}};
  bool all_ok = true;
  for (const Entry& e : entries) {
    std::string detail;
    bool ok = false;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("unexpected exception: ") + ex.what();
    }
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", e.number, detail.c_str());
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
