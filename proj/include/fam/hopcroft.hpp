#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fam/automaton.hpp"
#include "fam/partition.hpp"

namespace fam {

struct SplitEvent {
  std::vector<int> old_members;  // the class before the split, ascending
  std::vector<int> kept;         // C \ hits — keeps the class id
  std::vector<int> created;      // C n hits — fresh class id
};

struct HopcroftStep {
  int letter = 0;
  std::vector<int> splitter;  // members of the taken class, snapshot at take()
  std::vector<SplitEvent> splits;
  int pending_at_take = 0;    // waiting-set size when this splitter was taken
  // Waiting set right after this step's splits, as (members, letter) sorted
  // by (letter, members). Recorded only when requested — it is O(queue) per
  // step and exists for golden tests.
  std::vector<std::pair<std::vector<int>, int>> pending_after;
};

struct HopcroftTrace {
  QueuePolicy policy = QueuePolicy::FIFO;
  int num_states = 0;
  int num_letters = 0;
  std::vector<HopcroftStep> steps;
  // Sum of |a^{-1}W| over processed splitters (W,a): the dominant cost term.
  long long work = 0;
  // removals[q*k + a] counts processed splitters (W,a) with q in W.
  std::vector<long long> removals;
  int cycles = 0;  // TWO_SETS swap count, 0 otherwise

  long long max_removals() const;
  long long removals_total() const;
};

struct HopcroftOptions {
  QueuePolicy policy = QueuePolicy::FIFO;
  bool record_pending = false;  // fill HopcroftStep::pending_after
};

struct HopcroftResult {
  Dfa dfa;
  std::vector<int> state_map;  // old state -> representative old state
  Partition partition;
  HopcroftTrace trace;
};

// Hopcroft's algorithm on a complete Dfa (Err::NotComplete otherwise).
// Initialization: split {Q} on F, seed the queue with (min(F, F^c), a) for
// every letter, the fresh class (F) winning ties. Main loop per splitter
// (W,a): snapshot W's members, split every class against a^{-1}W; for each
// split (P -> P', P'') and letter b, a pending (P,b) is replaced by (P',b)
// plus (P'',b), otherwise (min(P',P''),b) is added, ties to the fresh class.
HopcroftResult hopcroft_minimize(const Dfa& d, const HopcroftOptions& opts = {});
HopcroftResult hopcroft_minimize(const Dfa& d, QueuePolicy policy);

// One line per step:
//   step <i> take <letter> {m1,m2,...} split {old}->{kept}/{created} ...
std::string format_trace(const HopcroftTrace& trace, const std::string& alphabet);

// Replays the trace from scratch and verifies (a) every recorded step matches
// the recomputed splits and queue bookkeeping, and (b) the splitter invariant:
// at each configuration, for every class P, letter a and class R, (P,a)|R is
// coarser than the meet over pending same-letter splitters (W,a) of (W,a)|R.
// Returns false on any mismatch (e.g. a corrupted trace).
bool check_splitter_invariant(const Dfa& d, const HopcroftTrace& trace);

struct ExecutionEnumeration {
  bool limit_exceeded = false;
  long long nodes = 0;  // distinct configurations explored
  // Every partition occurring as the current partition of some reachable
  // configuration, and those of terminal (empty-queue) configurations.
  std::vector<Partition> partitions;
  std::vector<Partition> final_partitions;
};

// Exhaustive walk of every execution: a configuration is (partition, pending
// splitter set); every pending splitter is tried at every configuration and
// configurations are deduplicated. Supports n <= 64 (class sets are stored as
// 64-bit masks); larger inputs throw Err::LimitExceeded, as the search space
// would be astronomically out of reach anyway. Hitting node_limit sets the
// limit_exceeded flag on the partial result instead.
ExecutionEnumeration enumerate_executions(const Dfa& d, long long node_limit);

// True iff in every configuration of every execution at most one class is
// split by a pending splitter and all pending splitters that split it induce
// the identical two-block partition. Throws Err::LimitExceeded when the
// configuration budget is exhausted before the answer is known.
bool is_slow_hopcroft(const Dfa& d, long long node_limit);

}  // namespace fam
