#include "fam/hopcroft.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fam/moore.hpp"

namespace fam {

namespace {

void require_complete(const Dfa& d) {
  if (!is_complete(d)) fail(Err::NotComplete, "algorithm requires a complete automaton");
}

// Per-letter reverse adjacency: incoming[letter][q] = sorted sources p with
// p.letter = q. Enables |a^{-1}W|-time preimage collection.
std::vector<std::vector<std::vector<int>>> reverse_adjacency(const Dfa& d) {
  std::vector<std::vector<std::vector<int>>> incoming(
      d.k(), std::vector<std::vector<int>>(d.num_states));
  for (int q = 0; q < d.num_states; ++q)
    for (int x = 0; x < d.k(); ++x) incoming[x][d.next(q, x)].push_back(q);
  return incoming;
}

}  // namespace

long long HopcroftTrace::max_removals() const {
  long long m = 0;
  for (long long r : removals) m = std::max(m, r);
  return m;
}

long long HopcroftTrace::removals_total() const {
  long long t = 0;
  for (long long r : removals) t += r;
  return t;
}

HopcroftResult hopcroft_minimize(const Dfa& d, QueuePolicy policy) {
  return hopcroft_minimize(d, HopcroftOptions{policy, false});
}

HopcroftResult hopcroft_minimize(const Dfa& d, const HopcroftOptions& opts) {
  require_complete(d);
  const int n = d.num_states;
  const int k = d.k();

  HopcroftResult res;
  res.trace.policy = opts.policy;
  res.trace.num_states = n;
  res.trace.num_letters = k;
  res.trace.removals.assign(static_cast<size_t>(n) * k, 0);

  RefinablePartition part(n);
  std::vector<int> final_states;
  for (int q = 0; q < n; ++q)
    if (d.finals[q]) final_states.push_back(q);

  // Degenerate F: nothing to split, the 1-class quotient is the answer.
  if (final_states.empty() || static_cast<int>(final_states.size()) == n) {
    res.partition = part.to_partition();
    res.dfa = quotient(d, res.partition, &res.state_map);
    return res;
  }

  // Split {Q} on F: class 0 becomes F^c, the fresh class 1 becomes F.
  part.mark_and_split(final_states);
  SplitterQueue queue(opts.policy, k);
  // Seed with (min(F, F^c), a) for every letter; the fresh class F wins ties.
  int seed = part.class_size(1) <= part.class_size(0) ? 1 : 0;
  for (int x = 0; x < k; ++x) queue.add_initial(seed, x);

  auto incoming = reverse_adjacency(d);

  auto record_pending = [&](HopcroftStep& step) {
    // (members, letter) snapshot of the waiting set, ordered for goldens.
    for (int c = 0; c < part.num_classes(); ++c)
      for (int x = 0; x < k; ++x)
        if (queue.contains(c, x)) step.pending_after.emplace_back(part.members(c), x);
    std::sort(step.pending_after.begin(), step.pending_after.end(),
              [](const auto& lhs, const auto& rhs) {
                return std::tie(lhs.second, lhs.first) < std::tie(rhs.second, rhs.first);
              });
  };

  std::vector<int> hits;
  while (!queue.empty()) {
    int pending_now = queue.pending_count();
    SplitterRef s = queue.take();
    // Snapshot the splitter's members: splits below must not retroactively
    // shrink the preimage we are processing.
    std::vector<int> members = part.members(s.cls);

    HopcroftStep step;
    step.letter = s.letter;
    step.splitter = members;
    step.pending_at_take = pending_now;

    hits.clear();
    for (int q : members) {
      res.trace.removals[static_cast<size_t>(q) * k + s.letter] += 1;
      const std::vector<int>& pre = incoming[s.letter][q];
      hits.insert(hits.end(), pre.begin(), pre.end());
    }
    res.trace.work += static_cast<long long>(hits.size());

    // Record each split's pre-split membership: kept + created, merged.
    auto splits = part.mark_and_split(hits);
    for (const auto& sp : splits) {
      SplitEvent ev;
      ev.kept = part.members(sp.retained);
      ev.created = part.members(sp.created);
      ev.old_members.resize(ev.kept.size() + ev.created.size());
      std::merge(ev.kept.begin(), ev.kept.end(), ev.created.begin(), ev.created.end(),
                 ev.old_members.begin());
      step.splits.push_back(std::move(ev));

      for (int x = 0; x < k; ++x) {
        if (queue.contains(sp.retained, x)) {
          // Pending (P,b) is replaced by (P',b) and (P'',b): the retained
          // id already sits in the queue, only the fresh half is appended.
          queue.replace(sp.retained, x, sp.retained, sp.created);
        } else {
          int smaller = part.class_size(sp.created) <= part.class_size(sp.retained)
                            ? sp.created
                            : sp.retained;
          queue.add(smaller, x);
        }
      }
    }
    if (opts.record_pending) record_pending(step);
    res.trace.steps.push_back(std::move(step));
  }

  res.trace.cycles = queue.cycles();
  res.partition = part.to_partition();
  res.dfa = quotient(d, res.partition, &res.state_map);
  return res;
}

std::string format_trace(const HopcroftTrace& trace, const std::string& alphabet) {
  std::ostringstream out;
  auto put_set = [&out](const std::vector<int>& states) {
    out << '{';
    for (size_t i = 0; i < states.size(); ++i) {
      if (i) out << ',';
      out << states[i];
    }
    out << '}';
  };
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const HopcroftStep& step = trace.steps[i];
    out << "step " << i + 1 << " take " << alphabet[step.letter] << ' ';
    put_set(step.splitter);
    for (const SplitEvent& ev : step.splits) {
      out << " split ";
      put_set(ev.old_members);
      out << "->";
      put_set(ev.kept);
      out << '/';
      put_set(ev.created);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Class-set bookkeeping shared by the replay checker: partitions as lists of
// sorted member vectors, pending splitters as (members, letter).
using Block = std::vector<int>;

struct ReplayState {
  std::vector<Block> classes;
  std::vector<std::pair<Block, int>> pending;
};

bool same_set(const Block& a, const Block& b) { return a == b; }

// The splitter invariant: for every class P, letter a and class R of the
// current partition, (P,a)|R must be coarser than the meet over pending
// same-letter splitters of (W,a)|R. Equivalently: states of R that agree on
// membership in a^{-1}W for every pending (W,a) must also agree on a^{-1}P.
bool invariant_holds(const Dfa& d, const ReplayState& st) {
  const int k = d.k();
  for (int a = 0; a < k; ++a) {
    std::vector<const Block*> pend;
    for (const auto& [w, letter] : st.pending)
      if (letter == a) pend.push_back(&w);

    // meet_key[q]: bit vector over pending splitters of letter a.
    std::vector<unsigned long long> meet_key(d.num_states, 0);
    if (pend.size() > 64) return false;  // keeps keys in one word; ample for replays
    for (size_t i = 0; i < pend.size(); ++i) {
      for (int q : preimage(d, *pend[i], a)) meet_key[q] |= 1ULL << i;
    }
    for (const Block& p_block : st.classes) {
      std::vector<bool> in_pre(d.num_states, false);
      for (int q : preimage(d, p_block, a)) in_pre[q] = true;
      for (const Block& r_block : st.classes) {
        // Group R by meet key; each group must be uniform on in_pre.
        std::map<unsigned long long, bool> group_side;
        for (int q : r_block) {
          auto [it, inserted] = group_side.emplace(meet_key[q], in_pre[q]);
          if (!inserted && it->second != in_pre[q]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool check_splitter_invariant(const Dfa& d, const HopcroftTrace& trace) {
  if (!is_complete(d)) return false;
  const int n = d.num_states;
  const int k = d.k();
  if (trace.num_states != n || trace.num_letters != k) return false;

  ReplayState st;
  Block finals, nonfinals;
  for (int q = 0; q < n; ++q) (d.finals[q] ? finals : nonfinals).push_back(q);
  if (finals.empty() || nonfinals.empty()) return trace.steps.empty();
  st.classes = {nonfinals, finals};
  const Block& seed = finals.size() <= nonfinals.size() ? finals : nonfinals;
  for (int a = 0; a < k; ++a) st.pending.emplace_back(seed, a);

  for (const HopcroftStep& step : trace.steps) {
    if (!invariant_holds(d, st)) return false;

    // The taken splitter must be pending with exactly the recorded members.
    auto it = std::find_if(st.pending.begin(), st.pending.end(), [&](const auto& ws) {
      return ws.second == step.letter && same_set(ws.first, step.splitter);
    });
    if (it == st.pending.end()) return false;
    st.pending.erase(it);

    std::vector<bool> hit(n, false);
    for (int q : preimage(d, step.splitter, step.letter)) hit[q] = true;

    // Recompute the splits of every class and match against the record.
    std::vector<SplitEvent> expected;
    std::vector<Block> new_classes;
    for (const Block& c : st.classes) {
      Block inter, rest;
      for (int q : c) (hit[q] ? inter : rest).push_back(q);
      if (inter.empty() || rest.empty()) {
        new_classes.push_back(c);
        continue;
      }
      expected.push_back({c, rest, inter});
      new_classes.push_back(rest);
      new_classes.push_back(inter);
    }
    // Recorded split events must be exactly the recomputed ones (order-free).
    if (expected.size() != step.splits.size()) return false;
    std::vector<bool> used(expected.size(), false);
    for (const SplitEvent& ev : step.splits) {
      bool matched = false;
      for (size_t i = 0; i < expected.size(); ++i) {
        if (used[i]) continue;
        if (expected[i].old_members == ev.old_members && expected[i].kept == ev.kept &&
            expected[i].created == ev.created) {
          used[i] = matched = true;
          break;
        }
      }
      if (!matched) return false;
    }

    // Queue bookkeeping: replace pending (P,b) by both halves, else add the
    // smaller half, for every letter.
    for (const SplitEvent& ev : step.splits) {
      for (int b = 0; b < k; ++b) {
        auto pit = std::find_if(st.pending.begin(), st.pending.end(), [&](const auto& ws) {
          return ws.second == b && same_set(ws.first, ev.old_members);
        });
        if (pit != st.pending.end()) {
          pit->first = ev.kept;
          st.pending.emplace_back(ev.created, b);
        } else {
          const Block& smaller = ev.created.size() <= ev.kept.size() ? ev.created : ev.kept;
          st.pending.emplace_back(smaller, b);
        }
      }
    }
    st.classes = std::move(new_classes);
  }
  if (!st.pending.empty()) return false;
  return invariant_holds(d, st);
}

namespace {

// Exhaustive execution search: classes are 64-bit state masks, so a
// configuration is (sorted mask list, sorted (letter, mask) pending list).
struct MaskConfig {
  std::vector<unsigned long long> classes;
  std::vector<std::pair<int, unsigned long long>> pending;
  bool operator==(const MaskConfig&) const = default;
};

struct MaskConfigHash {
  size_t operator()(const MaskConfig& c) const {
    size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](unsigned long long v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto m : c.classes) mix(m);
    for (auto& [letter, m] : c.pending) {
      mix(static_cast<unsigned long long>(letter) + 0x51ed2701);
      mix(m);
    }
    return h;
  }
};

Partition mask_partition(int n, const std::vector<unsigned long long>& classes) {
  std::vector<int> raw(n, -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int q = 0; q < n; ++q)
      if (classes[c] >> q & 1) raw[q] = static_cast<int>(c);
  return Partition::from_class_of(raw);
}

struct MaskContext {
  int n = 0;
  int k = 0;
  std::vector<std::vector<unsigned long long>> pre;  // pre[letter][q] = a^{-1}{q}

  explicit MaskContext(const Dfa& d) : n(d.num_states), k(d.k()) {
    pre.assign(k, std::vector<unsigned long long>(n, 0));
    for (int q = 0; q < n; ++q)
      for (int x = 0; x < k; ++x) pre[x][d.next(q, x)] |= 1ULL << q;
  }

  unsigned long long preimage_mask(unsigned long long members, int letter) const {
    unsigned long long out = 0;
    for (unsigned long long m = members; m;) {
      int q = __builtin_ctzll(m);
      m &= m - 1;
      out |= pre[letter][q];
    }
    return out;
  }

  MaskConfig initial(const Dfa& d) const {
    unsigned long long f = 0;
    for (int q = 0; q < n; ++q)
      if (d.finals[q]) f |= 1ULL << q;
    unsigned long long all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    MaskConfig cfg;
    cfg.classes = {f & all, all & ~f};
    std::erase(cfg.classes, 0ULL);
    std::sort(cfg.classes.begin(), cfg.classes.end());
    if (cfg.classes.size() == 2) {
      unsigned long long fc = all & ~f;
      unsigned long long seed =
          __builtin_popcountll(f) <= __builtin_popcountll(fc) ? f : fc;
      for (int x = 0; x < k; ++x) cfg.pending.emplace_back(x, seed);
      std::sort(cfg.pending.begin(), cfg.pending.end());
    }
    return cfg;
  }

  // Applies pending entry `idx`; canonical (sorted) result.
  MaskConfig step(const MaskConfig& cfg, size_t idx) const {
    const auto [letter, members] = cfg.pending[idx];
    unsigned long long hits = preimage_mask(members, letter);
    MaskConfig next;
    next.pending = cfg.pending;
    next.pending.erase(next.pending.begin() + static_cast<long>(idx));

    for (unsigned long long c : cfg.classes) {
      unsigned long long inter = c & hits;
      if (inter == 0 || inter == c) {
        next.classes.push_back(c);
        continue;
      }
      unsigned long long rest = c & ~hits;
      next.classes.push_back(rest);
      next.classes.push_back(inter);
      for (int b = 0; b < k; ++b) {
        auto pit = std::find(next.pending.begin(), next.pending.end(), std::pair{b, c});
        if (pit != next.pending.end()) {
          pit->second = rest;
          next.pending.emplace_back(b, inter);
        } else {
          unsigned long long smaller =
              __builtin_popcountll(inter) <= __builtin_popcountll(rest) ? inter : rest;
          next.pending.emplace_back(b, smaller);
        }
      }
    }
    std::sort(next.classes.begin(), next.classes.end());
    std::sort(next.pending.begin(), next.pending.end());
    return next;
  }
};

}  // namespace

ExecutionEnumeration enumerate_executions(const Dfa& d, long long node_limit) {
  require_complete(d);
  if (d.num_states > 64)
    fail(Err::LimitExceeded, "execution enumeration supports at most 64 states");
  MaskContext ctx(d);

  ExecutionEnumeration result;
  std::unordered_set<MaskConfig, MaskConfigHash> seen;
  std::deque<MaskConfig> frontier;
  std::map<std::vector<unsigned long long>, bool> partitions_seen;  // mask-list -> final?

  MaskConfig init = ctx.initial(d);
  seen.insert(init);
  frontier.push_back(init);

  while (!frontier.empty()) {
    MaskConfig cfg = std::move(frontier.front());
    frontier.pop_front();
    ++result.nodes;
    if (result.nodes > node_limit) {
      result.limit_exceeded = true;
      break;
    }
    auto [pit, fresh] = partitions_seen.emplace(cfg.classes, cfg.pending.empty());
    if (!fresh && cfg.pending.empty()) pit->second = true;

    for (size_t i = 0; i < cfg.pending.size(); ++i) {
      MaskConfig next = ctx.step(cfg, i);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }

  for (const auto& [masks, is_final] : partitions_seen) {
    result.partitions.push_back(mask_partition(d.num_states, masks));
    if (is_final) result.final_partitions.push_back(result.partitions.back());
  }
  return result;
}

bool is_slow_hopcroft(const Dfa& d, long long node_limit) {
  require_complete(d);
  if (d.num_states > 64)
    fail(Err::LimitExceeded, "execution enumeration supports at most 64 states");
  MaskContext ctx(d);

  std::unordered_set<MaskConfig, MaskConfigHash> seen;
  std::deque<MaskConfig> frontier;
  MaskConfig init = ctx.initial(d);
  seen.insert(init);
  frontier.push_back(init);
  long long nodes = 0;

  while (!frontier.empty()) {
    MaskConfig cfg = std::move(frontier.front());
    frontier.pop_front();
    if (++nodes > node_limit)
      fail(Err::LimitExceeded, "slow-for-Hopcroft check exceeded its node budget");

    // Slowness at this configuration: every pending splitter that splits
    // anything splits the same single class, in the same two blocks.
    unsigned long long split_class = 0, split_part = 0;
    bool saw_split = false;
    for (const auto& [letter, members] : cfg.pending) {
      unsigned long long hits = ctx.preimage_mask(members, letter);
      for (unsigned long long c : cfg.classes) {
        unsigned long long inter = c & hits;
        if (inter == 0 || inter == c) continue;
        unsigned long long norm = std::min(inter, c & ~inter);
        if (!saw_split) {
          saw_split = true;
          split_class = c;
          split_part = norm;
        } else if (c != split_class || norm != split_part) {
          return false;
        }
      }
    }

    for (size_t i = 0; i < cfg.pending.size(); ++i) {
      MaskConfig next = ctx.step(cfg, i);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return true;
}

}  // namespace fam
