#include "fam/moore.hpp"

#include <algorithm>
#include <numeric>

namespace fam {

namespace {

void require_complete(const Dfa& d) {
  if (!is_complete(d)) fail(Err::NotComplete, "algorithm requires a complete automaton");
}

}  // namespace

MooreTrace moore_sequence(const Dfa& d) {
  require_complete(d);
  const int n = d.num_states;
  const int k = d.k();

  // Current classes as raw ids; canonicalized per stored partition.
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = d.finals[q] ? 0 : 1;

  MooreTrace trace;
  trace.partitions.push_back(Partition::from_class_of(cls));
  int num_classes = trace.partitions.back().num_classes;
  cls = trace.partitions.back().class_of;

  // Round: stable LSD radix sort of the states by the key
  //   (cls[q], cls[q.a1], ..., cls[q.ak])
  // then assign new class ids along the sorted order. O(kn) per round.
  std::vector<int> order(n), scratch(n), counts;
  std::vector<int> coord(n);
  std::vector<int> next_cls(n);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    for (int j = k; j >= 0; --j) {
      for (int q = 0; q < n; ++q)
        coord[q] = j == 0 ? cls[q] : cls[d.next(q, j - 1)];
      counts.assign(num_classes + 1, 0);
      for (int q = 0; q < n; ++q) ++counts[coord[q] + 1];
      for (int c = 1; c <= num_classes; ++c) counts[c] += counts[c - 1];
      for (int q : order) scratch[counts[coord[q]]++] = q;
      order.swap(scratch);
    }
    auto key_differs = [&](int p, int q) {
      if (cls[p] != cls[q]) return true;
      for (int x = 0; x < k; ++x)
        if (cls[d.next(p, x)] != cls[d.next(q, x)]) return true;
      return false;
    };
    int next_count = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key_differs(order[i - 1], order[i])) ++next_count;
      next_cls[order[i]] = next_count;
    }
    ++next_count;

    trace.partitions.push_back(Partition::from_class_of(next_cls));
    const Partition& back = trace.partitions.back();
    bool stable = next_count == num_classes;
    cls = back.class_of;
    num_classes = back.num_classes;
    if (stable) break;
  }
  return trace;
}

Dfa quotient(const Dfa& d, const Partition& p, std::vector<int>* state_map) {
  // Representative = smallest member; classes renumbered by representative so
  // the output is deterministic.
  std::vector<int> rep(p.num_classes, -1);
  for (int q = d.num_states - 1; q >= 0; --q) rep[p.class_of[q]] = q;
  std::vector<int> reps_sorted = rep;
  std::sort(reps_sorted.begin(), reps_sorted.end());
  std::vector<int> new_id(p.num_classes);
  for (int c = 0; c < p.num_classes; ++c) {
    new_id[c] = static_cast<int>(
        std::lower_bound(reps_sorted.begin(), reps_sorted.end(), rep[c]) - reps_sorted.begin());
  }

  Dfa out = Dfa::blank(p.num_classes, d.alphabet);
  out.initial = new_id[p.class_of[d.initial]];
  for (int c = 0; c < p.num_classes; ++c) {
    int r = rep[c];
    out.finals[new_id[c]] = d.finals[r];
    for (int x = 0; x < d.k(); ++x) {
      int to = d.next(r, x);
      if (to >= 0) out.set_next(new_id[c], x, new_id[p.class_of[to]]);
    }
  }
  if (state_map) {
    state_map->resize(d.num_states);
    for (int q = 0; q < d.num_states; ++q) (*state_map)[q] = rep[p.class_of[q]];
  }
  return out;
}

MooreResult moore_minimize(const Dfa& d) {
  MooreResult res;
  res.trace = moore_sequence(d);
  res.dfa = quotient(d, res.trace.partitions.back(), &res.state_map);
  return res;
}

int moore_depth(const Dfa& d) { return moore_sequence(d).depth(); }

}  // namespace fam
