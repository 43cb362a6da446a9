#include "fam/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "fam/moore.hpp"

namespace fam {

Partition nerode_partition(const Dfa& d) {
  if (!is_complete(d)) fail(Err::NotComplete, "table-filling requires a complete automaton");
  const int n = d.num_states;
  const int k = d.k();
  // marked[p*n+q]: p and q known distinguishable. Plain fixpoint iteration —
  // deliberately nothing like the refinement machinery it cross-checks.
  std::vector<bool> marked(static_cast<size_t>(n) * n, false);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (d.finals[p] != d.finals[q]) marked[static_cast<size_t>(p) * n + q] = true;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (marked[static_cast<size_t>(p) * n + q]) continue;
        for (int x = 0; x < k; ++x) {
          if (marked[static_cast<size_t>(d.next(p, x)) * n + d.next(q, x)]) {
            marked[static_cast<size_t>(p) * n + q] = true;
            marked[static_cast<size_t>(q) * n + p] = true;
            changed = true;
            break;
          }
        }
      }
  }

  // Unmarked is an equivalence; class = smallest equivalent state.
  std::vector<int> raw(n);
  for (int q = 0; q < n; ++q) {
    int rep = q;
    for (int p = 0; p < q; ++p)
      if (!marked[static_cast<size_t>(p) * n + q]) {
        rep = p;
        break;
      }
    raw[q] = rep;
  }
  return Partition::from_class_of(raw);
}

Dfa naive_minimize(const Dfa& d) { return quotient(d, nerode_partition(d)); }

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet) fail(Err::AlphabetMismatch, "automata have different alphabets");
  Dfa ca = complete_with_sink(a);
  Dfa cb = complete_with_sink(b);
  const int k = static_cast<int>(ca.alphabet.size());

  // BFS over the product; parent links reconstruct the shortest witness.
  struct Node {
    int parent;
    char letter;
  };
  std::map<std::pair<int, int>, Node> seen;
  std::deque<std::pair<int, int>> frontier;
  auto start = std::make_pair(ca.initial, cb.initial);
  seen[start] = {-1, 0};
  frontier.push_back(start);
  std::vector<std::pair<int, int>> order;

  while (!frontier.empty()) {
    auto [p, q] = frontier.front();
    frontier.pop_front();
    order.push_back({p, q});
    if (ca.finals[p] != cb.finals[q]) {
      std::string witness;
      auto cur = std::make_pair(p, q);
      while (seen[cur].parent >= 0) {
        witness.push_back(seen[cur].letter);
        cur = order[seen[cur].parent];
      }
      std::reverse(witness.begin(), witness.end());
      return {false, witness};
    }
    int my_index = static_cast<int>(order.size()) - 1;
    for (int x = 0; x < k; ++x) {
      auto nxt = std::make_pair(ca.next(p, x), cb.next(q, x));
      if (seen.emplace(nxt, Node{my_index, ca.alphabet[x]}).second) frontier.push_back(nxt);
    }
  }
  return {true, ""};
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (a.num_states != b.num_states || a.alphabet != b.alphabet) return false;
  if (a.num_states == 0) return true;
  const int k = a.k();

  // BFS from the initials in lockstep; deterministic transition structure
  // makes the discovered correspondence the only candidate bijection.
  std::vector<int> map_ab(a.num_states, -1), map_ba(b.num_states, -1);
  std::deque<int> frontier;
  map_ab[a.initial] = b.initial;
  map_ba[b.initial] = a.initial;
  frontier.push_back(a.initial);
  int visited = 0;

  while (!frontier.empty()) {
    int p = frontier.front();
    frontier.pop_front();
    int q = map_ab[p];
    ++visited;
    if (a.finals[p] != b.finals[q]) return false;
    for (int x = 0; x < k; ++x) {
      int pa = a.next(p, x);
      int qb = b.next(q, x);
      if ((pa < 0) != (qb < 0)) return false;
      if (pa < 0) continue;
      if (map_ab[pa] < 0 && map_ba[qb] < 0) {
        map_ab[pa] = qb;
        map_ba[qb] = pa;
        frontier.push_back(pa);
      } else if (map_ab[pa] != qb) {
        return false;
      }
    }
  }
  // Unreached states mean the inputs were not trim; demand full coverage.
  return visited == a.num_states;
}

}  // namespace fam
