#include "fam/simple.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fam {

SccResult strongly_connected_components(const Dfa& d) {
  const int n = d.num_states;
  const int k = d.k();
  SccResult res;
  res.comp_of.assign(n, -1);

  // Iterative Tarjan; components are numbered in pop order, so every arc goes
  // from its own component to one with a smaller id.
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, int>> call;  // (state, next letter to expand)
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto [q, i] = call.back();
      if (i < k) {
        call.back().second = i + 1;
        int t = d.next(q, i);
        if (t < 0) continue;
        if (index[t] < 0) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[q] = std::min(low[q], index[t]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[q]);
      }
      if (low[q] == index[q]) {
        int c = res.num_comps++;
        while (true) {
          int s = stack.back();
          stack.pop_back();
          on_stack[s] = 0;
          res.comp_of[s] = c;
          if (s == q) break;
        }
      }
    }
  }

  res.nontrivial.assign(res.num_comps, false);
  std::vector<int> size(res.num_comps, 0);
  for (int q = 0; q < n; ++q) ++size[res.comp_of[q]];
  for (int q = 0; q < n; ++q) {
    if (size[res.comp_of[q]] > 1) {
      res.nontrivial[res.comp_of[q]] = true;
      continue;
    }
    for (int x = 0; x < k; ++x)
      if (d.next(q, x) == q) res.nontrivial[res.comp_of[q]] = true;
  }
  return res;
}

bool is_simple(const Dfa& d) {
  SccResult scc = strongly_connected_components(d);
  const int k = d.k();
  for (int q = 0; q < d.num_states; ++q) {
    if (!scc.nontrivial[scc.comp_of[q]]) continue;
    int inside = 0;
    for (int x = 0; x < k; ++x) {
      int t = d.next(q, x);
      if (t >= 0 && scc.comp_of[t] == scc.comp_of[q]) ++inside;
    }
    if (inside != 1) return false;
  }
  return true;
}

namespace {

// Least-rotation start (two-pointer elimination), then reduced modulo the
// word's primitive period so the smallest such index is returned.
template <class Seq>
int primitive_period_of(const Seq& s, int n) {
  std::vector<int> border(n, 0);
  for (int i = 1; i < n; ++i) {
    int g = border[i - 1];
    while (g > 0 && !(s[i] == s[g])) g = border[g - 1];
    if (s[i] == s[g]) ++g;
    border[i] = g;
  }
  int p = n - (n > 0 ? border[n - 1] : 0);
  return (n % p == 0) ? p : n;
}

template <class Seq>
int least_rotation_index(const Seq& s, int n) {
  if (n <= 0) throw std::logic_error("minimal_rotation: empty input");
  int i = 0, j = 1, len = 0;
  while (i < n && j < n && len < n) {
    const auto& a = s[(i + len) % n];
    const auto& b = s[(j + len) % n];
    if (a == b) {
      ++len;
      continue;
    }
    if (b < a)
      i = i + len + 1;
    else
      j = j + len + 1;
    if (i == j) ++j;
    len = 0;
  }
  int r = std::min(i, j);
  int p = primitive_period_of(s, n);
  if (n % p == 0) r %= p;
  return r;
}

}  // namespace

int minimal_rotation(std::string_view word) {
  return least_rotation_index(word, static_cast<int>(word.size()));
}

int minimal_rotation(const std::vector<Signature>& word) {
  return least_rotation_index(word, static_cast<int>(word.size()));
}

CycleProfile weak_signature_word(const Dfa& d, const std::vector<int>& cycle) {
  if (cycle.empty()) fail(Err::NotACycle, "empty state set");
  std::vector<int> members(cycle);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int q : members)
    if (q < 0 || q >= d.num_states) fail(Err::NotACycle, "state " + std::to_string(q) + " out of range");

  const int k = d.k();
  const int m = static_cast<int>(members.size());
  std::vector<int> succ(m, -1);
  for (int i = 0; i < m; ++i) {
    int inside = 0;
    for (int x = 0; x < k; ++x) {
      int t = d.next(members[i], x);
      if (t >= 0 && std::binary_search(members.begin(), members.end(), t)) {
        ++inside;
        succ[i] = t;
      }
    }
    if (inside != 1)
      fail(Err::NotACycle,
           "state " + std::to_string(members[i]) + " has " + std::to_string(inside) + " arcs into the set");
  }

  CycleProfile prof;
  prof.states.reserve(m);
  std::vector<char> seen(m, 0);
  int cur = members[0];
  for (int step = 0; step < m; ++step) {
    int idx = static_cast<int>(std::lower_bound(members.begin(), members.end(), cur) - members.begin());
    if (seen[idx]) fail(Err::NotACycle, "set is not a single cycle");
    seen[idx] = 1;
    prof.states.push_back(cur);
    cur = succ[idx];
  }
  if (cur != members[0]) fail(Err::NotACycle, "set is not a single cycle");

  prof.weak_word.resize(m);
  for (int i = 0; i < m; ++i) {
    int q = prof.states[i];
    int nxt = prof.states[(i + 1) % m];
    Signature s{d.finals[q], {}};
    for (int x = 0; x < k; ++x) {
      int t = d.next(q, x);
      if (t >= 0) s.arcs.emplace_back(x, t == nxt ? -1 : t);
    }
    prof.weak_word[i] = std::move(s);
  }
  prof.canonical_rotation = minimal_rotation(prof.weak_word);
  return prof;
}

Dfa az_minimize(const Dfa& d) {
  if (d.num_states == 0) return d;
  if (!is_simple(d)) fail(Err::NotSimple, "every nontrivial strongly connected component must be a simple cycle");
  const int n = d.num_states;
  const int k = d.k();

  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&rep](int q) {
    while (rep[q] != q) {
      rep[q] = rep[rep[q]];
      q = rep[q];
    }
    return q;
  };
  auto full_sig = [&](int q) {
    Signature s{d.finals[q], {}};
    for (int x = 0; x < k; ++x) {
      int t = d.next(q, x);
      if (t >= 0) s.arcs.emplace_back(x, find(t));
    }
    return s;
  };

  // Each pass minimizes bottom-up over the condensation of the current merged
  // graph. Merges can make states above a cycle wind onto it (their signature
  // then matches a cycle state's) or make two cycles conjugate, so passes
  // repeat until none of them changes anything.
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;

    Dfa live = Dfa::blank(n, d.alphabet);
    live.initial = find(d.initial);
    for (int q = 0; q < n; ++q) {
      if (find(q) != q) continue;
      live.finals[q] = d.finals[q];
      for (int x = 0; x < k; ++x) {
        int t = d.next(q, x);
        if (t >= 0) live.set_next(q, x, find(t));
      }
    }

    SccResult scc = strongly_connected_components(live);
    std::vector<std::vector<int>> members(scc.num_comps);
    for (int q = 0; q < n; ++q)
      if (find(q) == q) members[scc.comp_of[q]].push_back(q);

    // Component ids ascend from the sinks, so one ascending sweep suffices.
    std::vector<int> height(scc.num_comps, 0);
    for (int c = 0; c < scc.num_comps; ++c)
      for (int q : members[c])
        for (int x = 0; x < k; ++x) {
          int t = live.next(q, x);
          if (t >= 0 && scc.comp_of[t] != c) height[c] = std::max(height[c], 1 + height[scc.comp_of[t]]);
        }

    std::vector<int> order;
    for (int c = 0; c < scc.num_comps; ++c)
      if (!members[c].empty()) order.push_back(c);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (height[a] != height[b]) return height[a] < height[b];
      return members[a][0] < members[b][0];
    });

    std::map<Signature, int> reg;
    std::map<std::vector<Signature>, std::vector<int>> cycle_reg;  // canonical weak word -> host states

    for (int c : order) {
      const std::vector<int>& mem = members[c];
      bool is_cycle = mem.size() > 1;
      if (!is_cycle)
        for (int x = 0; x < k && !is_cycle; ++x) is_cycle = live.next(mem[0], x) == mem[0];

      if (!is_cycle) {
        int q = mem[0];
        auto [it, inserted] = reg.emplace(full_sig(q), q);
        if (!inserted) {
          rep[q] = it->second;
          merged_any = true;
        }
        continue;
      }

      // Order the cycle from its smallest state. Signatures go through find()
      // rather than the pass snapshot: states below were just minimized.
      const int m = static_cast<int>(mem.size());
      std::vector<int> succ(m, -1);
      for (int i = 0; i < m; ++i) {
        int inside = 0;
        for (int x = 0; x < k; ++x) {
          int t = d.next(mem[i], x);
          if (t < 0) continue;
          t = find(t);
          if (std::binary_search(mem.begin(), mem.end(), t)) {
            ++inside;
            succ[i] = t;
          }
        }
        if (inside != 1) fail(Err::NotSimple, "merging produced a non-simple component");
      }
      std::vector<int> ordered;
      ordered.reserve(m);
      int cur = mem[0];
      for (int step = 0; step < m; ++step) {
        ordered.push_back(cur);
        cur = succ[std::lower_bound(mem.begin(), mem.end(), cur) - mem.begin()];
      }
      if (cur != mem[0]) fail(Err::NotSimple, "merging produced a non-simple component");

      std::vector<Signature> weak(m);
      for (int i = 0; i < m; ++i) {
        int q = ordered[i];
        int nxt = ordered[(i + 1) % m];
        Signature s{d.finals[q], {}};
        for (int x = 0; x < k; ++x) {
          int t = d.next(q, x);
          if (t < 0) continue;
          t = find(t);
          s.arcs.emplace_back(x, t == nxt ? -1 : t);
        }
        weak[i] = std::move(s);
      }

      // Collapse onto the primitive root of the weak word, ...
      int p = primitive_period_of(weak, m);
      if (p < m) {
        for (int i = p; i < m; ++i) rep[ordered[i]] = ordered[i % p];
        merged_any = true;
        weak.resize(p);
        ordered.resize(p);
      }

      // ...then merge with any conjugate cycle seen this pass.
      int r = minimal_rotation(weak);
      std::vector<Signature> canon;
      std::vector<int> canon_states;
      canon.reserve(p);
      canon_states.reserve(p);
      for (int j = 0; j < p; ++j) {
        canon.push_back(weak[(r + j) % p]);
        canon_states.push_back(ordered[(r + j) % p]);
      }
      auto [it, inserted] = cycle_reg.emplace(std::move(canon), canon_states);
      if (!inserted) {
        const std::vector<int>& host = it->second;
        for (int j = 0; j < p; ++j)
          if (host[j] != canon_states[j]) {
            rep[canon_states[j]] = host[j];
            merged_any = true;
          }
      } else {
        for (int q : canon_states) reg.emplace(full_sig(q), q);
      }
    }
  }

  std::vector<int> newid(n, -1);
  int count = 0;
  for (int q = 0; q < n; ++q)
    if (find(q) == q) newid[q] = count++;
  Dfa out = Dfa::blank(count, d.alphabet);
  out.initial = newid[find(d.initial)];
  for (int q = 0; q < n; ++q) {
    if (newid[q] < 0) continue;
    out.finals[newid[q]] = d.finals[q];
    for (int x = 0; x < k; ++x) {
      int t = d.next(q, x);
      if (t >= 0) out.set_next(newid[q], x, newid[find(t)]);
    }
  }
  return out;
}

}  // namespace fam
