#include "fam/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace fam {

int letter_index(std::string_view alphabet, char symbol) {
  auto pos = alphabet.find(symbol);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

Nfa to_nfa(const Dfa& d) {
  Nfa a;
  a.num_states = d.num_states;
  a.alphabet = d.alphabet;
  if (d.num_states > 0) a.initials = {d.initial};
  for (int q = 0; q < d.num_states; ++q) {
    if (d.finals[q]) a.finals.push_back(q);
    for (int x = 0; x < d.k(); ++x) {
      int to = d.next(q, x);
      if (to >= 0) a.transitions.push_back({q, x, to});
    }
  }
  std::sort(a.transitions.begin(), a.transitions.end());
  return a;
}

std::optional<Dfa> as_dfa(const Nfa& a) {
  if (a.initials.size() != 1) return std::nullopt;
  Dfa d = Dfa::blank(a.num_states, a.alphabet);
  d.initial = a.initials[0];
  for (int q : a.finals) d.finals[q] = true;
  for (const Transition& t : a.transitions) {
    if (d.next(t.from, t.letter) != -1) return std::nullopt;
    d.set_next(t.from, t.letter, t.to);
  }
  return d;
}

Nfa reverse(const Nfa& a) {
  Nfa r;
  r.num_states = a.num_states;
  r.alphabet = a.alphabet;
  r.initials = a.finals;
  r.finals = a.initials;
  r.transitions.reserve(a.transitions.size());
  for (const Transition& t : a.transitions) r.transitions.push_back({t.to, t.letter, t.from});
  std::sort(r.transitions.begin(), r.transitions.end());
  return r;
}

Dfa determinize(const Nfa& a) {
  const int k = a.k();
  // Per-state outgoing edges bucketed by letter for fast subset stepping.
  std::vector<std::vector<std::vector<int>>> succ(
      a.num_states, std::vector<std::vector<int>>(k));
  for (const Transition& t : a.transitions) succ[t.from][t.letter].push_back(t.to);

  std::map<std::vector<int>, int> subset_id;
  std::vector<std::vector<int>> subsets;
  std::vector<bool> subset_final;

  auto intern = [&](std::vector<int> s) {
    auto [it, inserted] = subset_id.emplace(std::move(s), static_cast<int>(subsets.size()));
    if (inserted) {
      subsets.push_back(it->first);
      bool f = false;
      for (int q : it->first)
        if (std::binary_search(a.finals.begin(), a.finals.end(), q)) f = true;
      subset_final.push_back(f);
    }
    return it->second;
  };

  intern(a.initials);  // may be the empty subset when there is no initial state
  std::vector<std::vector<int>> out_rows;
  std::vector<char> in_next(a.num_states, 0);
  for (size_t cur = 0; cur < subsets.size(); ++cur) {
    std::vector<int> row(k, -1);
    for (int x = 0; x < k; ++x) {
      std::vector<int> nxt;
      for (int q : subsets[cur])
        for (int to : succ[q][x])
          if (!in_next[to]) {
            in_next[to] = 1;
            nxt.push_back(to);
          }
      for (int q : nxt) in_next[q] = 0;
      if (nxt.empty()) continue;  // dead letter: leave undefined
      std::sort(nxt.begin(), nxt.end());
      row[x] = intern(std::move(nxt));
    }
    out_rows.push_back(std::move(row));
  }

  Dfa d = Dfa::blank(static_cast<int>(subsets.size()), a.alphabet);
  d.initial = 0;
  for (int s = 0; s < d.num_states; ++s) {
    d.finals[s] = subset_final[s];
    for (int x = 0; x < k; ++x) d.delta[static_cast<size_t>(s) * k + x] = out_rows[s][x];
  }
  return d;
}

namespace {

// Accessible-and-coaccessible mask; shared by both trim overloads.
std::vector<bool> live_states(const Nfa& a) {
  std::vector<std::vector<int>> fwd(a.num_states), bwd(a.num_states);
  for (const Transition& t : a.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto bfs = [&](const std::vector<int>& seeds, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(a.num_states, false);
    std::deque<int> queue;
    for (int q : seeds)
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int to : adj[q])
        if (!seen[to]) {
          seen[to] = true;
          queue.push_back(to);
        }
    }
    return seen;
  };
  std::vector<bool> acc = bfs(a.initials, fwd);
  std::vector<bool> coacc = bfs(a.finals, bwd);
  std::vector<bool> live(a.num_states);
  for (int q = 0; q < a.num_states; ++q) live[q] = acc[q] && coacc[q];
  return live;
}

}  // namespace

Nfa trim(const Nfa& a) {
  std::vector<bool> live = live_states(a);
  std::vector<int> renum(a.num_states, -1);
  int next_id = 0;
  for (int q = 0; q < a.num_states; ++q)
    if (live[q]) renum[q] = next_id++;

  Nfa r;
  r.num_states = next_id;
  r.alphabet = a.alphabet;
  for (int q : a.initials)
    if (renum[q] >= 0) r.initials.push_back(renum[q]);
  for (int q : a.finals)
    if (renum[q] >= 0) r.finals.push_back(renum[q]);
  for (const Transition& t : a.transitions)
    if (renum[t.from] >= 0 && renum[t.to] >= 0)
      r.transitions.push_back({renum[t.from], t.letter, renum[t.to]});
  std::sort(r.transitions.begin(), r.transitions.end());
  return r;
}

Dfa trim(const Dfa& d) {
  if (d.is_empty_language()) return d;
  std::vector<bool> live = live_states(to_nfa(d));
  if (!live[d.initial]) return Dfa::empty_language(d.alphabet);
  std::vector<int> renum(d.num_states, -1);
  int next_id = 0;
  for (int q = 0; q < d.num_states; ++q)
    if (live[q]) renum[q] = next_id++;

  Dfa r = Dfa::blank(next_id, d.alphabet);
  r.initial = renum[d.initial];
  for (int q = 0; q < d.num_states; ++q) {
    if (!live[q]) continue;
    r.finals[renum[q]] = d.finals[q];
    for (int x = 0; x < d.k(); ++x) {
      int to = d.next(q, x);
      if (to >= 0 && live[to]) r.set_next(renum[q], x, renum[to]);
    }
  }
  return r;
}

bool is_complete(const Dfa& d) {
  if (d.num_states == 0) return false;
  for (int v : d.delta)
    if (v < 0) return false;
  return true;
}

Dfa complete_with_sink(const Dfa& d) {
  if (is_complete(d)) return d;
  Dfa r = Dfa::blank(std::max(d.num_states, 1) + (d.num_states > 0 ? 1 : 0), d.alphabet);
  // 0-state empty value: one non-final all-absorbing state.
  if (d.num_states == 0) {
    r.initial = 0;
    for (int x = 0; x < r.k(); ++x) r.set_next(0, x, 0);
    return r;
  }
  const int sink = d.num_states;
  r.initial = d.initial;
  for (int q = 0; q < d.num_states; ++q) {
    r.finals[q] = d.finals[q];
    for (int x = 0; x < d.k(); ++x) {
      int to = d.next(q, x);
      r.set_next(q, x, to >= 0 ? to : sink);
    }
  }
  for (int x = 0; x < d.k(); ++x) r.set_next(sink, x, sink);
  return r;
}

bool accepts(const Dfa& d, std::string_view word) {
  int q = d.is_empty_language() ? -1 : d.initial;
  for (char c : word) {
    int x = letter_index(d.alphabet, c);
    if (x < 0) fail(Err::UnknownSymbol, std::string("symbol '") + c + "' not in alphabet");
    if (q >= 0) q = d.next(q, x);
  }
  return q >= 0 && d.finals[q];
}

Signature state_signature(const Dfa& d, int q) {
  Signature s;
  s.is_final = d.finals[q];
  for (int x = 0; x < d.k(); ++x) {
    int to = d.next(q, x);
    if (to >= 0) s.arcs.emplace_back(x, to);
  }
  return s;
}

std::vector<std::string> language_of(const Dfa& d) {
  Dfa t = trim(d);
  std::vector<std::string> words;
  if (t.is_empty_language()) return words;
  // DFS over the trim automaton; a repeated state on the current path is a
  // cycle, i.e. an infinite language.
  std::vector<char> on_path(t.num_states, 0);
  std::string prefix;
  auto walk = [&](auto&& self, int q) -> void {
    if (on_path[q]) fail(Err::NotAcyclic, "language is infinite");
    on_path[q] = 1;
    if (t.finals[q]) words.push_back(prefix);
    for (int x = 0; x < t.k(); ++x) {
      int to = t.next(q, x);
      if (to < 0) continue;
      prefix.push_back(t.alphabet[x]);
      self(self, to);
      prefix.pop_back();
    }
    on_path[q] = 0;
  };
  walk(walk, t.initial);
  std::sort(words.begin(), words.end());
  return words;
}

}  // namespace fam
