#include "fam/acyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace fam {

namespace {

int letter_or_fail(const std::string& alphabet, char symbol) {
  int x = letter_index(alphabet, symbol);
  if (x < 0) fail(Err::UnknownSymbol, std::string("symbol '") + symbol + "' is not in the alphabet");
  return x;
}

}  // namespace

std::vector<int> heights(const Dfa& d) {
  const int n = d.num_states;
  const int k = d.k();
  std::vector<int> h(n, 0);
  std::vector<char> color(n, 0);  // 0 unseen, 1 on the DFS stack, 2 finished
  std::vector<std::pair<int, int>> stack;
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto [q, i] = stack.back();
      if (i == k) {
        int best = 0;
        for (int x = 0; x < k; ++x) {
          int t = d.next(q, x);
          if (t >= 0) best = std::max(best, 1 + h[t]);
        }
        h[q] = best;
        color[q] = 2;
        stack.pop_back();
        continue;
      }
      stack.back().second = i + 1;
      int t = d.next(q, i);
      if (t < 0) continue;
      if (color[t] == 1) fail(Err::NotAcyclic, "cycle through state " + std::to_string(t));
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, 0});
      }
    }
  }
  return h;
}

Dfa revuz_minimize(const Dfa& d) {
  if (d.num_states == 0) return d;
  const std::vector<int> h = heights(d);
  const int n = d.num_states;
  const int k = d.k();
  const int max_h = *std::max_element(h.begin(), h.end());

  std::vector<std::vector<int>> by_height(max_h + 1);
  for (int q = 0; q < n; ++q) by_height[h[q]].push_back(q);

  // rep[q] = smallest state already known equal to q. A state's signature is
  // taken with targets remapped through rep, so each level sees the merges of
  // the levels below it.
  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<std::pair<Signature, int>> sigs;
  for (const auto& level : by_height) {
    sigs.clear();
    for (int q : level) {
      Signature s{d.finals[q], {}};
      for (int x = 0; x < k; ++x) {
        int t = d.next(q, x);
        if (t >= 0) s.arcs.emplace_back(x, rep[t]);
      }
      sigs.emplace_back(std::move(s), q);
    }
    std::sort(sigs.begin(), sigs.end());
    for (size_t i = 0; i < sigs.size();) {
      size_t j = i;
      while (j < sigs.size() && sigs[j].first == sigs[i].first) ++j;
      for (size_t t = i; t < j; ++t) rep[sigs[t].second] = sigs[i].second;
      i = j;
    }
  }

  std::vector<int> newid(n, -1);
  int m = 0;
  for (int q = 0; q < n; ++q)
    if (rep[q] == q) newid[q] = m++;
  Dfa out = Dfa::blank(m, d.alphabet);
  out.initial = newid[rep[d.initial]];
  for (int q = 0; q < n; ++q) {
    if (rep[q] != q) continue;
    out.finals[newid[q]] = d.finals[q];
    for (int x = 0; x < k; ++x) {
      int t = d.next(q, x);
      if (t >= 0) out.set_next(newid[q], x, newid[rep[t]]);
    }
  }
  return out;
}

Dfa build_trie(const std::vector<std::string>& words) {
  std::set<char> symbols;
  for (const auto& w : words) symbols.insert(w.begin(), w.end());
  return build_trie(words, std::string(symbols.begin(), symbols.end()));
}

Dfa build_trie(const std::vector<std::string>& words, std::string alphabet) {
  const int k = static_cast<int>(alphabet.size());
  std::vector<std::vector<int>> next(1, std::vector<int>(k, -1));
  std::vector<bool> fin(1, false);
  for (const auto& w : words) {
    int cur = 0;
    for (char c : w) {
      int x = letter_or_fail(alphabet, c);
      if (next[cur][x] < 0) {
        next[cur][x] = static_cast<int>(next.size());
        next.push_back(std::vector<int>(k, -1));
        fin.push_back(false);
      }
      cur = next[cur][x];
    }
    fin[cur] = true;
  }
  Dfa out = Dfa::blank(static_cast<int>(next.size()), std::move(alphabet));
  out.initial = 0;
  for (int q = 0; q < out.num_states; ++q) {
    out.finals[q] = fin[q];
    for (int x = 0; x < k; ++x)
      if (next[q][x] >= 0) out.set_next(q, x, next[q][x]);
  }
  return out;
}

PrefixSuffixSplit prefix_suffix_decomposition(const Dfa& d, std::string_view w) {
  for (char c : w) letter_or_fail(d.alphabet, c);
  PrefixSuffixSplit out;
  if (d.num_states == 0) {
    out.suffix.assign(w.begin(), w.end());
    out.anchor = -1;
    return out;
  }
  int cur = d.initial;
  size_t i = 0;
  while (i < w.size()) {
    int t = d.next(cur, letter_index(d.alphabet, w[i]));
    if (t < 0) break;
    cur = t;
    ++i;
  }
  out.common_prefix.assign(w.begin(), w.begin() + i);
  out.suffix.assign(w.begin() + i, w.end());
  out.anchor = cur;
  return out;
}

// ---------------------------------------------------------------------------
// Incremental construction from sorted input.

DaciukBuilder::DaciukBuilder(std::string alphabet) : alphabet_(std::move(alphabet)) {
  states_.push_back(State{});  // the initial state, id 0
  path_.push_back(0);
}

Signature DaciukBuilder::signature_of(int q) const {
  return Signature{states_[q].is_final, states_[q].arcs};
}

int DaciukBuilder::arc(int q, int letter) const {
  for (const auto& [x, t] : states_[q].arcs)
    if (x == letter) return t;
  return -1;
}

void DaciukBuilder::set_arc(int q, int letter, int to) {
  auto& arcs = states_[q].arcs;
  auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair<int, int>{letter, -1});
  if (it != arcs.end() && it->first == letter)
    it->second = to;
  else
    arcs.insert(it, {letter, to});
}

void DaciukBuilder::minimize_path_from(size_t keep) {
  // Register or merge the path states strictly deeper than `keep`, bottom-up.
  // Path states have in-degree one, so a merge only reroutes the parent arc.
  while (path_.size() > keep + 1) {
    int child = path_.back();
    path_.pop_back();
    int parent = path_.back();
    auto [it, inserted] = register_.emplace(signature_of(child), child);
    if (!inserted) {
      set_arc(parent, letter_index(alphabet_, prev_word_[path_.size() - 1]), it->second);
      states_[child].dead = true;
    }
  }
}

void DaciukBuilder::insert(std::string_view word) {
  if (finished_) throw std::logic_error("DaciukBuilder: insert after finish");
  std::vector<int> letters;
  letters.reserve(word.size());
  for (char c : word) letters.push_back(letter_or_fail(alphabet_, c));
  if (has_words_ && word.compare(prev_word_) <= 0)
    fail(Err::NotSorted, "words must be inserted in strictly increasing order");

  size_t p = 0;
  while (p < word.size() && p < prev_word_.size() && word[p] == prev_word_[p]) ++p;
  minimize_path_from(p);

  for (size_t i = p; i < word.size(); ++i) {
    int fresh = static_cast<int>(states_.size());
    states_.push_back(State{});
    set_arc(path_.back(), letters[i], fresh);
    path_.push_back(fresh);
  }
  states_[path_.back()].is_final = true;
  prev_word_.assign(word.begin(), word.end());
  has_words_ = true;
}

Dfa DaciukBuilder::materialize() const {
  if (!has_words_) return Dfa::empty_language(alphabet_);
  std::vector<int> newid(states_.size(), -1);
  int m = 0;
  for (size_t q = 0; q < states_.size(); ++q)
    if (!states_[q].dead) newid[q] = m++;
  Dfa out = Dfa::blank(m, alphabet_);
  out.initial = 0;
  for (size_t q = 0; q < states_.size(); ++q) {
    if (states_[q].dead) continue;
    out.finals[newid[q]] = states_[q].is_final;
    for (const auto& [x, t] : states_[q].arcs) out.set_next(newid[q], x, newid[t]);
  }
  return out;
}

Dfa DaciukBuilder::snapshot() const { return materialize(); }

Dfa DaciukBuilder::finish() {
  if (!finished_) {
    minimize_path_from(0);
    finished_ = true;
  }
  return materialize();
}

bool DaciukBuilder::register_invariant_ok() const {
  std::vector<char> on_path(states_.size(), 0);
  for (int q : path_) on_path[q] = 1;
  size_t off_path_live = 0;
  for (size_t q = 0; q < states_.size(); ++q)
    if (!states_[q].dead && !on_path[q]) ++off_path_live;
  if (register_.size() != off_path_live) return false;
  for (const auto& [sig, id] : register_) {
    if (states_[id].dead || on_path[id]) return false;
    if (!(signature_of(id) == sig)) return false;
  }
  return true;
}

Dfa daciuk_build(const std::vector<std::string>& words) {
  std::set<char> symbols;
  for (const auto& w : words) symbols.insert(w.begin(), w.end());
  return daciuk_build(words, std::string(symbols.begin(), symbols.end()));
}

Dfa daciuk_build(const std::vector<std::string>& words, std::string alphabet) {
  DaciukBuilder builder(std::move(alphabet));
  for (const auto& w : words) builder.insert(w);
  return builder.finish();
}

// ---------------------------------------------------------------------------
// Dynamic single-word edits.

namespace {

// A minimal automaton whose w-path was cloned and edited: original states keep
// ids [0, first_new), the path copies follow. Trims, then re-minimizes the
// copies bottom-up against a register of the surviving original states. With
// all arc targets already resolved and pairwise distinguishable, signature
// equality is exactly language equality, so the result is minimal again.
struct EditBuild {
  std::string alphabet;
  int num_states = 0;
  int first_new = 0;
  int initial = 0;
  std::vector<int> delta;  // num_states x k, -1 = undefined
  std::vector<bool> finals;
};

Dfa finish_edit(EditBuild b) {
  const int m = b.num_states;
  const int k = static_cast<int>(b.alphabet.size());
  auto cell = [k](int q, int x) { return static_cast<size_t>(q) * k + x; };

  std::vector<char> reach(m, 0);
  std::vector<int> queue;
  reach[b.initial] = 1;
  queue.push_back(b.initial);
  for (size_t head = 0; head < queue.size(); ++head)
    for (int x = 0; x < k; ++x) {
      int t = b.delta[cell(queue[head], x)];
      if (t >= 0 && !reach[t]) {
        reach[t] = 1;
        queue.push_back(t);
      }
    }

  std::vector<std::vector<int>> rev(m);
  for (int q = 0; q < m; ++q) {
    if (!reach[q]) continue;
    for (int x = 0; x < k; ++x) {
      int t = b.delta[cell(q, x)];
      if (t >= 0 && reach[t]) rev[t].push_back(q);
    }
  }
  std::vector<char> live(m, 0);
  queue.clear();
  for (int q = 0; q < m; ++q)
    if (reach[q] && b.finals[q]) {
      live[q] = 1;
      queue.push_back(q);
    }
  for (size_t head = 0; head < queue.size(); ++head)
    for (int s : rev[queue[head]])
      if (!live[s]) {
        live[s] = 1;
        queue.push_back(s);
      }
  if (!live[b.initial]) return Dfa::empty_language(std::move(b.alphabet));

  std::vector<int> merged(m);
  std::iota(merged.begin(), merged.end(), 0);
  auto sig_of = [&](int q) {
    Signature s{b.finals[q], {}};
    for (int x = 0; x < k; ++x) {
      int t = b.delta[cell(q, x)];
      if (t >= 0 && live[t]) s.arcs.emplace_back(x, merged[t]);
    }
    return s;
  };
  std::map<Signature, int> reg;
  for (int q = 0; q < b.first_new; ++q)
    if (live[q]) reg.emplace(sig_of(q), q);
  // The copies form a chain whose only forward arc points at the next copy,
  // so scanning ids downward resolves every target before its sources.
  for (int q = m - 1; q >= b.first_new; --q) {
    if (!live[q]) continue;
    auto [it, inserted] = reg.emplace(sig_of(q), q);
    if (!inserted) merged[q] = it->second;
  }

  std::vector<int> newid(m, -1);
  int count = 0;
  for (int q = 0; q < m; ++q)
    if (live[q] && merged[q] == q) newid[q] = count++;
  Dfa out = Dfa::blank(count, std::move(b.alphabet));
  out.initial = newid[merged[b.initial]];
  for (int q = 0; q < m; ++q) {
    if (newid[q] < 0) continue;
    out.finals[newid[q]] = b.finals[q];
    for (int x = 0; x < k; ++x) {
      int t = b.delta[cell(q, x)];
      if (t >= 0 && live[t]) out.set_next(newid[q], x, newid[merged[t]]);
    }
  }
  return out;
}

}  // namespace

Dfa remove_word(const Dfa& d, std::string_view w) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (char c : w) letters.push_back(letter_or_fail(d.alphabet, c));
  if (d.num_states == 0) fail(Err::WordNotAccepted, "the empty automaton accepts no word");

  const int n = d.num_states;
  const int k = d.k();
  std::vector<int> path(w.size() + 1);
  path[0] = d.initial;
  for (size_t i = 0; i < w.size(); ++i) {
    int t = d.next(path[i], letters[i]);
    if (t < 0) fail(Err::WordNotAccepted, "word is not accepted");
    path[i + 1] = t;
  }
  if (!d.finals[path.back()]) fail(Err::WordNotAccepted, "word is not accepted");

  EditBuild b;
  b.alphabet = d.alphabet;
  b.num_states = n + static_cast<int>(w.size()) + 1;
  b.first_new = n;
  b.initial = n;
  b.delta.assign(static_cast<size_t>(b.num_states) * k, -1);
  std::copy(d.delta.begin(), d.delta.end(), b.delta.begin());
  b.finals.assign(b.num_states, false);
  for (int q = 0; q < n; ++q) b.finals[q] = d.finals[q];
  for (size_t i = 0; i <= w.size(); ++i) {
    int c = n + static_cast<int>(i);
    for (int x = 0; x < k; ++x) b.delta[static_cast<size_t>(c) * k + x] = d.next(path[i], x);
    b.finals[c] = d.finals[path[i]];
    if (i < w.size()) b.delta[static_cast<size_t>(c) * k + letters[i]] = c + 1;
  }
  b.finals[n + w.size()] = false;  // the one change: the end of the w-path
  return finish_edit(std::move(b));
}

Dfa add_word(const Dfa& d, std::string_view w) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (char c : w) letters.push_back(letter_or_fail(d.alphabet, c));

  if (d.num_states == 0) {
    // Chain automaton for {w}; minimal as-is.
    Dfa out = Dfa::blank(static_cast<int>(w.size()) + 1, d.alphabet);
    out.initial = 0;
    for (size_t i = 0; i < w.size(); ++i) out.set_next(static_cast<int>(i), letters[i], static_cast<int>(i) + 1);
    out.finals[w.size()] = true;
    return out;
  }

  const int n = d.num_states;
  const int k = d.k();
  std::vector<int> path{d.initial};
  size_t j = 0;
  while (j < w.size()) {
    int t = d.next(path.back(), letters[j]);
    if (t < 0) break;
    path.push_back(t);
    ++j;
  }
  if (j == w.size() && d.finals[path.back()]) fail(Err::WordAlreadyAccepted, "word is already accepted");

  EditBuild b;
  b.alphabet = d.alphabet;
  b.num_states = n + static_cast<int>(w.size()) + 1;
  b.first_new = n;
  b.initial = n;
  b.delta.assign(static_cast<size_t>(b.num_states) * k, -1);
  std::copy(d.delta.begin(), d.delta.end(), b.delta.begin());
  b.finals.assign(b.num_states, false);
  for (int q = 0; q < n; ++q) b.finals[q] = d.finals[q];
  // Copies of the traced prefix...
  for (size_t i = 0; i <= j; ++i) {
    int c = n + static_cast<int>(i);
    for (int x = 0; x < k; ++x) b.delta[static_cast<size_t>(c) * k + x] = d.next(path[i], x);
    b.finals[c] = d.finals[path[i]];
  }
  // ...then a fresh tail; the chain arcs overwrite the copied w-arcs.
  for (size_t i = 0; i < w.size(); ++i)
    b.delta[static_cast<size_t>(n + i) * k + letters[i]] = n + static_cast<int>(i) + 1;
  b.finals[n + w.size()] = true;
  return finish_edit(std::move(b));
}

}  // namespace fam
