#include "fam/partition.hpp"

#include <algorithm>
#include <numeric>

namespace fam {

Partition Partition::from_class_of(const std::vector<int>& raw) {
  Partition p;
  p.n = static_cast<int>(raw.size());
  p.class_of.assign(p.n, -1);
  int max_raw = -1;
  for (int c : raw) max_raw = std::max(max_raw, c);
  std::vector<int> renum(max_raw + 1, -1);
  for (int q = 0; q < p.n; ++q) {
    int& id = renum[raw[q]];
    if (id < 0) id = p.num_classes++;
    p.class_of[q] = id;
  }
  return p;
}

Partition Partition::universal(int n) { return from_class_of(std::vector<int>(n, 0)); }

Partition Partition::identity(int n) {
  std::vector<int> raw(n);
  std::iota(raw.begin(), raw.end(), 0);
  return from_class_of(raw);
}

Partition Partition::two_block(int n, const std::vector<bool>& in_block) {
  std::vector<int> raw(n);
  for (int q = 0; q < n; ++q) raw[q] = in_block[q] ? 0 : 1;
  return from_class_of(raw);
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int q = 0; q < n; ++q) out[class_of[q]].push_back(q);
  return out;
}

Partition meet(const Partition& p1, const Partition& p2) {
  if (p1.n != p2.n) fail(Err::GroundSetMismatch, "meet over different ground sets");
  // Pair (c1, c2) -> fresh id via a flat lookup table: first-occurrence
  // numbering falls out of from_class_of.
  std::vector<int> raw(p1.n);
  std::vector<int> table(static_cast<size_t>(p1.num_classes) * p2.num_classes, -1);
  int next_id = 0;
  for (int q = 0; q < p1.n; ++q) {
    size_t key = static_cast<size_t>(p1.class_of[q]) * p2.num_classes + p2.class_of[q];
    if (table[key] < 0) table[key] = next_id++;
    raw[q] = table[key];
  }
  return Partition::from_class_of(raw);
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.n != coarse.n) fail(Err::GroundSetMismatch, "refines over different ground sets");
  std::vector<int> image(fine.num_classes, -1);
  for (int q = 0; q < fine.n; ++q) {
    int& img = image[fine.class_of[q]];
    if (img < 0)
      img = coarse.class_of[q];
    else if (img != coarse.class_of[q])
      return false;
  }
  return true;
}

std::vector<int> preimage(const Dfa& d, const std::vector<int>& block, int letter) {
  std::vector<bool> in_block(d.num_states, false);
  for (int q : block) in_block[q] = true;
  std::vector<int> pre;
  for (int q = 0; q < d.num_states; ++q) {
    int to = d.next(q, letter);
    if (to >= 0 && in_block[to]) pre.push_back(q);
  }
  return pre;
}

std::vector<std::vector<int>> splitter_apply(const Dfa& d, const std::vector<int>& splitter_block,
                                             int letter, const std::vector<int>& target_block) {
  std::vector<bool> hit(d.num_states, false);
  for (int q : preimage(d, splitter_block, letter)) hit[q] = true;
  std::vector<int> inter, rest;
  for (int q : target_block) (hit[q] ? inter : rest).push_back(q);
  std::sort(inter.begin(), inter.end());
  std::sort(rest.begin(), rest.end());
  std::vector<std::vector<int>> blocks;
  if (!inter.empty()) blocks.push_back(std::move(inter));
  if (!rest.empty()) blocks.push_back(std::move(rest));
  return blocks;
}

Partition splitter_partition(const Dfa& d, const std::vector<int>& splitter_block, int letter) {
  std::vector<bool> hit(d.num_states, false);
  for (int q : preimage(d, splitter_block, letter)) hit[q] = true;
  return Partition::two_block(d.num_states, hit);
}

RefinablePartition::RefinablePartition(int n) : n_(n) {
  elements_.resize(n);
  std::iota(elements_.begin(), elements_.end(), 0);
  location_ = elements_;
  class_of_.assign(n, 0);
  if (n > 0) classes_.push_back({0, n, 0});
}

std::vector<int> RefinablePartition::members_unordered(int c) const {
  return {elements_.begin() + classes_[c].begin, elements_.begin() + classes_[c].end};
}

std::vector<int> RefinablePartition::members(int c) const {
  std::vector<int> m = members_unordered(c);
  std::sort(m.begin(), m.end());
  return m;
}

void RefinablePartition::mark(int q) {
  ClassInfo& info = classes_[class_of_[q]];
  int loc = location_[q];
  if (loc < info.begin + info.marked) return;  // already marked
  if (info.marked == 0) touched_.push_back(class_of_[q]);
  // Swap q into the marked prefix [begin, begin+marked).
  int dest = info.begin + info.marked;
  int other = elements_[dest];
  std::swap(elements_[loc], elements_[dest]);
  location_[q] = dest;
  location_[other] = loc;
  ++info.marked;
}

std::vector<RefinablePartition::Split> RefinablePartition::mark_and_split(
    const std::vector<int>& hits) {
  for (int q : hits) mark(q);
  std::vector<Split> splits;
  for (int c : touched_) {
    if (classes_[c].marked == classes_[c].end - classes_[c].begin) {
      classes_[c].marked = 0;  // whole class hit: no split
      continue;
    }
    // The marked prefix becomes a fresh class; the old id keeps C \ hits.
    // Index access throughout: push_back may reallocate classes_.
    int fresh = static_cast<int>(classes_.size());
    classes_.push_back({classes_[c].begin, classes_[c].begin + classes_[c].marked, 0});
    classes_[c].begin += classes_[c].marked;
    classes_[c].marked = 0;
    const ClassInfo fresh_info = classes_[fresh];
    for (int pos = fresh_info.begin; pos < fresh_info.end; ++pos)
      class_of_[elements_[pos]] = fresh;
    splits.push_back({c, fresh});
  }
  touched_.clear();
  return splits;
}

Partition RefinablePartition::to_partition() const { return Partition::from_class_of(class_of_); }

SplitterQueue::SplitterQueue(QueuePolicy policy, int num_letters)
    : policy_(policy), num_letters_(num_letters) {}

void SplitterQueue::ensure_capacity(int cls) {
  size_t need = static_cast<size_t>(cls + 1) * num_letters_;
  if (pending_.size() < need) {
    pending_.resize(need, false);
    pos_.resize(need, Pos{0, 0});
  }
}

bool SplitterQueue::contains(int cls, int letter) const {
  size_t k = key(cls, letter);
  return k < pending_.size() && pending_[k];
}

void SplitterQueue::push(int8_t set, SplitterRef s) {
  ensure_capacity(s.cls);
  std::vector<SplitterRef>& v = set == 0 ? cur_ : fut_;
  pos_[key(s.cls, s.letter)] = Pos{set, static_cast<int>(v.size())};
  v.push_back(s);
  pending_[key(s.cls, s.letter)] = true;
  ++pending_count_;
}

void SplitterQueue::add(int cls, int letter) {
  push(policy_ == QueuePolicy::TWO_SETS ? int8_t{1} : int8_t{0}, {cls, letter});
}

void SplitterQueue::add_initial(int cls, int letter) { push(0, {cls, letter}); }

void SplitterQueue::replace(int old_cls, int letter, int kept_cls, int fresh_cls) {
  size_t old_key = key(old_cls, letter);
  Pos p = pos_[old_key];
  ensure_capacity(std::max(kept_cls, fresh_cls));
  // Rewrite the surviving half in place so it keeps its queue position (and,
  // under TWO_SETS, its set); the other half joins the same set at the tail.
  pending_[old_key] = false;
  --pending_count_;
  std::vector<SplitterRef>& v = p.set == 0 ? cur_ : fut_;
  v[p.index] = {kept_cls, letter};
  pending_[key(kept_cls, letter)] = true;
  pos_[key(kept_cls, letter)] = p;
  ++pending_count_;
  push(p.set, {fresh_cls, letter});
}

SplitterRef SplitterQueue::take() {
  if (pending_count_ == 0) fail(Err::TakeFromEmpty, "take on empty splitter queue");
  SplitterRef s;
  switch (policy_) {
    case QueuePolicy::LIFO:
      s = cur_.back();
      cur_.pop_back();
      break;
    case QueuePolicy::FIFO:
      s = cur_[head_++];
      break;
    case QueuePolicy::TWO_SETS:
      if (head_ == cur_.size()) {
        // Current set drained: swap in the future set, one cycle done.
        cur_ = std::move(fut_);
        fut_.clear();
        head_ = 0;
        ++cycles_;
        for (size_t i = 0; i < cur_.size(); ++i)
          pos_[key(cur_[i].cls, cur_[i].letter)] = Pos{0, static_cast<int>(i)};
      }
      s = cur_[head_++];
      break;
  }
  pending_[key(s.cls, s.letter)] = false;
  --pending_count_;
  return s;
}

}  // namespace fam
