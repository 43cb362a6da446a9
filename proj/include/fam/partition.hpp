#pragma once

#include <compare>
#include <vector>

#include "fam/automaton.hpp"
#include "fam/error.hpp"

namespace fam {

// Immutable partition of {0..n-1} in canonical form: classes are numbered by
// first occurrence, i.e. class_of[0] == 0 and every class id appears before
// any larger id. Two partitions of the same ground set are equal as set
// systems iff they are equal as values.
struct Partition {
  int n = 0;
  int num_classes = 0;
  std::vector<int> class_of;

  static Partition from_class_of(const std::vector<int>& raw);
  static Partition universal(int n);
  static Partition identity(int n);
  // {block, complement}, empty blocks dropped.
  static Partition two_block(int n, const std::vector<bool>& in_block);

  std::vector<std::vector<int>> classes() const;  // members ascending
  bool operator==(const Partition&) const = default;
};

// Coarsest partition refining both operands. Throws Err::GroundSetMismatch.
Partition meet(const Partition& p1, const Partition& p2);

// True iff every class of `fine` lies inside one class of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

// a^{-1}P = {q | q.a defined and q.a in P}; `block` need not be sorted,
// result is ascending.
std::vector<int> preimage(const Dfa& d, const std::vector<int>& block, int letter);

// (P,a)|R: the nonempty sets among R n a^{-1}P and R \ a^{-1}P, intersection
// first. Blocks are ascending.
std::vector<std::vector<int>> splitter_apply(const Dfa& d, const std::vector<int>& splitter_block,
                                             int letter, const std::vector<int>& target_block);

// (P,a)|Q as a partition of the whole state set.
Partition splitter_partition(const Dfa& d, const std::vector<int>& splitter_block, int letter);

// Hopcroft's partition structure. One permutation of the elements grouped by
// class, a location index, and per-class bounds give O(1) class lookup, O(|C|)
// member enumeration, and splitting in time O(marked). Splitting keeps the old
// class id on the unmarked part C \ hits and hands a fresh id to C n hits, so
// a pending (class, letter) queue entry stays valid for the retained part.
class RefinablePartition {
 public:
  explicit RefinablePartition(int n);  // single class 0 covering everything

  int size() const { return n_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int q) const { return class_of_[q]; }
  int class_size(int c) const { return classes_[c].end - classes_[c].begin; }
  std::vector<int> members(int c) const;         // ascending
  std::vector<int> members_unordered(int c) const;

  struct Split {
    int retained;  // old id, now C \ hits
    int created;   // fresh id, C n hits
  };
  // Marks every state of `hits`, then splits each class holding both marked
  // and unmarked states. Work is O(|hits|) plus O(1) per split.
  std::vector<Split> mark_and_split(const std::vector<int>& hits);

  Partition to_partition() const;

 private:
  void mark(int q);

  struct ClassInfo {
    int begin;
    int end;     // one past last
    int marked;  // count of marked elements, swapped to [begin, begin+marked)
  };
  int n_;
  std::vector<int> elements_;  // permutation of 0..n-1 grouped by class
  std::vector<int> location_;  // state -> index in elements_
  std::vector<int> class_of_;
  std::vector<ClassInfo> classes_;
  std::vector<int> touched_;   // classes with marked > 0
};

enum class QueuePolicy { FIFO, LIFO, TWO_SETS };

struct SplitterRef {
  int cls = 0;
  int letter = 0;
  auto operator<=>(const SplitterRef&) const = default;
};

// Hopcroft's waiting set with exact O(1) membership. TWO_SETS implements
// David's strategy: take() drains the current set in FIFO order and swaps in
// the future set when the current one runs dry (each swap is one "cycle");
// replace() keeps both halves of a split pending entry in the set the old
// entry occupied, while add() appends new minimum-size splitters to the
// future set.
class SplitterQueue {
 public:
  SplitterQueue(QueuePolicy policy, int num_letters);

  bool empty() const { return pending_count_ == 0; }
  int pending_count() const { return pending_count_; }
  bool contains(int cls, int letter) const;
  void add(int cls, int letter);  // precondition: not already pending
  // Initialization-time add: lands in the current set even under TWO_SETS,
  // so the first drain of the seed splitters is not counted as a swap cycle.
  void add_initial(int cls, int letter);
  // Rewrites the pending (old_cls, letter) entry in place to kept_cls and
  // appends fresh_cls alongside it. Precondition: contains(old_cls, letter).
  void replace(int old_cls, int letter, int kept_cls, int fresh_cls);
  SplitterRef take();  // Err::TakeFromEmpty
  int cycles() const { return cycles_; }

 private:
  struct Pos {
    int8_t set;  // 0 = current, 1 = future
    int index;
  };
  size_t key(int cls, int letter) const { return static_cast<size_t>(cls) * num_letters_ + letter; }
  void ensure_capacity(int cls);
  void push(int8_t set, SplitterRef s);

  QueuePolicy policy_;
  int num_letters_;
  std::vector<SplitterRef> cur_, fut_;  // fut_ used by TWO_SETS only
  size_t head_ = 0;                     // FIFO / TWO_SETS read position in cur_
  std::vector<bool> pending_;           // key -> pending?
  std::vector<Pos> pos_;                // key -> location while pending
  int pending_count_ = 0;
  int cycles_ = 0;
};

}  // namespace fam
