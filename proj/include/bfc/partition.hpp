#ifndef BFC_PARTITION_HPP
#define BFC_PARTITION_HPP

#include <numeric>
#include <vector>

#include "bfc/algebra.hpp"

namespace bfc {

/// Partition of {0..n-1} in canonical least-element labeling: label[e] is the
/// least element of e's block. Equality of partitions is array equality.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> labels) : labels_(std::move(labels)) {
    for (std::size_t e = 0; e < labels_.size(); ++e) {
      const int l = labels_[e];
      if (l < 0 || static_cast<std::size_t>(l) > e) throw ValidationError("partition label above its element");
      if (labels_[static_cast<std::size_t>(l)] != l) throw ValidationError("partition label is not a block leader");
    }
  }

  static Partition discrete(int n) {
    std::vector<int> l(static_cast<std::size_t>(n));
    std::iota(l.begin(), l.end(), 0);
    return Partition(std::move(l));
  }

  static Partition full(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  /// Canonicalizes an arbitrary block assignment (equal values = same block).
  static Partition from_classes(const std::vector<int>& cls) {
    std::vector<int> labels(cls.size(), -1);
    for (std::size_t e = 0; e < cls.size(); ++e) {
      if (labels[e] >= 0) continue;
      labels[e] = static_cast<int>(e);
      for (std::size_t f = e + 1; f < cls.size(); ++f)
        if (cls[f] == cls[e] && labels[f] < 0) labels[f] = static_cast<int>(e);
    }
    return Partition(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int label(Element e) const { return labels_.at(static_cast<std::size_t>(e)); }
  bool related(Element a, Element b) const { return label(a) == label(b); }
  const std::vector<int>& labels() const { return labels_; }

  int block_count() const {
    int c = 0;
    for (std::size_t e = 0; e < labels_.size(); ++e)
      if (labels_[e] == static_cast<int>(e)) ++c;
    return c;
  }

  /// Block representatives in increasing order.
  std::vector<Element> representatives() const {
    std::vector<Element> reps;
    for (std::size_t e = 0; e < labels_.size(); ++e)
      if (labels_[e] == static_cast<int>(e)) reps.push_back(static_cast<Element>(e));
    return reps;
  }

  bool is_discrete() const {
    for (std::size_t e = 0; e < labels_.size(); ++e)
      if (labels_[e] != static_cast<int>(e)) return false;
    return true;
  }
  bool is_full() const {
    for (int l : labels_)
      if (l != 0) return false;
    return !labels_.empty();
  }

  /// Refinement order: every block of *this is inside a block of coarser.
  bool refines(const Partition& coarser) const {
    if (size() != coarser.size()) throw ValidationError("partition size mismatch");
    for (std::size_t e = 0; e < labels_.size(); ++e)
      if (coarser.labels_[static_cast<std::size_t>(labels_[e])] != coarser.labels_[e]) return false;
    return true;
  }

  bool operator==(const Partition& o) const { return labels_ == o.labels_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return labels_ < o.labels_; }

 private:
  std::vector<int> labels_;
};

/// Disjoint-set helper used by the closure algorithms; results are exported
/// through Partition::from_classes for the canonical form.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  /// Returns true if the classes were distinct. Smaller root wins so the
  /// eventual labeling is already close to canonical.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

  Partition to_partition() {
    std::vector<int> cls(parent_.size());
    for (std::size_t e = 0; e < parent_.size(); ++e) cls[e] = find(static_cast<int>(e));
    return Partition::from_classes(cls);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace bfc

#endif  // BFC_PARTITION_HPP
