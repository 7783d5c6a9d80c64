#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace immw {

/// Weakly decreasing positive parts; the empty partition is legal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Decreasing rearrangement with zeros dropped.
  static Partition from_unsorted(std::vector<int> values);

  int size() const { return size_; }   // m = Σ parts
  int depth() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < depth() ? parts_[i] : 0; }  // 0-based, padded
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Conjugate (transposed diagram) partition.
  Partition conjugate() const;

  std::string to_string() const;  // "2,1"; "" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Fixed-length tuple of nonnegative integers; a GL_n weight.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> entries);

  int length() const { return static_cast<int>(entries_.size()); }
  int total() const { return total_; }
  int entry(int i) const { return entries_[i]; }  // 0-based
  const std::vector<int>& entries() const { return entries_; }

  std::string to_string() const;

  friend bool operator==(const WeakComposition& a, const WeakComposition& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const WeakComposition& a, const WeakComposition& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

/// Multiset I = (i_1 ≤ ... ≤ i_m) of values in [n], the row/column index list
/// of a generalized principal submatrix.
class MultisetIndex {
 public:
  MultisetIndex() = default;
  /// Values must be nondecreasing and ≥ 1.
  explicit MultisetIndex(std::vector<int> indices);

  static MultisetIndex from_weight(const WeakComposition& mu);

  int size() const { return static_cast<int>(indices_.size()); }
  int index(int k) const { return indices_[k]; }  // 1-based values
  const std::vector<int>& indices() const { return indices_; }
  int max_value() const { return indices_.empty() ? 0 : indices_.back(); }

  /// Multiplicity vector as a weak n-composition.
  WeakComposition weight(int n) const;

  /// m(I) = ∏ m_i! over the multiplicities.
  long long m_of() const;

 private:
  std::vector<int> indices_;
};

long long factorial(int m);

/// All partitions of m in reverse-lexicographic order: (m), ..., (1^m).
std::vector<Partition> enumerate_partitions(int m, std::optional<int> max_depth = std::nullopt);

/// Dominance order: every prefix sum of lhs at least that of rhs. Requires |lhs| = |rhs|.
bool dominates(const Partition& lhs, const Partition& rhs);

Partition sort_to_partition(const WeakComposition& mu);

struct HookData {
  std::vector<std::vector<int>> hooks;  // hook length per cell
  long long hook_product;               // h_λ
  long long tableau_count;              // f_λ = m!/h_λ
};

HookData hook_data(const Partition& shape);

/// All weak `length`-compositions of `total`, first entry descending.
std::vector<WeakComposition> weak_compositions(int total, int length);

}  // namespace immw
