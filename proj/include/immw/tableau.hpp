#pragma once

#include <string>
#include <vector>

#include "immw/partition.hpp"

namespace immw {

/// Filling of the diagram of `shape` by 1..m, rows and columns strictly increasing.
class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int i, int j) const { return rows_[i][j]; }
  int size() const { return shape_.size(); }

  /// Row/column of the cell holding value `r` (1-based value, 0-based cell).
  std::pair<int, int> cell_of(int r) const;
  /// Content (column − row) of the cell holding value `r`.
  int content_of(int r) const { auto [i, j] = cell_of(r); return j - i; }

  /// Rows concatenated top to bottom; the enumeration sort key.
  std::vector<int> row_word() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Rows weakly increasing, columns strictly increasing, entries in 1..n.
class SemistandardTableau {
 public:
  SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int i, int j) const { return rows_[i][j]; }
  int max_entry() const;

  /// Content: weight(n)[i-1] = number of entries equal to i.
  WeakComposition weight(int n) const;

  friend bool operator==(const SemistandardTableau& a, const SemistandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator<(const SemistandardTableau& a, const SemistandardTableau& b) {
    return a.rows_ < b.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Triangular array λ_{ij}, 1 ≤ j ≤ i ≤ n, with the interlacing relations
/// λ_{ij} ≥ λ_{i−1,j} ≥ λ_{i,j+1}.
class GTPattern {
 public:
  /// rows[i-1] has length i (top row is rows[n-1]).
  explicit GTPattern(std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// λ_{ij} with 1-based i, j; zero for j > i.
  int at(int i, int j) const;

  /// Weight recovered from row-sum differences.
  WeakComposition weight() const;

  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// All SYT of `shape`, sorted by row word lexicographically.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// All SSYT of `shape` and content `mu`; empty when none exist.
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, const WeakComposition& mu);

/// Kostka number K_{λμ} = |SSYT(λ, μ)|.
long long kostka(const Partition& shape, const WeakComposition& mu);

GTPattern gt_from_ssyt(const SemistandardTableau& tab, int n);
SemistandardTableau ssyt_from_gt(const GTPattern& pattern);

struct ThetaResult {
  std::vector<std::vector<int>> filling;
  bool is_semistandard;
};

/// Replace entry r of a standard tableau by the r-th smallest element of the
/// multiset built from `mu` (ties broken by multiset order).
ThetaResult theta_mu(const StandardTableau& tab, const WeakComposition& mu);

}  // namespace immw
