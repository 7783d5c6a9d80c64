#pragma once

#include <vector>

#include "immw/partition.hpp"

namespace immw {

/// Bijection of {1..m}, stored 0-based in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int m);
  /// One-line notation with 1-based images.
  static Permutation from_one_line(const std::vector<int>& images_1based);
  /// Adjacent transposition s_i swapping i, i+1 (1-based i, 1 ≤ i ≤ m−1).
  static Permutation adjacent_transposition(int m, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i]; }  // 0-based
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;  // 1-based copy

  bool is_identity() const;
  /// (a ∘ b)(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;

  /// Word (i_1, ..., i_k) of 1-based adjacent-transposition indices with
  /// σ = s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_k} (bubble-sort decomposition).
  std::vector<int> adjacent_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Sorted cycle lengths as a partition of m.
Partition cycle_type(const Permutation& sigma);

/// All of 𝔖_m in lexicographic one-line order.
std::vector<Permutation> all_permutations(int m);

/// Lexicographic rank/unrank over one-line notation (factorial number system).
long long permutation_rank(const Permutation& sigma);
Permutation permutation_unrank(int m, long long rank);

}  // namespace immw
