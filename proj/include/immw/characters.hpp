#pragma once

#include <vector>

#include "immw/partition.hpp"
#include "immw/permutation.hpp"

namespace immw {

/// Irreducible character χ^λ on the class of cycle type ρ, by the
/// Murnaghan–Nakayama border-strip recursion. Exact; memoized; thread-safe.
long long mn_character(const Partition& shape, const Partition& rho);

/// Size of the conjugacy class of cycle type ρ in 𝔖_m.
long long conjugacy_class_size(const Partition& rho);

/// All irreducible characters of 𝔖_m. Rows (characters) are indexed by
/// partitions in reverse-lexicographic order, columns (classes) by cycle type
/// in lexicographic order, so the identity class comes first.
class CharacterTable {
 public:
  explicit CharacterTable(int m);

  int m() const { return m_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<Partition>& classes() const { return classes_; }
  int index_of(const Partition& p) const;
  int class_index_of(const Partition& rho) const;

  long long value(int lambda_idx, int rho_idx) const { return values_[lambda_idx][rho_idx]; }
  long long value(const Partition& lambda, const Partition& rho) const;
  long long class_size(int rho_idx) const { return class_sizes_[rho_idx]; }

  /// Shared per-m instance behind a lock; callers may use it concurrently.
  static const CharacterTable& cached(int m);

 private:
  int m_;
  std::vector<Partition> partitions_;
  std::vector<Partition> classes_;
  std::vector<std::vector<long long>> values_;
  std::vector<long long> class_sizes_;
};

}  // namespace immw
