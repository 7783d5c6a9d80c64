#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "immw/matrix.hpp"
#include "immw/rng.hpp"

namespace immw {

enum class BidiagonalSide { lower, upper };

/// exp(tE) = I + tE for the nilpotent E_{i,i+1} (upper) or E_{i+1,i} (lower),
/// 1-based i. The Whitney form needs t > 0, so nonpositive t is rejected.
template <class S>
DenseMatrix<S> elementary_bidiagonal(int n, int i, const S& t, BidiagonalSide side) {
  static_assert(!ScalarTraits<S>::is_complex, "bidiagonal factors are real");
  if (i < 1 || i > n - 1) throw DomainError("elementary_bidiagonal: index out of range");
  if (!(t > S(0))) throw DomainError("elementary_bidiagonal: parameter must be positive");
  DenseMatrix<S> e = DenseMatrix<S>::Identity(n, n);
  if (side == BidiagonalSide::upper)
    e(i - 1, i) = t;
  else
    e(i, i - 1) = t;
  return e;
}

/// Nonsingular (or deliberately singular) totally nonnegative matrix in
/// factored Whitney form A = U₋ U₊ D, with every parameter retained so the
/// instance can be reproduced exactly.
class FactoredTN {
 public:
  /// Factors ordered as multiplied: ascending row index within each side.
  FactoredTN(int n, std::vector<std::pair<int, Rational>> lower,
             std::vector<std::pair<int, Rational>> upper, std::vector<Rational> diag)
      : n_(n), lower_(std::move(lower)), upper_(std::move(upper)), diag_(std::move(diag)) {
    if (static_cast<int>(diag_.size()) != n_)
      throw SizeMismatchError("FactoredTN: diagonal length != n");
    for (const Rational& d : diag_)
      if (d < Rational(0)) throw DomainError("FactoredTN: diagonal entries must be >= 0");
    assemble();
  }

  /// `num_factors` bidiagonal factors per side with positive parameters;
  /// `zero_diag_count` diagonal entries forced to zero for singular tests.
  static FactoredTN random(int n, std::uint64_t seed, int num_factors,
                           int zero_diag_count = 0) {
    SeededRng rng(seed);
    std::vector<std::pair<int, Rational>> lower, upper;
    for (int r = 0; r < num_factors && n > 1; ++r) {
      lower.emplace_back(r % (n - 1) + 1, rng.positive_rational());
      upper.emplace_back(r % (n - 1) + 1, rng.positive_rational());
    }
    std::vector<Rational> diag;
    for (int i = 0; i < n; ++i) diag.push_back(rng.positive_rational());
    for (int z = 0; z < zero_diag_count; ++z) diag[rng.next_int(0, n - 1)] = Rational(0);
    return FactoredTN(n, std::move(lower), std::move(upper), std::move(diag));
  }

  int n() const { return n_; }
  const DenseMatrix<Rational>& matrix() const { return matrix_; }
  const std::vector<std::pair<int, Rational>>& lower_factors() const { return lower_; }
  const std::vector<std::pair<int, Rational>>& upper_factors() const { return upper_; }
  const std::vector<Rational>& diag() const { return diag_; }

  Rational det() const {
    Rational d(1);
    for (const Rational& v : diag_) d *= v;
    return d;
  }
  bool nonsingular() const { return !det().is_zero(); }

 private:
  void assemble() {
    DenseMatrix<Rational> a = DenseMatrix<Rational>::Identity(n_, n_);
    for (const auto& [i, t] : lower_)
      a = a * elementary_bidiagonal<Rational>(n_, i, t, BidiagonalSide::lower);
    for (const auto& [i, t] : upper_)
      a = a * elementary_bidiagonal<Rational>(n_, i, t, BidiagonalSide::upper);
    DenseMatrix<Rational> d = DenseMatrix<Rational>::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) d(i, i) = diag_[i];
    matrix_ = a * d;
  }

  int n_;
  std::vector<std::pair<int, Rational>> lower_, upper_;
  std::vector<Rational> diag_;
  DenseMatrix<Rational> matrix_;
};

/// Positive-definite (or PSD when some d_i = 0) Hermitian matrix in factored
/// form A = Ū^t D U with U unit upper triangular.
template <class S>
class FactoredPD {
  static_assert(ScalarTraits<S>::is_exact, "FactoredPD carries exact certificates");

 public:
  FactoredPD(DenseMatrix<S> unit_upper, std::vector<Rational> diag)
      : unit_upper_(std::move(unit_upper)), diag_(std::move(diag)) {
    const int n = static_cast<int>(unit_upper_.rows());
    if (unit_upper_.cols() != n) throw SizeMismatchError("FactoredPD: U not square");
    if (static_cast<int>(diag_.size()) != n)
      throw SizeMismatchError("FactoredPD: diagonal length != n");
    for (int i = 0; i < n; ++i) {
      if (unit_upper_(i, i) != S(1)) throw DomainError("FactoredPD: U must be unipotent");
      for (int j = 0; j < i; ++j)
        if (!ScalarTraits<S>::is_zero(unit_upper_(i, j)))
          throw DomainError("FactoredPD: U must be upper triangular");
    }
    for (const Rational& d : diag_)
      if (d < Rational(0)) throw DomainError("FactoredPD: diagonal entries must be >= 0");
    assemble();
  }

  static FactoredPD random(int n, std::uint64_t seed, int zero_diag_count = 0) {
    SeededRng rng(seed);
    DenseMatrix<S> u = DenseMatrix<S>::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if constexpr (ScalarTraits<S>::is_complex)
          u(i, j) = rng.signed_gaussian();
        else
          u(i, j) = rng.signed_rational();
      }
    std::vector<Rational> diag;
    for (int i = 0; i < n; ++i) diag.push_back(rng.positive_rational());
    for (int z = 0; z < zero_diag_count; ++z) diag[rng.next_int(0, n - 1)] = Rational(0);
    return FactoredPD(std::move(u), std::move(diag));
  }

  int n() const { return static_cast<int>(unit_upper_.rows()); }
  const DenseMatrix<S>& matrix() const { return matrix_; }
  const DenseMatrix<S>& unit_upper() const { return unit_upper_; }
  const std::vector<Rational>& diag() const { return diag_; }

  Rational det() const {
    Rational d(1);
    for (const Rational& v : diag_) d *= v;
    return d;
  }
  bool definite() const { return !det().is_zero(); }

 private:
  void assemble() {
    const int n = this->n();
    DenseMatrix<S> d = DenseMatrix<S>::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = ScalarTraits<S>::from_rational(diag_[i]);
    matrix_ = unit_upper_.adjoint() * d * unit_upper_;
  }

  DenseMatrix<S> unit_upper_;
  std::vector<Rational> diag_;
  DenseMatrix<S> matrix_;
};

/// Failure witness: the row/column subsets of a negative minor.
struct TnWitness {
  std::vector<int> rows, cols;  // 0-based
  Rational value;
};

/// Checks every k×k minor, 1 ≤ k ≤ n, in exact arithmetic. Guarded to n ≤ 6.
std::optional<TnWitness> tn_violation(const DenseMatrix<Rational>& a);

inline bool is_totally_nonnegative(const DenseMatrix<Rational>& a) {
  return !tn_violation(a).has_value();
}

/// Sylvester criterion on exact Hermitian input: all leading principal minors
/// positive.
template <class S>
bool is_positive_definite(const DenseMatrix<S>& a) {
  static_assert(ScalarTraits<S>::is_exact, "is_positive_definite: exact scalars only");
  if (!is_hermitian(a)) throw DomainError("is_positive_definite: matrix not Hermitian");
  const int n = static_cast<int>(a.rows());
  std::vector<int> lead;
  for (int k = 1; k <= n; ++k) {
    lead.push_back(k - 1);
    const S minor = minor_of(a, lead, lead);
    if (!ScalarTraits<S>::imag_part(minor).is_zero())
      throw DomainError("is_positive_definite: non-real principal minor");
    if (!(ScalarTraits<S>::real_part(minor) > Rational(0))) return false;
  }
  return true;
}

}  // namespace immw
