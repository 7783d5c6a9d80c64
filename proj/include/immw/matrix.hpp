#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "immw/error.hpp"
#include "immw/partition.hpp"
#include "immw/scalar.hpp"

namespace immw {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// A_I: the m×m matrix with (r,s) entry a_{i_r, i_s}; repeats allowed.
template <class S>
DenseMatrix<S> generalized_submatrix(const DenseMatrix<S>& a, const MultisetIndex& idx) {
  if (a.rows() != a.cols()) throw SizeMismatchError("generalized_submatrix: matrix not square");
  if (idx.max_value() > a.rows())
    throw DomainError("generalized_submatrix: index exceeds matrix size");
  const int m = idx.size();
  DenseMatrix<S> sub(m, m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) sub(r, s) = a(idx.index(r) - 1, idx.index(s) - 1);
  return sub;
}

/// Fraction-free (Bareiss) elimination determinant. Exact over exact scalars;
/// floating scalars pivot by magnitude.
template <class S>
S bareiss_determinant(DenseMatrix<S> a) {
  if (a.rows() != a.cols()) throw SizeMismatchError("bareiss_determinant: matrix not square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return S(1);
  S prev(1);
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    if constexpr (ScalarTraits<S>::is_exact) {
      for (int r = k; r < n; ++r)
        if (!ScalarTraits<S>::is_zero(a(r, k))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = k; r < n; ++r) {
        const double score = std::abs(ScalarTraits<S>::to_complex(a(r, k)));
        if (score > best) {
          best = score;
          pivot = r;
        }
      }
    }
    if (pivot < 0) return S(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  const S det = a(n - 1, n - 1);
  return negate ? -det : det;
}

/// Minor on the given 0-based row and column subsets.
template <class S>
S minor_of(const DenseMatrix<S>& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatchError("minor_of: subset sizes differ");
  const int k = static_cast<int>(rows.size());
  DenseMatrix<S> sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = a(rows[r], cols[c]);
  return bareiss_determinant(std::move(sub));
}

template <class S>
bool is_hermitian(const DenseMatrix<S>& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (a(i, j) != ScalarTraits<S>::conjugate(a(j, i))) return false;
  return true;
}

/// Matrix replayed in the floating analog of S.
template <class S>
DenseMatrix<FloatAnalog<S>> to_float(const DenseMatrix<S>& a) {
  DenseMatrix<FloatAnalog<S>> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const auto z = ScalarTraits<S>::to_complex(a(i, j));
      if constexpr (ScalarTraits<S>::is_complex)
        out(i, j) = z;
      else
        out(i, j) = z.real();
    }
  return out;
}

}  // namespace immw
