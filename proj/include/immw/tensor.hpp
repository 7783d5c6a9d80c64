#pragma once

#include <vector>

#include "immw/matrix.hpp"
#include "immw/partition.hpp"
#include "immw/permutation.hpp"

namespace immw {

/// The m-fold tensor power of C^n with the positional basis encoding
/// index(j_1,...,j_m) = Σ_k (j_k − 1)·n^{k−1}, j_k in 1..n.
class TensorSpace {
 public:
  TensorSpace(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 0) throw DomainError("TensorSpace: need n >= 1, m >= 0");
    if (m > 8) throw ResourceLimitError("TensorSpace: m > 8 refused");
    dim_ = 1;
    for (int k = 0; k < m; ++k) {
      dim_ *= n;
      if (dim_ > 100000) throw ResourceLimitError("TensorSpace: n^m > 1e5 refused");
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  long long dim() const { return dim_; }

  long long encode(const std::vector<int>& digits) const {  // 1-based digits
    long long idx = 0, stride = 1;
    for (int k = 0; k < m_; ++k) {
      idx += static_cast<long long>(digits[k] - 1) * stride;
      stride *= n_;
    }
    return idx;
  }

  void decode(long long idx, std::vector<int>& digits) const {
    digits.resize(m_);
    for (int k = 0; k < m_; ++k) {
      digits[k] = static_cast<int>(idx % n_) + 1;
      idx /= n_;
    }
  }

  /// Multiplicity vector of the index as a weak n-composition of m.
  WeakComposition weight_of(long long idx) const {
    std::vector<int> mult(n_, 0);
    for (int k = 0; k < m_; ++k) {
      ++mult[idx % n_];
      idx /= n_;
    }
    return WeakComposition(std::move(mult));
  }

  /// All basis indices of weight μ.
  std::vector<long long> weight_block(const WeakComposition& mu) const {
    if (mu.length() != n_ || mu.total() != m_)
      throw SizeMismatchError("weight_block: μ is not a weak n-composition of m");
    std::vector<long long> block;
    for (long long idx = 0; idx < dim_; ++idx)
      if (weight_of(idx) == mu) block.push_back(idx);
    return block;
  }

 private:
  int n_, m_;
  long long dim_;
};

template <class S>
using TensorVector = DenseVector<S>;

template <class S>
TensorVector<S> zero_vector(const TensorSpace& space) {
  return TensorVector<S>::Zero(space.dim());
}

/// e_{i_1} ⊗ ... ⊗ e_{i_m} for the canonical nondecreasing multiset order.
template <class S>
TensorVector<S> basis_vector(const TensorSpace& space, const MultisetIndex& idx) {
  if (idx.size() != space.m()) throw SizeMismatchError("basis_vector: |I| != m");
  if (idx.max_value() > space.n()) throw DomainError("basis_vector: index exceeds n");
  TensorVector<S> v = zero_vector<S>(space);
  v(space.encode(idx.indices())) = S(1);
  return v;
}

/// A ⊗ ... ⊗ A applied as m successive mode contractions; the n^m × n^m
/// matrix is never materialized.
template <class S>
TensorVector<S> apply_tensor_power(const TensorSpace& space, const DenseMatrix<S>& a,
                                   const TensorVector<S>& v) {
  if (a.rows() != space.n() || a.cols() != space.n())
    throw SizeMismatchError("apply_tensor_power: matrix does not act on C^n");
  if (v.size() != space.dim()) throw SizeMismatchError("apply_tensor_power: vector size");
  const int n = space.n();
  TensorVector<S> cur = v;
  TensorVector<S> next(space.dim());
  long long stride = 1;
  for (int k = 0; k < space.m(); ++k) {
    for (long long idx = 0; idx < space.dim(); ++idx) {
      const int digit = static_cast<int>((idx / stride) % n);
      const long long base = idx - static_cast<long long>(digit) * stride;
      S acc(0);
      for (int j = 0; j < n; ++j) acc += a(digit, j) * cur(base + static_cast<long long>(j) * stride);
      next(idx) = acc;
    }
    cur.swap(next);
    stride *= n;
  }
  return cur;
}

/// Left place-permutation action: factor at position p moves to position σ(p),
/// so (στ)·v = σ·(τ·v).
template <class S>
TensorVector<S> apply_permutation(const TensorSpace& space, const Permutation& sigma,
                                  const TensorVector<S>& v) {
  if (sigma.degree() != space.m())
    throw SizeMismatchError("apply_permutation: degree of σ != m");
  if (v.size() != space.dim()) throw SizeMismatchError("apply_permutation: vector size");
  TensorVector<S> out = zero_vector<S>(space);
  std::vector<int> digits, permuted(space.m());
  for (long long idx = 0; idx < space.dim(); ++idx) {
    if (ScalarTraits<S>::is_zero(v(idx))) continue;
    space.decode(idx, digits);
    for (int p = 0; p < space.m(); ++p) permuted[sigma.image(p)] = digits[p];
    out(space.encode(permuted)) = v(idx);
  }
  return out;
}

/// Derivation action of E_{ij} (1-based): Σ_p 1 ⊗ ... ⊗ E_{ij} ⊗ ... ⊗ 1.
template <class S>
TensorVector<S> apply_gl_generator(const TensorSpace& space, int i, int j,
                                   const TensorVector<S>& v) {
  if (i < 1 || i > space.n() || j < 1 || j > space.n())
    throw DomainError("apply_gl_generator: generator index out of range");
  if (v.size() != space.dim()) throw SizeMismatchError("apply_gl_generator: vector size");
  TensorVector<S> out = zero_vector<S>(space);
  const int n = space.n();
  long long stride = 1;
  for (int p = 0; p < space.m(); ++p) {
    for (long long idx = 0; idx < space.dim(); ++idx) {
      if (static_cast<int>((idx / stride) % n) + 1 != j) continue;
      if (ScalarTraits<S>::is_zero(v(idx))) continue;
      out(idx + static_cast<long long>(i - j) * stride) += v(idx);
    }
    stride *= n;
  }
  return out;
}

/// P_μ: keeps coordinates whose index has multiplicity vector μ.
template <class S>
TensorVector<S> apply_weight_projector(const TensorSpace& space, const WeakComposition& mu,
                                       const TensorVector<S>& v) {
  if (mu.length() != space.n() || mu.total() != space.m())
    throw SizeMismatchError("apply_weight_projector: μ is not a weak n-composition of m");
  TensorVector<S> out = zero_vector<S>(space);
  for (long long idx = 0; idx < space.dim(); ++idx)
    if (!ScalarTraits<S>::is_zero(v(idx)) && space.weight_of(idx) == mu) out(idx) = v(idx);
  return out;
}

/// ⟨u, w⟩ = Σ_K u_K · conj(w_K), the product form of the standard inner
/// product on basis vectors.
template <class S>
S inner_product(const TensorVector<S>& u, const TensorVector<S>& w) {
  if (u.size() != w.size()) throw SizeMismatchError("inner_product: vector sizes");
  S acc(0);
  for (long long k = 0; k < u.size(); ++k) acc += u(k) * ScalarTraits<S>::conjugate(w(k));
  return acc;
}

/// ⟨σ·v, w⟩ = ⟨v, σ⁻¹·w⟩: exact scalars compare equal, floats within tol.
template <class S>
bool check_contravariance(const TensorSpace& space, const Permutation& sigma,
                          const TensorVector<S>& v, const TensorVector<S>& w,
                          double tol = 1e-12) {
  const S lhs = inner_product(apply_permutation(space, sigma, v), w);
  const S rhs = inner_product(v, apply_permutation(space, sigma.inverse(), w));
  if constexpr (ScalarTraits<S>::is_exact)
    return lhs == rhs;
  else
    return std::abs(ScalarTraits<S>::to_complex(lhs) - ScalarTraits<S>::to_complex(rhs)) < tol;
}

/// ⟨A^{⊗m}·v, w⟩ = ⟨v, (A*)^{⊗m}·w⟩ with A* the conjugate transpose.
template <class S>
bool check_contravariance(const TensorSpace& space, const DenseMatrix<S>& a,
                          const TensorVector<S>& v, const TensorVector<S>& w,
                          double tol = 1e-12) {
  const DenseMatrix<S> astar = a.adjoint();
  const S lhs = inner_product(apply_tensor_power(space, a, v), w);
  const S rhs = inner_product(v, apply_tensor_power(space, astar, w));
  if constexpr (ScalarTraits<S>::is_exact)
    return lhs == rhs;
  else
    return std::abs(ScalarTraits<S>::to_complex(lhs) - ScalarTraits<S>::to_complex(rhs)) < tol;
}

}  // namespace immw
