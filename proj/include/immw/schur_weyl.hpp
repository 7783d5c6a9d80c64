#pragma once

#include <cmath>
#include <vector>

#include "immw/tableau.hpp"
#include "immw/tensor.hpp"
#include "immw/young.hpp"

namespace immw {

/// Σ_σ c_σ (σ·v) for a group-algebra element with coefficients C acting on an
/// S-valued tensor vector; C must embed into S (double into complex, Rational
/// into GaussianRational).
template <class S, class C>
TensorVector<S> apply_group_algebra(const TensorSpace& space, const GroupAlgebraElement<C>& x,
                                    const TensorVector<S>& v) {
  if (x.degree() != space.m())
    throw SizeMismatchError("apply_group_algebra: degree mismatch");
  TensorVector<S> out = zero_vector<S>(space);
  for (const auto& [sigma, coeff] : x.terms()) {
    const TensorVector<S> moved = apply_permutation(space, sigma, v);
    for (long long k = 0; k < out.size(); ++k) out(k) += moved(k) * S(coeff);
  }
  return out;
}

/// 𝓔_T·e_{I_μ} in floating arithmetic (the idempotent coefficients live in
/// the orthogonal representation).
template <class F>
TensorVector<F> idempotent_applied(const TensorSpace& space, const StandardTableau& tab,
                                   const TensorVector<F>& v) {
  static_assert(!ScalarTraits<F>::is_exact, "idempotent coefficients are floating point");
  return apply_group_algebra(space, primitive_idempotent(tab), v);
}

/// √(h_λ/m(I))·𝓔_T·e_{I_μ}: zero when θ_μ(T) is not semistandard, otherwise a
/// vector of norm |c| with Σ|c|² = 1 over the θ_μ-fiber.
inline TensorVector<double> schur_weyl_vector(const TensorSpace& space, const StandardTableau& tab,
                                              const WeakComposition& mu) {
  if (tab.size() != mu.total())
    throw SizeMismatchError("schur_weyl_vector: |shape| != Σμ");
  if (mu.length() != space.n())
    throw SizeMismatchError("schur_weyl_vector: μ is not an n-composition");
  const MultisetIndex idx = MultisetIndex::from_weight(mu);
  const TensorVector<double> e = basis_vector<double>(space, idx);
  TensorVector<double> v = idempotent_applied(space, tab, e);
  const double scale =
      std::sqrt(static_cast<double>(hook_data(tab.shape()).hook_product) /
                static_cast<double>(idx.m_of()));
  return v * scale;
}

/// Standard tableaux with the same θ_μ image as `tab` (including it).
std::vector<StandardTableau> theta_fiber(const StandardTableau& tab, const WeakComposition& mu);

/// Exact evaluation of the trace-formula right-hand side
/// tr (𝒫_μ ⊗ 1) ∘ π_λ(A) ∘ 𝒫_μ |_{U^λ}. The λ-isotypic projection z_λ turns
/// it into a full-space trace; the 𝔖_m factor is traced trivially, so the
/// result divides by f_λ = dim V^λ.
template <class S>
S trace_formula_rhs_exact(const TensorSpace& space, const DenseMatrix<S>& a,
                          const Partition& shape, const WeakComposition& mu) {
  static_assert(ScalarTraits<S>::is_exact, "trace_formula_rhs_exact: exact scalars only");
  if (shape.size() != space.m() || mu.total() != space.m() || mu.length() != space.n())
    throw SizeMismatchError("trace_formula_rhs_exact: |λ| = Σμ = m required");
  const GroupAlgebraElement<Rational> z = central_idempotent(shape);
  const long long f = hook_data(shape).tableau_count;

  S total(0);
  std::vector<int> digits;
  for (long long j : space.weight_block(mu)) {
    TensorVector<S> v = zero_vector<S>(space);
    v(j) = S(1);
    v = apply_group_algebra(space, z, v);
    v = apply_weight_projector(space, mu, v);
    v = apply_tensor_power(space, a, v);
    v = apply_weight_projector(space, mu, v);
    total += v(j);
  }
  return total / ScalarTraits<S>::from_rational(Rational(f));
}

/// Floating evaluation through the orthogonal representation:
/// (1/m(I))·Σ_T h_λ ⟨A^{⊗m} 𝓔_T e_I, 𝓔_T e_I⟩ over standard T of shape λ.
template <class F>
F trace_formula_rhs_orthogonal(const TensorSpace& space, const DenseMatrix<F>& a,
                               const Partition& shape, const WeakComposition& mu) {
  static_assert(!ScalarTraits<F>::is_exact, "trace_formula_rhs_orthogonal: floating scalars");
  if (shape.size() != space.m() || mu.total() != space.m() || mu.length() != space.n())
    throw SizeMismatchError("trace_formula_rhs_orthogonal: |λ| = Σμ = m required");
  const MultisetIndex idx = MultisetIndex::from_weight(mu);
  const TensorVector<F> e = basis_vector<F>(space, idx);
  const F hook = ScalarTraits<F>::from_rational(Rational(hook_data(shape).hook_product));

  F total(0);
  for (const StandardTableau& tab : enumerate_syt(shape)) {
    const TensorVector<F> v = idempotent_applied(space, tab, e);
    total += hook * inner_product(apply_tensor_power(space, a, v), v);
  }
  return total / ScalarTraits<F>::from_rational(Rational(idx.m_of()));
}

/// Capelli operator C_k(u) = Σ_{σ∈𝔖_k} sgn(σ)(u+E)_{σ(1),1}···(u+E−k+1)_{σ(k),k}
/// applied to a vector; column-j factor applied first for j = k down to 1.
template <class S>
TensorVector<S> apply_capelli(const TensorSpace& space, int k, const S& u,
                              const TensorVector<S>& v) {
  if (k < 1 || k > space.n()) throw DomainError("apply_capelli: k out of range");
  TensorVector<S> total = zero_vector<S>(space);
  for (const Permutation& sigma : all_permutations(k)) {
    TensorVector<S> w = v;
    for (int j = k; j >= 1; --j) {
      const int row = sigma.image(j - 1) + 1;  // σ(j), 1-based
      TensorVector<S> next = apply_gl_generator(space, row, j, w);
      if (row == j) {
        const S shift = u - S(j - 1);
        for (long long t = 0; t < next.size(); ++t) next(t) += shift * w(t);
      }
      w.swap(next);
    }
    if (sigma.sign() > 0)
      total += w;
    else
      total -= w;
  }
  return total;
}

/// Eigenvalue ∏_{j=1}^k (u + λ_{kj} − j + 1) of C_k(u) on the Gelfand–Tsetlin
/// vector labelled by `pattern`.
double capelli_eigenvalue(const GTPattern& pattern, int k, double u);

/// Checks that C_k(u) scales the Schur–Weyl vector of (T, μ) by the eigenvalue
/// read off the Gelfand–Tsetlin pattern of θ_μ(T). Requires θ_μ(T)
/// semistandard with T its unique preimage.
bool verify_capelli(const TensorSpace& space, const Partition& shape, const WeakComposition& mu,
                    const StandardTableau& tab, int k, double u, double tol = 1e-8);

}  // namespace immw
