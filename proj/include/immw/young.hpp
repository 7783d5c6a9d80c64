#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "immw/characters.hpp"
#include "immw/error.hpp"
#include "immw/partition.hpp"
#include "immw/permutation.hpp"
#include "immw/scalar.hpp"
#include "immw/tableau.hpp"

namespace immw {

/// Matrix acting on V^λ in Young's orthonormal basis {v_T}, T in the
/// row-word-lexicographic SYT order of enumerate_syt.
using RepMatrix = Eigen::MatrixXd;

/// Matrix of the adjacent transposition s_i (1 ≤ i ≤ m−1) on V^λ:
/// diagonal 1/(c_{i+1}−c_i), off-diagonal √(1−1/(c_{i+1}−c_i)²) against s_iT.
RepMatrix young_orthogonal_generator(const Partition& shape, int i);

/// Matrix of σ, as the product of generators along an adjacent-word
/// decomposition.
RepMatrix rep_matrix(const Partition& shape, const Permutation& sigma);

/// Matrices for all of 𝔖_m, keyed by permutation.
std::map<Permutation, RepMatrix> all_rep_matrices(const Partition& shape);

/// Finitely supported element of the group algebra of 𝔖_m.
template <class S>
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Permutation, S>& terms() const { return terms_; }

  S coefficient(const Permutation& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Permutation& sigma, const S& coeff) {
    if (sigma.degree() != degree_)
      throw SizeMismatchError("GroupAlgebraElement: degree mismatch");
    auto [it, inserted] = terms_.emplace(sigma, coeff);
    if (!inserted) it->second += coeff;
    if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other) {
    for (const auto& [sigma, c] : other.terms_) add_term(sigma, c);
    return *this;
  }

  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other) {
    for (const auto& [sigma, c] : other.terms_) add_term(sigma, -c);
    return *this;
  }

  GroupAlgebraElement scaled(const S& factor) const {
    GroupAlgebraElement out(degree_);
    for (const auto& [sigma, c] : terms_) out.add_term(sigma, c * factor);
    return out;
  }

  /// Convolution product in the group algebra.
  GroupAlgebraElement convolve(const GroupAlgebraElement& other) const {
    if (degree_ != other.degree_)
      throw SizeMismatchError("GroupAlgebraElement: degree mismatch");
    GroupAlgebraElement out(degree_);
    for (const auto& [alpha, a] : terms_)
      for (const auto& [beta, b] : other.terms_) out.add_term(alpha.compose(beta), a * b);
    return out;
  }

 private:
  int degree_;
  std::map<Permutation, S> terms_;
};

/// 𝓔_T = (1/h_λ) Σ_σ ⟨σ⁻¹ v_T, v_T⟩ σ. Coefficients are matrix entries of the
/// orthogonal representation, hence floating point.
GroupAlgebraElement<double> primitive_idempotent(const StandardTableau& tab);

/// z_λ = (f_λ/m!) Σ_σ χ^λ(σ⁻¹) σ, the exact projection onto the λ-isotypic
/// component.
GroupAlgebraElement<Rational> central_idempotent(const Partition& shape);

}  // namespace immw
