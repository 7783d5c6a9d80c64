#include "immw/young.hpp"

#include <cmath>

namespace immw {

namespace {

// Index of each tableau within the canonical SYT order, or -1.
int index_of_tableau(const std::vector<StandardTableau>& tableaux,
                     const std::vector<std::vector<int>>& rows) {
  for (std::size_t t = 0; t < tableaux.size(); ++t)
    if (tableaux[t].rows() == rows) return static_cast<int>(t);
  return -1;
}

}  // namespace

RepMatrix young_orthogonal_generator(const Partition& shape, int i) {
  const int m = shape.size();
  if (i < 1 || i > m - 1)
    throw DomainError("young_orthogonal_generator: index out of range");
  const auto tableaux = enumerate_syt(shape);
  const int f = static_cast<int>(tableaux.size());
  RepMatrix gen = RepMatrix::Zero(f, f);

  for (int t = 0; t < f; ++t) {
    const StandardTableau& tab = tableaux[t];
    const int axial = tab.content_of(i + 1) - tab.content_of(i);
    gen(t, t) = 1.0 / axial;

    // Swap i and i+1; when the result is standard it pairs with tab.
    auto rows = tab.rows();
    auto [ri, ci] = tab.cell_of(i);
    auto [rj, cj] = tab.cell_of(i + 1);
    rows[ri][ci] = i + 1;
    rows[rj][cj] = i;
    const int other = index_of_tableau(tableaux, rows);
    if (other >= 0) gen(t, other) = std::sqrt(1.0 - 1.0 / (static_cast<double>(axial) * axial));
  }
  return gen;
}

RepMatrix rep_matrix(const Partition& shape, const Permutation& sigma) {
  if (sigma.degree() != shape.size())
    throw SizeMismatchError("rep_matrix: |λ| != degree of σ");
  const long long f = hook_data(shape).tableau_count;
  RepMatrix acc = RepMatrix::Identity(f, f);
  for (int i : sigma.adjacent_word()) acc *= young_orthogonal_generator(shape, i);
  return acc;
}

std::map<Permutation, RepMatrix> all_rep_matrices(const Partition& shape) {
  const int m = shape.size();
  if (m > 8) throw ResourceLimitError("all_rep_matrices: m too large");
  std::vector<RepMatrix> generators;
  for (int i = 1; i <= m - 1; ++i) generators.push_back(young_orthogonal_generator(shape, i));

  std::map<Permutation, RepMatrix> out;
  for (const Permutation& sigma : all_permutations(m)) {
    const long long f = hook_data(shape).tableau_count;
    RepMatrix acc = RepMatrix::Identity(f, f);
    for (int i : sigma.adjacent_word()) acc *= generators[i - 1];
    out.emplace(sigma, std::move(acc));
  }
  return out;
}

GroupAlgebraElement<double> primitive_idempotent(const StandardTableau& tab) {
  const Partition& shape = tab.shape();
  const auto tableaux = enumerate_syt(shape);
  const int t = index_of_tableau(tableaux, tab.rows());
  if (t < 0) throw DomainError("primitive_idempotent: tableau not standard for its shape");

  const double hook_product = static_cast<double>(hook_data(shape).hook_product);
  const auto matrices = all_rep_matrices(shape);

  GroupAlgebraElement<double> out(shape.size());
  for (const auto& [sigma, mat] : matrices) {
    (void)mat;
    const double coeff = matrices.at(sigma.inverse())(t, t) / hook_product;
    if (coeff != 0.0) out.add_term(sigma, coeff);
  }
  return out;
}

GroupAlgebraElement<Rational> central_idempotent(const Partition& shape) {
  const int m = shape.size();
  const Rational norm(hook_data(shape).tableau_count, factorial(m));
  GroupAlgebraElement<Rational> out(m);
  for (const Permutation& sigma : all_permutations(m)) {
    const long long chi = mn_character(shape, cycle_type(sigma.inverse()));
    if (chi != 0) out.add_term(sigma, norm * Rational(chi));
  }
  return out;
}

}  // namespace immw
