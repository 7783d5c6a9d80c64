#include <cmath>
#include <map>

#include "doctest.h"
#include "immw/immanant.hpp"
#include "immw/schur_weyl.hpp"
#include "oracles.hpp"

using namespace immw;

namespace {

DenseMatrix<Rational> random_matrix(int n, oracle::RationalStream& rng) {
  DenseMatrix<Rational> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_rational(5, 5);
  return a;
}

double norm_of(const TensorVector<double>& v) { return std::sqrt(v.squaredNorm()); }

}  // namespace

TEST_CASE("Schur-Weyl vectors: norms and vanishing") {
  // m ≤ n with multiplicity-free weight: every T gives a unit vector.
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{3, 2}}) {
    const TensorSpace space(n, m);
    std::vector<int> entries(n, 0);
    for (int k = 0; k < m; ++k) entries[k] = 1;
    const WeakComposition mu(entries);
    for (const auto& shape : enumerate_partitions(m)) {
      if (shape.depth() > n) continue;
      for (const auto& tab : enumerate_syt(shape)) {
        CHECK(norm_of(schur_weyl_vector(space, tab, mu)) == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }

  // Antisymmetrizer on a repeated index vanishes.
  const TensorSpace space22(2, 2);
  const StandardTableau column(Partition({1, 1}), {{1}, {2}});
  const auto zero = schur_weyl_vector(space22, column, WeakComposition({2, 0}));
  CHECK(norm_of(zero) < 1e-12);

  // Two-element fiber: θ maps both T to the same SSYT and Σ‖c‖² = 1.
  const TensorSpace space24(2, 4);
  const Partition shape31({3, 1});
  const WeakComposition mu22({2, 2});
  std::map<std::vector<std::vector<int>>, double> fiber_norms;
  int nonzero_count = 0;
  for (const auto& tab : enumerate_syt(shape31)) {
    const auto image = theta_mu(tab, mu22);
    const double nrm = norm_of(schur_weyl_vector(space24, tab, mu22));
    if (image.is_semistandard) {
      ++nonzero_count;
      CHECK(nrm > 1e-9);
      CHECK(nrm < 1.0 + 1e-9);
      fiber_norms[image.filling] += nrm * nrm;
      CHECK(theta_fiber(tab, mu22).size() == 2);
    } else {
      CHECK(nrm < 1e-12);
    }
  }
  CHECK(nonzero_count == 2);
  REQUIRE(fiber_norms.size() == 1);
  CHECK(fiber_norms.begin()->second == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exact trace formula on closed-form cases") {
  oracle::RationalStream rng(41);
  const TensorSpace space(2, 2);
  const auto a = random_matrix(2, rng);

  // λ=(2), μ=(2,0): both sides equal a11².
  CHECK(trace_formula_rhs_exact(space, a, Partition({2}), WeakComposition({2, 0})) ==
        a(0, 0) * a(0, 0));
  // λ=(1,1), μ=(2,0): zero.
  CHECK(trace_formula_rhs_exact(space, a, Partition({1, 1}), WeakComposition({2, 0})) ==
        Rational(0));
  // λ=(1^m), μ=(1,...,1): the determinant.
  CHECK(trace_formula_rhs_exact(space, a, Partition({1, 1}), WeakComposition({1, 1})) ==
        determinant(a));

  // λ=(m): per(A_I)/m(I) for every weight.
  const TensorSpace space23(2, 3);
  const auto b = random_matrix(2, rng);
  for (const auto& mu : weak_compositions(3, 2)) {
    const MultisetIndex idx = MultisetIndex::from_weight(mu);
    const Rational expected =
        permanent(DenseMatrix<Rational>(generalized_submatrix(b, idx))) / Rational(idx.m_of());
    CHECK(trace_formula_rhs_exact(space23, b, Partition({3}), mu) == expected);
  }
}

TEST_CASE("exact trace formula equals normalized immanants") {
  oracle::RationalStream rng(59);
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const TensorSpace space(n, m);
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_matrix(n, rng);
      for (const auto& shape : enumerate_partitions(m)) {
        for (const auto& mu : weak_compositions(m, n)) {
          const MultisetIndex idx = MultisetIndex::from_weight(mu);
          const Rational lhs =
              immanant_of_submatrix(a, shape, idx) / Rational(idx.m_of());
          CHECK(trace_formula_rhs_exact(space, a, shape, mu) == lhs);
        }
      }
    }
  }
}

TEST_CASE("orthogonal route agrees with the exact route") {
  oracle::RationalStream rng(61);
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const TensorSpace space(n, m);
    const auto a = random_matrix(n, rng);
    const auto a_float = to_float(a);
    for (const auto& shape : enumerate_partitions(m)) {
      for (const auto& mu : weak_compositions(m, n)) {
        const double exact =
            trace_formula_rhs_exact(space, a, shape, mu).to_double();
        const double approx = trace_formula_rhs_orthogonal(space, a_float, shape, mu);
        CHECK(approx == doctest::Approx(exact).epsilon(1e-9));
      }
    }
  }

  // Gaussian-rational input runs through the complex analog.
  const TensorSpace space22(2, 2);
  DenseMatrix<GaussianRational> h(2, 2);
  h(0, 0) = GaussianRational(Rational(2));
  h(1, 1) = GaussianRational(Rational(1));
  h(0, 1) = GaussianRational(Rational(1, 2), Rational(1, 3));
  h(1, 0) = conj(h(0, 1));
  const auto hf = to_float(h);
  for (const auto& shape : enumerate_partitions(2)) {
    for (const auto& mu : weak_compositions(2, 2)) {
      const GaussianRational exact = trace_formula_rhs_exact(space22, h, shape, mu);
      const std::complex<double> approx = trace_formula_rhs_orthogonal(space22, hf, shape, mu);
      CHECK(std::abs(approx - exact.to_complex()) < 1e-9);
    }
  }
}

TEST_CASE("Capelli operators") {
  // C1(u) = u + E11 scales any weight vector by u + μ1.
  const TensorSpace space(2, 2);
  for (const auto& mu : weak_compositions(2, 2)) {
    for (long long idx : space.weight_block(mu)) {
      TensorVector<double> v = zero_vector<double>(space);
      v(idx) = 1.0;
      const auto got = apply_capelli(space, 1, 0.5, v);
      CHECK((got - (0.5 + mu.entry(0)) * v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  // λ=(2), n=2: C2(u) on e1⊗e1 multiplies by (u+2)(u−1).
  for (double u : {0.0, 1.0, 2.0}) {
    const auto e11 = basis_vector<double>(space, MultisetIndex({1, 1}));
    const auto got = apply_capelli(space, 2, u, e11);
    CHECK((got - (u + 2.0) * (u - 1.0) * e11).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Capelli eigenvalues on Gelfand-Tsetlin vectors") {
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const TensorSpace space(n, m);
    for (const auto& shape : enumerate_partitions(m)) {
      if (shape.depth() > n) continue;
      for (const auto& mu : weak_compositions(m, n)) {
        for (const auto& tab : enumerate_syt(shape)) {
          if (!theta_mu(tab, mu).is_semistandard) continue;
          if (theta_fiber(tab, mu).size() != 1) continue;
          for (int k = 1; k <= n; ++k)
            for (double u : {0.0, 1.0, 2.0})
              CHECK(verify_capelli(space, shape, mu, tab, k, u, 1e-8));
        }
      }
    }
  }
}

TEST_CASE("Capelli negative control: mixed GT vectors are not eigenvectors") {
  // λ=(2,1), n=3, μ=(1,1,1): distinct tableaux carry distinct GT rows.
  const TensorSpace space(3, 3);
  const Partition shape({2, 1});
  const WeakComposition mu({1, 1, 1});
  const auto tabs = enumerate_syt(shape);
  REQUIRE(tabs.size() == 2);

  const auto va = schur_weyl_vector(space, tabs[0], mu);
  const auto vb = schur_weyl_vector(space, tabs[1], mu);
  const auto pa = gt_from_ssyt(SemistandardTableau(shape, theta_mu(tabs[0], mu).filling), 3);
  const auto pb = gt_from_ssyt(SemistandardTableau(shape, theta_mu(tabs[1], mu).filling), 3);

  int separating_k = 0;
  for (int k = 1; k <= 3; ++k)
    if (capelli_eigenvalue(pa, k, 1.0) != capelli_eigenvalue(pb, k, 1.0)) separating_k = k;
  REQUIRE(separating_k != 0);

  const TensorVector<double> mixed = va + vb;
  const auto image = apply_capelli(space, separating_k, 1.0, mixed);
  // Proportionality fails: image − c·mixed is nonzero for the best c.
  const double c = image.dot(mixed) / mixed.dot(mixed);
  CHECK((image - c * mixed).cwiseAbs().maxCoeff() > 1e-6);
}
