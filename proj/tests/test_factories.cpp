#include "doctest.h"
#include "immw/factories.hpp"
#include "immw/immanant.hpp"
#include "oracles.hpp"

using namespace immw;

TEST_CASE("elementary bidiagonal factors") {
  const Rational t(3, 7);
  const auto upper = elementary_bidiagonal<Rational>(2, 1, t, BidiagonalSide::upper);
  CHECK(upper(0, 0) == Rational(1));
  CHECK(upper(0, 1) == t);
  CHECK(upper(1, 0) == Rational(0));
  CHECK(upper(1, 1) == Rational(1));

  const auto lower = elementary_bidiagonal<Rational>(3, 2, t, BidiagonalSide::lower);
  CHECK(lower(2, 1) == t);
  CHECK(lower(1, 2) == Rational(0));

  CHECK_THROWS_AS(elementary_bidiagonal<Rational>(2, 1, Rational(0), BidiagonalSide::upper),
                  DomainError);
  CHECK_THROWS_AS(elementary_bidiagonal<Rational>(2, 1, Rational(-1), BidiagonalSide::upper),
                  DomainError);
  CHECK_THROWS_AS(elementary_bidiagonal<Rational>(2, 2, Rational(1), BidiagonalSide::upper),
                  DomainError);
}

TEST_CASE("2x2 Whitney product expands as expected") {
  const Rational s(2, 3), t(5, 4), d1(7, 2), d2(1, 6);
  const FactoredTN tn(2, {{1, s}}, {{1, t}}, {d1, d2});
  const auto& a = tn.matrix();
  CHECK(a(0, 0) == d1);
  CHECK(a(0, 1) == t * d2);
  CHECK(a(1, 0) == s * d1);
  CHECK(a(1, 1) == (Rational(1) + s * t) * d2);
  CHECK(minor_of(a, {0, 1}, {0, 1}) == d1 * d2);
  CHECK(is_totally_nonnegative(a));
}

TEST_CASE("random TN matrices are TN with determinant from the diagonal") {
  // Zero factors and unit diagonal give the identity.
  const FactoredTN id(3, {}, {}, {Rational(1), Rational(1), Rational(1)});
  CHECK(id.matrix() == DenseMatrix<Rational>::Identity(3, 3));
  CHECK(is_totally_nonnegative(id.matrix()));

  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const FactoredTN tn = FactoredTN::random(n, seed, 2 * n);
      CHECK(is_totally_nonnegative(tn.matrix()));
      CHECK(determinant(tn.matrix()) == tn.det());
      CHECK(tn.nonsingular());
    }
  }

  // Forced singular instance.
  const FactoredTN sing = FactoredTN::random(3, 11, 4, 1);
  CHECK(is_totally_nonnegative(sing.matrix()));
  CHECK(determinant(sing.matrix()) == sing.det());
}

TEST_CASE("TN violations are witnessed") {
  DenseMatrix<Rational> swap2(2, 2);
  swap2 << Rational(0), Rational(1), Rational(1), Rational(0);
  const auto witness = tn_violation(swap2);
  REQUIRE(witness.has_value());
  CHECK(witness->value == Rational(-1));
  CHECK(witness->rows == std::vector<int>{0, 1});
  CHECK(witness->cols == std::vector<int>{0, 1});
  CHECK_FALSE(is_totally_nonnegative(swap2));
}

TEST_CASE("products of TN matrices with positive diagonals stay TN") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (int n = 2; n <= 4; ++n) {
      const FactoredTN a = FactoredTN::random(n, seed, n);
      const FactoredTN b = FactoredTN::random(n, seed + 100, n + 1);
      CHECK(is_totally_nonnegative(a.matrix() * b.matrix()));
    }
  }
}

TEST_CASE("PD factory, real mode") {
  // U = I gives A = D.
  const FactoredPD<Rational> plain(DenseMatrix<Rational>::Identity(2, 2),
                                   {Rational(2), Rational(3)});
  CHECK(plain.matrix()(0, 0) == Rational(2));
  CHECK(plain.matrix()(1, 1) == Rational(3));
  CHECK(plain.matrix()(0, 1) == Rational(0));

  // Explicit 2×2 expansion.
  const Rational u(4, 3), d1(2, 5), d2(7, 2);
  DenseMatrix<Rational> upper = DenseMatrix<Rational>::Identity(2, 2);
  upper(0, 1) = u;
  const FactoredPD<Rational> pd(upper, {d1, d2});
  const auto& a = pd.matrix();
  CHECK(a(0, 0) == d1);
  CHECK(a(0, 1) == d1 * u);
  CHECK(a(1, 0) == d1 * u);
  CHECK(a(1, 1) == d1 * u * u + d2);

  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
      const auto gen = FactoredPD<Rational>::random(n, seed);
      CHECK(is_hermitian(gen.matrix()));
      CHECK(is_positive_definite(gen.matrix()));
      CHECK(determinant(gen.matrix()) == gen.det());
      // Leading principal minors are the partial diagonal products.
      Rational prod(1);
      std::vector<int> lead;
      for (int k = 0; k < n; ++k) {
        lead.push_back(k);
        prod *= gen.diag()[k];
        CHECK(minor_of(gen.matrix(), lead, lead) == prod);
      }
    }
  }
}

TEST_CASE("PD factory, gaussian mode") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 5; seed <= 9; ++seed) {
      const auto gen = FactoredPD<GaussianRational>::random(n, seed);
      CHECK(is_hermitian(gen.matrix()));
      CHECK(is_positive_definite(gen.matrix()));
      const GaussianRational det = determinant(gen.matrix());
      CHECK(det.imag() == Rational(0));
      CHECK(det.real() == gen.det());
    }
  }

  // Singular (PSD) instance is Hermitian but not definite.
  const auto psd = FactoredPD<GaussianRational>::random(3, 17, 1);
  CHECK(is_hermitian(psd.matrix()));
  CHECK_FALSE(psd.definite());
  CHECK_FALSE(is_positive_definite(psd.matrix()));
}

TEST_CASE("positive definiteness check") {
  DenseMatrix<Rational> diag = DenseMatrix<Rational>::Zero(3, 3);
  diag(0, 0) = Rational(1);
  diag(1, 1) = Rational(2);
  diag(2, 2) = Rational(3);
  CHECK(is_positive_definite(diag));

  DenseMatrix<Rational> indefinite(2, 2);
  indefinite << Rational(1), Rational(2), Rational(2), Rational(1);
  CHECK_FALSE(is_positive_definite(indefinite));

  DenseMatrix<Rational> asym(2, 2);
  asym << Rational(1), Rational(2), Rational(3), Rational(1);
  CHECK_THROWS_AS(is_positive_definite(asym), DomainError);
}
