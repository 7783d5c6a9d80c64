#include <cmath>
#include <map>

#include "doctest.h"
#include "immw/characters.hpp"
#include "immw/error.hpp"
#include "immw/permutation.hpp"
#include "immw/young.hpp"
#include "oracles.hpp"

using namespace immw;

namespace {

bool matrices_close(const RepMatrix& a, const RepMatrix& b, double tol = 1e-9) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation::identity(3)).parts() == std::vector<int>{1, 1, 1});
  CHECK(cycle_type(Permutation::from_one_line({2, 3, 1})).parts() == std::vector<int>{3});
  CHECK(cycle_type(Permutation::from_one_line({2, 1, 4, 3})).parts() == std::vector<int>{2, 2});
}

TEST_CASE("permutation basics") {
  const auto s = Permutation::from_one_line({3, 1, 2});
  CHECK(s.compose(s.inverse()).is_identity());
  CHECK(s.inverse().compose(s).is_identity());
  CHECK(s.sign() == 1);
  CHECK(Permutation::adjacent_transposition(4, 2).sign() == -1);

  // Rank/unrank round trip over all of S_4.
  const auto perms = all_permutations(4);
  CHECK(perms.size() == 24);
  for (long long r = 0; r < 24; ++r) {
    CHECK(perms[r] == permutation_unrank(4, r));
    CHECK(permutation_rank(perms[r]) == r);
  }

  // Adjacent word reconstructs the permutation.
  for (const auto& sigma : all_permutations(5)) {
    Permutation acc = Permutation::identity(5);
    for (int i : sigma.adjacent_word())
      acc = acc.compose(Permutation::adjacent_transposition(5, i));
    CHECK(acc == sigma);
  }
}

TEST_CASE("Murnaghan-Nakayama values") {
  // Trivial and sign characters.
  for (int m = 1; m <= 6; ++m) {
    for (const auto& rho : enumerate_partitions(m)) {
      CHECK(mn_character(Partition({m}), rho) == 1);
      std::vector<int> ones(m, 1);
      const int sign = ((m - rho.depth()) % 2 == 0) ? 1 : -1;
      CHECK(mn_character(Partition(ones), rho) == sign);
    }
  }
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), SizeMismatchError);

  // Degree at the identity class matches the hook-length count.
  for (int m = 1; m <= 7; ++m) {
    std::vector<int> ones(m, 1);
    for (const auto& shape : enumerate_partitions(m))
      CHECK(mn_character(shape, Partition(ones)) == hook_data(shape).tableau_count);
  }
}

TEST_CASE("character table orthogonality") {
  const CharacterTable t2(2);
  CHECK(t2.value(0, 0) == 1);
  CHECK(t2.value(0, 1) == 1);
  CHECK(t2.value(1, 0) == 1);
  CHECK(t2.value(1, 1) == -1);

  const CharacterTable t3(3);
  CHECK(t3.value(Partition({3}), Partition({1, 1, 1})) == 1);
  CHECK(t3.value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(t3.value(Partition({1, 1, 1}), Partition({1, 1, 1})) == 1);

  for (int m = 1; m <= 6; ++m) {
    const CharacterTable table(m);
    const int k = static_cast<int>(table.partitions().size());
    long long class_total = 0;
    for (int r = 0; r < k; ++r) class_total += table.class_size(r);
    CHECK(class_total == factorial(m));

    // Row orthogonality: Σ_ρ |class ρ| χ^λ(ρ) χ^κ(ρ) = m! δ.
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        long long sum = 0;
        for (int r = 0; r < k; ++r) sum += table.class_size(r) * table.value(a, r) * table.value(b, r);
        CHECK(sum == (a == b ? factorial(m) : 0));
      }
    }
    // Column orthogonality: Σ_λ χ^λ(ρ) χ^λ(τ) = δ_{ρτ} m!/|class ρ|.
    for (int r = 0; r < k; ++r) {
      for (int s = 0; s < k; ++s) {
        long long sum = 0;
        for (int a = 0; a < k; ++a) sum += table.value(a, r) * table.value(a, s);
        CHECK(sum == (r == s ? factorial(m) / table.class_size(r) : 0));
      }
    }
  }
}

TEST_CASE("Young orthogonal generators") {
  CHECK(matrices_close(young_orthogonal_generator(Partition({2}), 1),
                       RepMatrix::Identity(1, 1)));
  CHECK(matrices_close(young_orthogonal_generator(Partition({1, 1}), 1),
                       -RepMatrix::Identity(1, 1)));

  const RepMatrix s1 = young_orthogonal_generator(Partition({2, 1}), 1);
  RepMatrix expected1(2, 2);
  expected1 << 1, 0, 0, -1;
  CHECK(matrices_close(s1, expected1));

  const RepMatrix s2 = young_orthogonal_generator(Partition({2, 1}), 2);
  RepMatrix expected2(2, 2);
  expected2 << -0.5, std::sqrt(3.0) / 2.0, std::sqrt(3.0) / 2.0, 0.5;
  CHECK(matrices_close(s2, expected2));

  CHECK_THROWS_AS(young_orthogonal_generator(Partition({2, 1}), 3), DomainError);

  // Involution and braid relations for all shapes with m ≤ 5.
  for (int m = 2; m <= 5; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const long long f = hook_data(shape).tableau_count;
      std::vector<RepMatrix> gen;
      for (int i = 1; i <= m - 1; ++i) gen.push_back(young_orthogonal_generator(shape, i));
      for (int i = 0; i < m - 1; ++i)
        CHECK(matrices_close(gen[i] * gen[i], RepMatrix::Identity(f, f)));
      for (int i = 0; i + 1 < m - 1; ++i)
        CHECK(matrices_close(gen[i] * gen[i + 1] * gen[i], gen[i + 1] * gen[i] * gen[i + 1]));
      for (int i = 0; i + 2 < m - 1; ++i)
        CHECK(matrices_close(gen[i] * gen[i + 2], gen[i + 2] * gen[i]));
    }
  }
}

TEST_CASE("rep matrices: traces, orthogonality, homomorphism") {
  CHECK(matrices_close(rep_matrix(Partition({2, 1}), Permutation::identity(3)),
                       RepMatrix::Identity(2, 2)));

  for (int m = 2; m <= 5; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const auto mats = all_rep_matrices(shape);
      for (const auto& [sigma, mat] : mats) {
        const double chi = static_cast<double>(mn_character(shape, cycle_type(sigma)));
        CHECK(std::abs(mat.trace() - chi) < 1e-9);
        CHECK(matrices_close(mat * mats.at(sigma.inverse()),
                             RepMatrix::Identity(mat.rows(), mat.cols())));
        CHECK(matrices_close(mat.transpose(), mats.at(sigma.inverse())));
      }
    }
  }

  // Same matrix from any decomposition: compare against composing word
  // matrices of random pairs.
  oracle::RationalStream rng(13);
  const auto perms = all_permutations(4);
  for (const auto& shape : enumerate_partitions(4)) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto& a = perms[rng.next_int(0, static_cast<int>(perms.size()) - 1)];
      const auto& b = perms[rng.next_int(0, static_cast<int>(perms.size()) - 1)];
      CHECK(matrices_close(rep_matrix(shape, a.compose(b)),
                           rep_matrix(shape, a) * rep_matrix(shape, b)));
    }
  }
}

TEST_CASE("primitive idempotents") {
  // λ=(2): symmetrizer (e + s1)/2; λ=(1,1): antisymmetrizer (e − s1)/2.
  const auto sym = primitive_idempotent(StandardTableau(Partition({2}), {{1, 2}}));
  CHECK(sym.coefficient(Permutation::identity(2)) == doctest::Approx(0.5));
  CHECK(sym.coefficient(Permutation::from_one_line({2, 1})) == doctest::Approx(0.5));

  const auto antisym = primitive_idempotent(StandardTableau(Partition({1, 1}), {{1}, {2}}));
  CHECK(antisym.coefficient(Permutation::identity(2)) == doctest::Approx(0.5));
  CHECK(antisym.coefficient(Permutation::from_one_line({2, 1})) == doctest::Approx(-0.5));

  // Idempotency and mutual orthogonality under convolution, shapes of 3 and 4.
  for (int m = 3; m <= 4; ++m) {
    for (const auto& shape : enumerate_partitions(m)) {
      const auto tabs = enumerate_syt(shape);
      std::vector<GroupAlgebraElement<double>> idems;
      for (const auto& tab : tabs) idems.push_back(primitive_idempotent(tab));
      for (std::size_t a = 0; a < idems.size(); ++a) {
        for (std::size_t b = 0; b < idems.size(); ++b) {
          const auto prod = idems[a].convolve(idems[b]);
          for (const auto& sigma : all_permutations(m)) {
            const double want = (a == b) ? idems[a].coefficient(sigma) : 0.0;
            CHECK(prod.coefficient(sigma) == doctest::Approx(want).epsilon(1e-9));
          }
        }
      }
    }
  }
}

TEST_CASE("central idempotents") {
  // λ=(m): uniform average over the group.
  const auto avg = central_idempotent(Partition({3}));
  for (const auto& sigma : all_permutations(3))
    CHECK(avg.coefficient(sigma) == Rational(1, 6));

  for (int m = 2; m <= 4; ++m) {
    std::vector<GroupAlgebraElement<Rational>> zs;
    for (const auto& shape : enumerate_partitions(m)) zs.push_back(central_idempotent(shape));

    // Σ_λ z_λ = δ_e.
    GroupAlgebraElement<Rational> total(m);
    for (const auto& z : zs) total += z;
    for (const auto& sigma : all_permutations(m))
      CHECK(total.coefficient(sigma) == (sigma.is_identity() ? Rational(1) : Rational(0)));

    // z_λ z_κ = δ_{λκ} z_λ, exact.
    for (std::size_t a = 0; a < zs.size(); ++a) {
      for (std::size_t b = 0; b < zs.size(); ++b) {
        const auto prod = zs[a].convolve(zs[b]);
        for (const auto& sigma : all_permutations(m)) {
          const Rational want = (a == b) ? zs[a].coefficient(sigma) : Rational(0);
          CHECK(prod.coefficient(sigma) == want);
        }
      }
    }
  }
}
