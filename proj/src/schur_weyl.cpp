#include "immw/schur_weyl.hpp"

#include <cmath>

namespace immw {

std::vector<StandardTableau> theta_fiber(const StandardTableau& tab, const WeakComposition& mu) {
  const auto image = theta_mu(tab, mu);
  std::vector<StandardTableau> fiber;
  for (const StandardTableau& other : enumerate_syt(tab.shape()))
    if (theta_mu(other, mu).filling == image.filling) fiber.push_back(other);
  return fiber;
}

double capelli_eigenvalue(const GTPattern& pattern, int k, double u) {
  if (k < 1 || k > pattern.n()) throw DomainError("capelli_eigenvalue: k out of range");
  double value = 1.0;
  for (int j = 1; j <= k; ++j) value *= u + pattern.at(k, j) - (j - 1);
  return value;
}

bool verify_capelli(const TensorSpace& space, const Partition& shape, const WeakComposition& mu,
                    const StandardTableau& tab, int k, double u, double tol) {
  const auto image = theta_mu(tab, mu);
  if (!image.is_semistandard)
    throw DomainError("verify_capelli: θ_μ(T) is not semistandard");
  if (theta_fiber(tab, mu).size() != 1)
    throw DomainError("verify_capelli: T is not the unique preimage of θ_μ(T)");

  const TensorVector<double> v = schur_weyl_vector(space, tab, mu);
  const SemistandardTableau ssyt(shape, image.filling);
  const double eigen = capelli_eigenvalue(gt_from_ssyt(ssyt, space.n()), k, u);

  const TensorVector<double> got = apply_capelli(space, k, u, v);
  return (got - eigen * v).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace immw
