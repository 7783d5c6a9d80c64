#pragma once

#include <cstdint>
#include <random>

#include "immw/scalar.hpp"

namespace immw {

/// Deterministic source of small exact scalars. mt19937_64 output is fully
/// specified by the standard; std::uniform_int_distribution is not, so ranges
/// are reduced by hand to keep streams identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  int next_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Numerator in 1..cap, denominator in 1..cap.
  Rational positive_rational(int cap = 10) {
    return Rational(next_int(1, cap), next_int(1, cap));
  }

  /// Numerator in -cap..cap (possibly 0), denominator in 1..cap.
  Rational signed_rational(int cap = 10) {
    return Rational(next_int(-cap, cap), next_int(1, cap));
  }

  GaussianRational signed_gaussian(int cap = 10) {
    return GaussianRational(signed_rational(cap), signed_rational(cap));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace immw
