#pragma once

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "immw/immanant.hpp"
#include "immw/json_io.hpp"
#include "immw/tableau.hpp"

namespace immw {

enum class MatrixClass { pd, psd, tn };

inline std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::pd: return "pd";
    case MatrixClass::psd: return "psd";
    case MatrixClass::tn: return "tn";
  }
  return "?";
}

inline MatrixClass matrix_class_from_string(const std::string& s) {
  if (s == "pd") return MatrixClass::pd;
  if (s == "psd") return MatrixClass::psd;
  if (s == "tn") return MatrixClass::tn;
  throw ParseError("matrix class must be pd, psd or tn");
}

/// One executed check: which theorem, on which certified instance, with exact
/// values and the verdict.
struct CheckReport {
  std::string check;  // "criterion" | "schur" | "orbit"
  MatrixClass matrix_class = MatrixClass::pd;
  json certificate;
  Partition lambda;
  WeakComposition mu;   // empty for the Schur inequality
  std::string lhs, rhs, margin;
  std::string verdict;  // "pass" | "fail" | "skip"
  std::string note;
};

inline json to_json(const CheckReport& r) {
  return json{{"check", r.check},     {"class", to_string(r.matrix_class)},
              {"certificate", r.certificate}, {"lambda", to_json(r.lambda)},
              {"mu", to_json(r.mu)},  {"lhs", r.lhs},
              {"rhs", r.rhs},         {"margin", r.margin},
              {"verdict", r.verdict}, {"note", r.note}};
}

/// Whether Thm 3.1 predicts Imm_{χ^λ}(A_I) > 0: nonzero Kostka number.
/// The dominance route must agree; a mismatch would falsify the underlying
/// combinatorics, so it is an internal error.
inline bool positivity_prediction(const Partition& shape, const WeakComposition& mu) {
  if (shape.size() != mu.total())
    throw SizeMismatchError("positivity_prediction: |λ| != Σμ");
  const bool via_kostka = kostka(shape, mu) != 0;
  const bool via_dominance = dominates(shape, sort_to_partition(mu));
  if (via_kostka != via_dominance)
    throw Error("positivity_prediction: Kostka and dominance routes disagree");
  return via_kostka;
}

/// Weyl-group orbit of a weight: the distinct rearrangements of its entries.
struct WeylOrbit {
  WeakComposition base;
  std::vector<WeakComposition> members;  // lexicographically ascending
  long long size() const { return static_cast<long long>(members.size()); }
};

inline WeylOrbit weyl_orbit(const WeakComposition& mu) {
  std::vector<int> entries = mu.entries();
  std::sort(entries.begin(), entries.end());
  WeylOrbit orbit;
  orbit.base = mu;
  do {
    orbit.members.emplace_back(entries);
  } while (std::next_permutation(entries.begin(), entries.end()));
  return orbit;
}

namespace detail {

template <class S>
Rational exact_real(const S& v, const char* who) {
  static_assert(ScalarTraits<S>::is_exact, "exact checks only");
  if (!ScalarTraits<S>::imag_part(v).is_zero())
    throw Error(std::string(who) + ": value has a nonzero imaginary part");
  return ScalarTraits<S>::real_part(v);
}

template <class S>
CheckReport criterion_impl(const DenseMatrix<S>& a, json certificate, MatrixClass cls,
                           const Partition& shape, const WeakComposition& mu) {
  const MultisetIndex idx = MultisetIndex::from_weight(mu);
  const Rational imm =
      exact_real(immanant_of_submatrix(a, shape, idx), "criterion immanant");
  const bool predicted = positivity_prediction(shape, mu);

  CheckReport report;
  report.check = "criterion";
  report.matrix_class = cls;
  report.certificate = std::move(certificate);
  report.lambda = shape;
  report.mu = mu;
  report.lhs = imm.to_string();
  report.rhs = predicted ? "> 0" : "0";
  report.margin = imm.to_string();
  const bool pass = predicted ? imm > Rational(0) : imm.is_zero();
  report.verdict = pass ? "pass" : "fail";
  return report;
}

template <class S>
Rational schur_margin_impl(const DenseMatrix<S>& a, const Partition& shape) {
  if (shape.size() != a.rows())
    throw SizeMismatchError("schur_inequality_margin: λ must be a partition of n");
  const Rational imm = exact_real(immanant(a, shape), "schur immanant");
  const Rational det = exact_real(determinant(a), "schur determinant");
  return imm - Rational(hook_data(shape).tableau_count) * det;
}

// The orbit lower bound is |O_μ|·K_{λμ}·det(A)^{m/n}: the AM–GM step runs
// over a symmetric monomial of total degree m·|O_μ|, so each d_i carries
// exponent m·|O_μ|/n and the geometric mean is det^{m/n}. (det(A) without the
// exponent fails for m ≠ n; an instance demonstrating that is kept in the
// tests.) When n ∤ m both sides are raised to the n-th power so the
// comparison stays in exact rational arithmetic.
template <class S>
CheckReport orbit_impl(const DenseMatrix<S>& a, json certificate, MatrixClass cls,
                       const Rational& det, const Partition& shape,
                       const WeakComposition& mu) {
  if (shape.size() != mu.total())
    throw SizeMismatchError("orbit_inequality_check: |λ| != Σμ");
  const int n = static_cast<int>(a.rows());
  const int m = shape.size();
  const WeylOrbit orbit = weyl_orbit(mu);
  Rational lhs(0);
  for (const WeakComposition& nu : orbit.members) {
    const MultisetIndex idx = MultisetIndex::from_weight(nu);
    lhs += exact_real(immanant_of_submatrix(a, shape, idx), "orbit immanant") /
           Rational(idx.m_of());
  }
  const Rational factor = Rational(orbit.size()) * Rational(kostka(shape, mu));

  CheckReport report;
  report.check = "orbit";
  report.matrix_class = cls;
  report.certificate = std::move(certificate);
  report.lambda = shape;
  report.mu = mu;
  report.lhs = lhs.to_string();

  if (lhs < Rational(0)) {  // would already falsify Schur/Stembridge
    report.rhs = "0";
    report.margin = lhs.to_string();
    report.verdict = "fail";
    report.note = "negative immanant sum";
    return report;
  }

  if (m % n == 0) {
    const Rational rhs = factor * rational_pow(det, m / n);
    report.rhs = rhs.to_string();
    report.margin = (lhs - rhs).to_string();
    report.verdict = lhs >= rhs ? "pass" : "fail";
  } else {
    const Rational lhs_pow = rational_pow(lhs, n);
    const Rational rhs_pow = rational_pow(factor, n) * rational_pow(det, m);
    report.rhs = factor.to_string() + "*det^(" + std::to_string(m) + "/" + std::to_string(n) + ")";
    report.margin = (lhs_pow - rhs_pow).to_string();
    report.verdict = lhs_pow >= rhs_pow ? "pass" : "fail";
    report.note = "margin compares both sides raised to the n-th power";
  }
  return report;
}

}  // namespace detail

// Thm 3.1 applies to positive definite Hermitian and nonsingular totally
// nonnegative matrices only; other inputs are refused, not judged.

template <class S>
CheckReport check_criterion(const FactoredPD<S>& fm, const Partition& shape,
                            const WeakComposition& mu) {
  if (!fm.definite())
    throw DomainError("check_criterion: singular PSD instance outside the theorem's hypotheses");
  return detail::criterion_impl(fm.matrix(), to_json(fm), MatrixClass::pd, shape, mu);
}

inline CheckReport check_criterion(const FactoredTN& fm, const Partition& shape,
                                   const WeakComposition& mu) {
  if (!fm.nonsingular())
    throw DomainError("check_criterion: singular TN instance outside the theorem's hypotheses");
  return detail::criterion_impl(fm.matrix(), to_json(fm), MatrixClass::tn, shape, mu);
}

/// Imm_{χ^λ}(A) − f_λ·det(A), which Schur (PSD) and Stembridge (TN) bound
/// below by zero. Singular instances are allowed.
template <class S>
Rational schur_inequality_margin(const FactoredPD<S>& fm, const Partition& shape) {
  return detail::schur_margin_impl(fm.matrix(), shape);
}

inline Rational schur_inequality_margin(const FactoredTN& fm, const Partition& shape) {
  return detail::schur_margin_impl(fm.matrix(), shape);
}

template <class S>
CheckReport orbit_inequality_check(const FactoredPD<S>& fm, const Partition& shape,
                                   const WeakComposition& mu) {
  return detail::orbit_impl(fm.matrix(), to_json(fm),
                            fm.definite() ? MatrixClass::pd : MatrixClass::psd, fm.det(), shape,
                            mu);
}

inline CheckReport orbit_inequality_check(const FactoredTN& fm, const Partition& shape,
                                          const WeakComposition& mu) {
  return detail::orbit_impl(fm.matrix(), to_json(fm), MatrixClass::tn, fm.det(), shape, mu);
}

/// Scan harness configuration; deterministic given the seed.
struct ScanConfig {
  std::vector<int> ns{3};
  std::vector<int> ms{3};
  int count = 2;  // instances per (class, n)
  std::uint64_t seed = 1;
  std::vector<MatrixClass> classes{MatrixClass::pd, MatrixClass::tn};
  std::vector<std::string> checks{"criterion", "schur", "orbit"};
  int threads = 0;
};

std::vector<CheckReport> scan(const ScanConfig& config);

}  // namespace immw
