#pragma once
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "immw/error.hpp"

namespace immw {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Thin strong type over cpp_rational so
/// Eigen's scalar detection never sees the backend's greedy constructors.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(long long num, long long den) : v_(boost::multiprecision::cpp_rational(num, den)) {
    if (den == 0) throw DomainError("Rational: zero denominator");
  }
  Rational(BigInt num, BigInt den) : v_(boost::multiprecision::cpp_rational(std::move(num), std::move(den))) {}
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  double to_double() const { return v_.convert_to<double>(); }

  /// Accepts "p", "-p", "p/q".
  static Rational from_string(std::string_view s);
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational rational_pow(const Rational& base, int e) {
  if (e < 0) return Rational(1) / rational_pow(base, -e);
  Rational acc(1), b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    b *= b;
  }
  return acc;
}

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  /// Accepts "a", "bi", "a+bi", "a-bi" with a, b in p/q form.
  static GaussianRational from_string(std::string_view s);
  std::string to_string() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational d = b.re_ * b.re_ + b.im_ * b.im_;
    if (d.is_zero()) throw DomainError("GaussianRational: division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
  GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.real(), -z.imag()}; }
inline Rational real(const GaussianRational& z) { return z.real(); }
inline Rational imag(const GaussianRational& z) { return z.imag(); }
inline Rational abs2(const GaussianRational& z) { return z.real() * z.real() + z.imag() * z.imag(); }

// ---------------------------------------------------------------------------
// Per-scalar behaviour the generic algorithms need: exactness, conjugation,
// embedding of rational constants, conversion to complex<double>.
// ---------------------------------------------------------------------------

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = false;
  using RealScalar = Rational;
  static Rational conjugate(const Rational& x) { return x; }
  static Rational real_part(const Rational& x) { return x; }
  static Rational imag_part(const Rational&) { return Rational(0); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::complex<double> to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool is_exact = true;
  static constexpr bool is_complex = true;
  using RealScalar = Rational;
  static GaussianRational conjugate(const GaussianRational& x) { return conj(x); }
  static Rational real_part(const GaussianRational& x) { return x.real(); }
  static Rational imag_part(const GaussianRational& x) { return x.imag(); }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
  static std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
  static std::string to_string(const GaussianRational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr bool is_complex = false;
  using RealScalar = double;
  static double conjugate(double x) { return x; }
  static double real_part(double x) { return x; }
  static double imag_part(double) { return 0.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double from_rational(const Rational& q) { return q.to_double(); }
  static std::complex<double> to_complex(double x) { return {x, 0.0}; }
  static std::string to_string(double x) { return std::to_string(x); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool is_exact = false;
  static constexpr bool is_complex = true;
  using RealScalar = double;
  static std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }
  static double real_part(const std::complex<double>& x) { return x.real(); }
  static double imag_part(const std::complex<double>& x) { return x.imag(); }
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0); }
  static std::complex<double> from_rational(const Rational& q) { return {q.to_double(), 0.0}; }
  static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
  static std::string to_string(const std::complex<double>& x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  }
};

/// Floating counterpart used when an exact computation is replayed in floats.
template <class S>
using FloatAnalog = std::conditional_t<ScalarTraits<S>::is_complex, std::complex<double>, double>;

// ---------------------------------------------------------------------------
// String forms ("p/q", "p/q+r/si") shared by JSON payloads and the CLI.
// ---------------------------------------------------------------------------

inline Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw ParseError("Rational: empty string");
  const auto slash = s.find('/');
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw ParseError("Rational: empty integer field");
    const bool negative = t[0] == '-';
    const std::size_t first = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (first == t.size()) throw ParseError("Rational: sign without digits");
    for (std::size_t k = first; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9')
        throw ParseError("Rational: bad character '" + std::string(1, t[k]) + "'");
    BigInt v{std::string(t.substr(first))};
    return negative ? BigInt(-v) : v;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s), BigInt(1));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den.is_zero()) throw ParseError("Rational: zero denominator in '" + std::string(s) + "'");
  return Rational(std::move(num), std::move(den));
}

inline std::string Rational::to_string() const {
  std::string out = num().str();
  if (den() != 1) out += "/" + den().str();
  return out;
}

inline GaussianRational GaussianRational::from_string(std::string_view s) {
  if (s.empty()) throw ParseError("GaussianRational: empty string");
  if (s.back() != 'i') return GaussianRational(Rational::from_string(s));
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last top-level sign; signs only occur leading or as the
  // separator between the real and imaginary terms.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_coeff = [](std::string_view t) -> Rational {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::from_string(t);
  };
  if (split == std::string_view::npos) return {Rational(0), parse_coeff(body)};
  return {Rational::from_string(body.substr(0, split)), parse_coeff(body.substr(split))};
}

inline std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag_part = im_.to_string() + "i";
  if (re_.is_zero()) return imag_part;
  return re_.to_string() + (im_.sign() < 0 ? "" : "+") + imag_part;
}

}  // namespace immw

// Eigen scalar registration for the two exact types.
namespace Eigen {

template <>
struct NumTraits<immw::Rational> {
  using Real = immw::Rational;
  using NonInteger = immw::Rational;
  using Literal = immw::Rational;
  using Nested = immw::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20,
  };
  static immw::Rational epsilon() { return immw::Rational(0); }
  static immw::Rational dummy_precision() { return immw::Rational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<immw::GaussianRational> {
  using Real = immw::Rational;
  using NonInteger = immw::GaussianRational;
  using Literal = immw::GaussianRational;
  using Nested = immw::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 80,
  };
  static immw::Rational epsilon() { return immw::Rational(0); }
  static immw::Rational dummy_precision() { return immw::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
