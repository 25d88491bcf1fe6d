#ifndef GHERMITE_RATIONAL_HPP
#define GHERMITE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace ghermite {

/// Exact rational scalar (GMP-backed, reduced, positive denominator).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", an integer, or a finite decimal literal ("0.25", "-1.5e-2")
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Uniform access to the handful of scalar operations the templated code needs.
template <class S>
struct ScalarOps {
  static bool is_zero(const S& s) { return s == S(0); }
  static double to_double(const S& s) { return static_cast<double>(s); }
  static std::string to_string(const S& s) { return std::to_string(s); }
  static S from_int(long long v) { return S(v); }
  static S ratio(long long p, long long q) { return S(p) / S(q); }
};

template <>
struct ScalarOps<Rational> {
  static bool is_zero(const Rational& s) { return s == 0; }
  static double to_double(const Rational& s) { return s.convert_to<double>(); }
  static std::string to_string(const Rational& s) { return ghermite::to_string(s); }
  static Rational from_int(long long v) { return Rational(v); }
  static Rational ratio(long long p, long long q) { return Rational(p, q); }
};

/// Complex number over exact rationals, for exact diagonal (phase) checks.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

  const Rational& real() const { return re; }
  const Rational& imag() const { return im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

}  // namespace ghermite

#endif  // GHERMITE_RATIONAL_HPP
