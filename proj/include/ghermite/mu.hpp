#ifndef GHERMITE_MU_HPP
#define GHERMITE_MU_HPP

#include "ghermite/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghermite {

/// Raised when an argument falls outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The deformation parameter mu.
///
/// Numeric paths require mu > -1/2. Exact paths take a rational mu and only
/// exclude the poles -1/2, -3/2, -5/2, ... where gamma_mu vanishes. A MuParam
/// built from a double is numeric only; one built from a rational carries
/// both representations and is validated lazily for numeric use.
class MuParam {
 public:
  /// Numeric mu; throws DomainError unless value > -1/2.
  MuParam(double value);  // NOLINT(google-explicit-constructor)

  static MuParam numeric(double value) { return MuParam(value); }
  /// Exact mu; throws DomainError at the poles -(2k+1)/2.
  static MuParam exact(const Rational& value);
  /// "p/q" or a decimal literal. Decimal literals are exact too.
  static MuParam parse(std::string_view text);

  double value() const { return value_; }
  bool has_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const;

  bool numeric_ok() const { return value_ > -0.5; }
  void require_numeric() const;
  void require_positive() const;

  /// mu in the requested scalar field.
  template <class S>
  S as() const;

  std::string to_string() const;

 private:
  MuParam() = default;
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

template <>
inline double MuParam::as<double>() const {
  return value_;
}
template <>
inline Rational MuParam::as<Rational>() const {
  return exact_value();
}

/// Parity symbol: 1 for odd n, 0 for even n.
constexpr int theta(int n) { return n & 1; }

/// gamma_mu(n) / gamma_mu(n-1) = n + 2 mu theta(n), n >= 1.
template <class S>
S gamma_step(const S& mu, int n) {
  return theta(n) ? S(n) + S(2) * mu : S(n);
}

/// Generalized factorial by the product recursion from gamma_mu(0) = 1.
/// The double path throws std::overflow_error once the value leaves the
/// double range (near n = 170); use log_gamma_mu there.
template <class S = double>
S gamma_mu(const MuParam& mu, int n);

double log_gamma_mu(const MuParam& mu, int n);

/// gamma_mu(n) / (gamma_mu(j) gamma_mu(n-j)), 0 <= j <= n.
template <class S = double>
S mu_binomial(const MuParam& mu, int n, int j);

/// n! / gamma_mu(n): the n-th moment of the probability measure
/// (1/B(1/2,mu)) (1-t)^(mu-1) (1+t)^mu dt on (-1,1). Requires mu > 0.
double alpha_mu_moment(const MuParam& mu, int n);

double log_beta(double a, double b);
double beta(double a, double b);

/// Table of gamma_mu(0..n_max) with a log-scale companion (double only,
/// filled when mu > -1/2).
template <class S = double>
class GammaMuTable {
 public:
  GammaMuTable(const MuParam& mu, int n_max);

  const MuParam& mu() const { return mu_; }
  int n_max() const { return static_cast<int>(values_.size()) - 1; }
  const S& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
  const std::vector<S>& values() const { return values_; }
  double log_value(int n) const { return log_values_.at(static_cast<std::size_t>(n)); }
  const std::vector<double>& log_values() const { return log_values_; }

 private:
  MuParam mu_;
  std::vector<S> values_;
  std::vector<double> log_values_;
};

// ---------------------------------------------------------------------------

template <class S>
S gamma_mu(const MuParam& mu, int n) {
  if (n < 0) throw std::out_of_range("gamma_mu: n must be nonnegative");
  if constexpr (std::is_same_v<S, double>) mu.require_numeric();
  const S m = mu.as<S>();
  S g(1);
  for (int k = 1; k <= n; ++k) g *= gamma_step(m, k);
  if constexpr (std::is_floating_point_v<S>) {
    if (!std::isfinite(g)) throw std::overflow_error("gamma_mu overflows; use log_gamma_mu");
  }
  return g;
}

template <class S>
S mu_binomial(const MuParam& mu, int n, int j) {
  if (n < 0 || j < 0 || j > n) throw std::out_of_range("mu_binomial: need 0 <= j <= n");
  if constexpr (std::is_same_v<S, double>) mu.require_numeric();
  const S m = mu.as<S>();
  const int k = std::min(j, n - j);
  S b(1);
  for (int i = 1; i <= k; ++i) b *= gamma_step(m, n - k + i) / gamma_step(m, i);
  return b;
}

template <class S>
GammaMuTable<S>::GammaMuTable(const MuParam& mu, int n_max) : mu_(mu) {
  if (n_max < 0) throw std::out_of_range("GammaMuTable: n_max must be nonnegative");
  const S m = mu.as<S>();
  values_.reserve(static_cast<std::size_t>(n_max) + 1);
  values_.push_back(S(1));
  for (int k = 1; k <= n_max; ++k) values_.push_back(values_.back() * gamma_step(m, k));
  if (mu.numeric_ok()) {
    log_values_.reserve(values_.size());
    log_values_.push_back(0.0);
    for (int k = 1; k <= n_max; ++k)
      log_values_.push_back(log_values_.back() + std::log(gamma_step(mu.value(), k)));
  }
}

}  // namespace ghermite

#endif  // GHERMITE_MU_HPP
