#ifndef GHERMITE_TRANSFORM_HPP
#define GHERMITE_TRANSFORM_HPP

#include "ghermite/mu.hpp"
#include "ghermite/rational.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace ghermite {

using ComplexFn = std::function<std::complex<double>(double)>;

/// f(t) = factor(t) exp(-sigma t^2) with sigma > 0 and factor of at most
/// polynomial or e_mu-type growth.
struct EnvelopedFunction {
  ComplexFn factor;
  double sigma = 1.0;

  std::complex<double> operator()(double t) const { return factor(t) * std::exp(-sigma * t * t); }
};

/// Generalized Hermite function phi_n(x) from the normalized recurrence
///   x phi_k = sqrt(b_{k+1}) phi_{k+1} + sqrt(b_k) phi_{k-1},
///   b_k = (k + 2 mu theta(k)) / 2, phi_0 = exp(-x^2/2) / sqrt(Gamma(mu+1/2)).
double phi_eval(const MuParam& mu, int n, double x);

/// phi_0(x) .. phi_n(x).
Eigen::VectorXd phi_eval_all(const MuParam& mu, int n, double x);

/// Orthonormal polynomial part of phi_k (phi_k = p_k exp(-x^2/2)) with its
/// first two derivatives, k = 0 .. n.
struct PolyJet {
  Eigen::VectorXd value;
  Eigen::VectorXd first;
  Eigen::VectorXd second;
};
PolyJet orthonormal_jet(const MuParam& mu, int n, double x);

/// Coefficients of a function in the phi_n basis.
struct SpectralVector {
  MuParam mu;
  Eigen::VectorXcd coeffs;
  /// ||f||^2 - sum |c_n|^2 when produced by expand, otherwise 0.
  double parseval_defect = 0.0;

  int size() const { return static_cast<int>(coeffs.size()); }
  /// sum_n c_n phi_n(x).
  std::complex<double> evaluate(double x) const;
  nlohmann::json to_json() const;
};

/// c_n = <f, phi_n> for n < n_terms by a rescaled Hermite-type rule of the
/// given size (0 picks n_terms + 64). Throws std::invalid_argument if the
/// rule is smaller than n_terms + 16.
SpectralVector expand(const MuParam& mu, const EnvelopedFunction& f, int n_terms, int quad_size = 0);

/// ||f||^2 with the weight |t|^(2 mu).
double weighted_norm_squared(const MuParam& mu, const EnvelopedFunction& f, int quad_size = 128);

/// (-i)^n in any field with a notion of i; complex<double> and
/// GaussianRational are supported.
template <class C>
C fourier_phase(int n);

template <>
inline std::complex<double> fourier_phase<std::complex<double>>(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
template <>
inline GaussianRational fourier_phase<GaussianRational>(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(-1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(1)};
  }
}

/// c_n -> (-i)^n c_n.
SpectralVector fourier_spectral(const SpectralVector& v);
/// c_n -> i^n c_n.
SpectralVector inverse_fourier_spectral(const SpectralVector& v);

/// Diagonal transform over any coefficient field providing fourier_phase.
template <class C>
std::vector<C> fourier_spectral_generic(const std::vector<C>& coeffs) {
  std::vector<C> out(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) out[n] = fourier_phase<C>(static_cast<int>(n)) * coeffs[n];
  return out;
}

/// (2^(mu+1/2) Gamma(mu+1/2))^(-1) int e_mu(-ixt) f(t) |t|^(2 mu) dt with
/// t = u / sqrt(sigma) on a Hermite-type rule of quad_size nodes.
std::complex<double> fourier_quadrature(const MuParam& mu, const EnvelopedFunction& f, double x,
                                        int quad_size = 120);
/// Same with kernel e_mu(ixt).
std::complex<double> inverse_fourier_quadrature(const MuParam& mu, const EnvelopedFunction& f, double x,
                                                int quad_size = 120);

/// Unnormalized integral int e_mu(-ixt) f(t) |t|^(2 mu) dt.
std::complex<double> fourier_integral(const MuParam& mu, const EnvelopedFunction& f, double x,
                                      int quad_size = 120);

enum class OperatorTag { A, Adag, Q, P, H, J, F };

std::string to_string(OperatorTag tag);
OperatorTag parse_operator_tag(const std::string& name);

/// Truncated operator on span{phi_0 .. phi_{N-1}}; entries(m, n) = <phi_m, X phi_n>.
struct OperatorMatrix {
  OperatorTag tag = OperatorTag::A;
  Eigen::MatrixXcd entries;
  int lower_bandwidth = 0;
  int upper_bandwidth = 0;

  int size() const { return static_cast<int>(entries.rows()); }
  /// {"tag", "N", "lower_bandwidth", "upper_bandwidth", "entries": [[[re, im], ...], ...]}
  nlohmann::json to_json() const;
};

/// A(n-1, n) = sqrt(n + 2 mu theta(n)); Adag = A^T; Q = (A + Adag)/sqrt 2;
/// P = (A - Adag)/(i sqrt 2); H = diag(n + mu + 1/2); J = diag((-1)^n);
/// F = diag((-i)^n). Requires N >= 2.
OperatorMatrix operator_matrix(const MuParam& mu, OperatorTag tag, int n);

/// <phi_m, X phi_n> for X in {Q, P, H} computed in function space:
/// X acts on phi_n through its defining differential or multiplication
/// form and the inner product is a Hermite-type quadrature of even size.
Eigen::MatrixXcd function_space_matrix(const MuParam& mu, OperatorTag tag, int n, int quad_size = 0);

}  // namespace ghermite

#endif  // GHERMITE_TRANSFORM_HPP
