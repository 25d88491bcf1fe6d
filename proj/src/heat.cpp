#include "ghermite/heat.hpp"

#include "ghermite/quadrature.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace ghermite {

DensePoly<double> heat_on_monomial(const MuParam& mu, int n, double t) {
  mu.require_numeric();
  return heat_poly<double>(mu, n, t);
}

std::complex<double> heat_gaussian(const MuParam& mu, std::complex<double> alpha, std::complex<double> z,
                                   double t, double x) {
  mu.require_numeric();
  if (!(alpha.real() > 0.0)) throw DomainError("heat Gaussian needs Re alpha > 0");
  if (t < 0.0) throw DomainError("heat flow needs t >= 0");
  const double tau = 4.0 * t;
  const std::complex<double> d = 1.0 + alpha * tau;
  if (std::abs(d) == 0.0) throw DomainError("heat Gaussian is singular at 1 + 4 alpha t = 0");
  return std::pow(d, -(mu.value() + 0.5)) * std::exp(tau * z * z / d - alpha * x * x / d) *
         e_mu(mu, 2.0 * z * x / d);
}

double heat_odd_gaussian(const MuParam& mu, double alpha, double t, double x) {
  mu.require_numeric();
  if (!(alpha > 0.0)) throw DomainError("heat Gaussian needs alpha > 0");
  if (t < 0.0) throw DomainError("heat flow needs t >= 0");
  const double d = 1.0 + 4.0 * alpha * t;
  return std::pow(d, -(mu.value() + 1.5)) * x * std::exp(-alpha * x * x / d);
}

double heat_apply_kernel(const MuParam& mu, const std::function<double(double)>& f, double t, double x,
                         int quad_size) {
  mu.require_numeric();
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  const QuadratureRule rule = gauss_hermite_mu(mu, quad_size);
  const double rt = std::sqrt(t);
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double u = rule.nodes(i);
    const double arg = x * u / rt;
    // exp(-x^2/4t) e_mu(arg) with the growth of e_mu folded into the exponent.
    const double k = std::exp(std::abs(arg) - x * x / (4.0 * t)) * e_mu_scaled(mu, arg);
    acc += rule.weights(i) * k * f(2.0 * rt * u);
  }
  return acc / std::tgamma(mu.value() + 0.5);
}

double heat_family_value(const MuParam& mu, HeatFamily family, const HeatFamilyParams& params, double t,
                         double x) {
  switch (family) {
    case HeatFamily::Even: return heat_gaussian(mu, params.alpha, 0.0, t, x).real();
    case HeatFamily::Odd: return heat_odd_gaussian(mu, params.alpha, t, x);
    case HeatFamily::Shifted: return heat_gaussian(mu, params.alpha, params.z, t, x).real();
  }
  throw std::invalid_argument("unknown heat family");
}

double heat_pde_residual(const MuParam& mu, HeatFamily family, double t, double x, double h,
                         const HeatFamilyParams& params) {
  mu.require_numeric();
  if (std::abs(x) < 0.1) throw DomainError("PDE residual is only evaluated for |x| >= 0.1");
  if (!(h > 0.0) || !(t > h)) throw DomainError("PDE residual needs 0 < h < t");
  const double m = mu.value();
  auto psi = [&](double tt, double xx) { return heat_family_value(mu, family, params, tt, xx); };
  const double centre = psi(t, x);
  const double dt = (psi(t + h, x) - psi(t - h, x)) / (2.0 * h);
  const double right = psi(t, x + h), left = psi(t, x - h);
  const double dx = (right - left) / (2.0 * h);
  const double dxx = (right - 2.0 * centre + left) / (h * h);
  double reflection = 0.0;
  switch (family) {
    case HeatFamily::Even: break;
    case HeatFamily::Odd: reflection = 2.0 * m / (x * x) * centre; break;
    case HeatFamily::Shifted: reflection = m / (x * x) * (centre - psi(t, -x)); break;
  }
  return std::abs(dt - (dxx + 2.0 * m / x * dx - reflection));
}

Eigen::MatrixXd heat_matrix(const MuParam& mu, double t, int n) {
  mu.require_numeric();
  if (t < 0.0) throw DomainError("heat flow needs t >= 0");
  if (n < 2) throw std::invalid_argument("heat matrix needs N >= 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(k + 2.0 * mu.value() * theta(k));
  const Eigen::MatrixXd skew = a - a.transpose();
  const Eigen::MatrixXd p_squared = -0.5 * skew * skew;
  const Eigen::MatrixXd generator = -t * p_squared;
  return generator.exp();
}

double heat_spectral(const MuParam& mu, const EnvelopedFunction& f, double t, double x, int n_terms) {
  SpectralVector v = expand(mu, f, n_terms);
  v.coeffs = heat_matrix(mu, t, n_terms).cast<std::complex<double>>() * v.coeffs;
  return v.evaluate(x).real();
}

std::complex<double> HeatState::evaluate(double x) const {
  if (const auto* k = std::get_if<Kernel>(&payload)) {
    if (t == 0.0) return k->initial(x);
    return heat_apply_kernel(mu, k->initial, t, x);
  }
  if (const auto* g = std::get_if<Gaussian>(&payload)) return heat_gaussian(mu, g->alpha, g->z, t, x);
  const auto& p = std::get<Polynomial>(payload).initial;
  double acc = 0.0;
  for (int n = 0; n <= p.degree(); ++n)
    if (p.coeff(n) != 0.0) acc += p.coeff(n) * heat_on_monomial(mu, n, t)(x);
  return acc;
}

HeatState HeatState::advanced(double dt) const {
  if (dt < 0.0) throw DomainError("heat flow only runs forward");
  HeatState out = *this;
  out.t += dt;
  return out;
}

}  // namespace ghermite
