#ifndef GHERMITE_TRANSLATE_HPP
#define GHERMITE_TRANSLATE_HPP

#include "ghermite/hermite.hpp"
#include "ghermite/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>

namespace ghermite {

/// Generalized translation of a polynomial: sum_j (y^j / gamma_mu(j)) D^j p.
template <class S>
DensePoly<S> translate_poly(const MuParam& mu, const DensePoly<S>& p, const S& y) {
  const GammaMuTable<S> g(mu, std::max(p.degree(), 0));
  DensePoly<S> acc = p;
  DensePoly<S> d = p;
  S yj(1);
  for (int j = 1; j <= p.degree(); ++j) {
    d = dunkl_apply(mu, d);
    yj *= y;
    acc += d * (yj / g[j]);
  }
  return acc;
}

/// Same series with y kept formal: coefficient (j, k) multiplies x^j y^k.
template <class S>
BivariatePoly<S> translate_poly_bivariate(const MuParam& mu, const DensePoly<S>& p) {
  const int deg = std::max(p.degree(), 0);
  const GammaMuTable<S> g(mu, deg);
  auto out = BivariatePoly<S>::zero(deg);
  DensePoly<S> d = p;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) d = dunkl_apply(mu, d);
    for (int j = 0; j <= d.degree(); ++j) out.add(j, k, d.coeff(j) / g[k]);
  }
  return out;
}

/// Translation by averaging over the alpha_mu measure:
///   (T_y phi)(x) = int [ E(w) + (x+y) O(w)/w ] alpha_mu(dt),
///   w = sqrt(x^2 + 2xyt + y^2), E and O the even and odd parts of phi.
/// phi may return double or complex<double>. Requires mu > 0.
template <class F>
auto translate_alpha(const MuParam& mu, F&& phi, double x, double y, int quad_size = 64)
    -> decltype(phi(0.0)) {
  using R = decltype(phi(0.0));
  mu.require_positive();
  const QuadratureRule rule = gauss_alpha_mu(mu, quad_size);
  return rule.integrate([&](double t) -> R {
    const double w2 = std::max(0.0, x * x + 2.0 * x * y * t + y * y);
    const double w = std::sqrt(w2);
    const R plus = phi(w);
    const R minus = phi(-w);
    const R even = (plus + minus) * 0.5;
    if (w == 0.0) return even;
    const R odd = (plus - minus) * 0.5;
    return even + odd * ((x + y) / w);
  });
}

/// Translation over the Heron support Xi(x, y) with the area measure,
/// integrated directly in the xi variable with Gauss-Jacobi rules that
/// absorb the endpoint singularities. x and y must be nonzero; mu > 0.
double translate_xi(const MuParam& mu, const std::function<double(double)>& phi, double x, double y,
                    int quad_size = 96);

/// Heron data for sides |x|, |y|, |xi|.
struct HeronGeometry {
  double x = 0, y = 0, xi = 0;
  double psi = 0;       ///< ((x+y)^2 - xi^2)(xi^2 - (x-y)^2) / 16
  double delta = 0;     ///< triangle area, 0 off the support
  bool in_support = false;
};

HeronGeometry heron_geometry(double x, double y, double xi);
double heron_delta(double x, double y, double xi);

/// e_mu(i y P) on the truncated basis, through the eigen-decomposition of
/// the Hermitian truncated P and e_mu(iw) = c(w) + i s(w).
Eigen::MatrixXcd translation_matrix(const MuParam& mu, double y, int n);

}  // namespace ghermite

#endif  // GHERMITE_TRANSLATE_HPP
