#include "ghermite/translate.hpp"

#include "ghermite/efun.hpp"
#include "ghermite/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace ghermite {

HeronGeometry heron_geometry(double x, double y, double xi) {
  HeronGeometry g{x, y, xi};
  const double sum = (x + y) * (x + y), diff = (x - y) * (x - y), xi2 = xi * xi;
  g.psi = (sum - xi2) * (xi2 - diff) / 16.0;
  g.in_support = g.psi > 0.0;
  g.delta = g.in_support ? std::sqrt(g.psi) : 0.0;
  return g;
}

double heron_delta(double x, double y, double xi) { return heron_geometry(x, y, xi).delta; }

double translate_xi(const MuParam& mu, const std::function<double(double)>& phi, double x, double y,
                    int quad_size) {
  mu.require_positive();
  if (x == 0.0 || y == 0.0) throw DomainError("xi form needs x and y nonzero; use translate_alpha");
  const double m = mu.value();
  const double a = std::abs(x + y), b = std::abs(x - y);
  const double lo = std::min(a, b), hi = std::max(a, b);
  const double half = 0.5 * (hi - lo);
  const double sgn_xy = x * y > 0 ? 1.0 : -1.0;
  const double sgn_sum = x + y >= 0 ? 1.0 : -1.0;
  // Density (2 Delta / |xy|)^(2 mu) / B(1/2, mu) with 16 Psi =
  // (hi - eta)(hi + eta)(eta - lo)(eta + lo) on lo < eta < hi.
  const double log_const = -m * std::log(4.0 * x * x * y * y) - log_beta(0.5, m);

  double total = 0.0;
  for (double s : {1.0, -1.0}) {
    // The factor 1/(x + y - s eta) vanishes linearly at eta = |x + y| when
    // s points the same way as x + y; fold it into the Jacobi exponent.
    bool sing_hi = false, sing_lo = false;
    double sing_factor = 1.0;
    if (x + y == 0.0) {
      sing_lo = true;
      sing_factor = -1.0 / s;
    } else if (s == sgn_sum) {
      if (x * y > 0) {
        sing_hi = true;
        sing_factor = 1.0 / s;
      } else {
        sing_lo = true;
        sing_factor = -1.0 / s;
      }
    }
    const double e_hi = m - (sing_hi ? 1.0 : 0.0);
    const double e_lo = (lo > 0.0 ? m : 2.0 * m) - (sing_lo ? 1.0 : 0.0);
    const QuadratureRule rule = gauss_jacobi(e_hi, e_lo, quad_size);
    const double scale = std::exp(log_const + (e_hi + e_lo + 1.0) * std::log(half));
    double acc = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      const double eta = lo + half * (rule.nodes(i) + 1.0);
      double r = std::pow(hi + eta, m);
      if (lo > 0.0) r *= std::pow(eta + lo, m);
      r *= (sing_hi || sing_lo) ? sing_factor : 1.0 / (x + y - s * eta);
      acc += rule.weights(i) * r * phi(s * eta);
    }
    total += sgn_xy * s * scale * acc;
  }
  return total;
}

Eigen::MatrixXcd translation_matrix(const MuParam& mu, double y, int n) {
  const OperatorMatrix p = operator_matrix(mu, OperatorTag::P, n);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(p.entries);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition of P failed");
  Eigen::VectorXcd d(n);
  for (int k = 0; k < n; ++k) d(k) = e_mu(mu, std::complex<double>(0.0, y * eig.eigenvalues()(k)));
  return eig.eigenvectors() * d.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace ghermite
