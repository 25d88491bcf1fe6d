#ifndef GHERMITE_HEAT_HPP
#define GHERMITE_HEAT_HPP

#include "ghermite/efun.hpp"
#include "ghermite/hermite.hpp"
#include "ghermite/transform.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <variant>

namespace ghermite {

/// exp(t D^2) x^n as a polynomial in x.
DensePoly<double> heat_on_monomial(const MuParam& mu, int n, double t);

/// Heat flow of exp(-alpha x^2) e_mu(2 z x) at semigroup time t, x.
///
/// The classical statement of this closed form is written for the operator
/// at time t/4; here t is the semigroup time, so the formula is evaluated
/// with tau = 4t:
///   (1+alpha tau)^(-mu-1/2) exp(tau z^2/(1+alpha tau))
///   exp(-alpha x^2/(1+alpha tau)) e_mu(2 z x/(1+alpha tau)).
/// Requires Re alpha > 0, t >= 0; throws DomainError at 1 + alpha tau = 0.
std::complex<double> heat_gaussian(const MuParam& mu, std::complex<double> alpha, std::complex<double> z,
                                   double t, double x);

/// Heat flow of x exp(-alpha x^2): (1+4 alpha t)^(-mu-3/2) x exp(-alpha x^2/(1+4 alpha t)).
double heat_odd_gaussian(const MuParam& mu, double alpha, double t, double x);

/// int K(x, y, t) f(y) |y|^(2 mu) dy with y = 2 sqrt(t) u on a Hermite-type
/// rule of quad_size nodes. t > 0.
double heat_apply_kernel(const MuParam& mu, const std::function<double(double)>& f, double t, double x,
                         int quad_size = 160);

enum class HeatFamily {
  Even,     ///< exp(-alpha x^2)
  Odd,      ///< x exp(-alpha x^2)
  Shifted,  ///< exp(-alpha x^2) e_mu(2 z x), neither even nor odd
};

struct HeatFamilyParams {
  double alpha = 1.0;
  double z = 0.3;  ///< used by Shifted only
};

/// Closed-form psi(x, t) of a family.
double heat_family_value(const MuParam& mu, HeatFamily family, const HeatFamilyParams& params, double t,
                         double x);

/// |d psi/dt - (psi_xx + (2 mu/x) psi_x - reflection term)| by central
/// differences of step h. Even families have no reflection term, odd ones
/// use (2 mu/x^2) psi, the shifted family the full (mu/x^2)(psi(x)-psi(-x)).
/// Throws DomainError for |x| < 0.1.
double heat_pde_residual(const MuParam& mu, HeatFamily family, double t, double x, double h,
                         const HeatFamilyParams& params = {});

/// exp(-t P^2) on the truncated basis (scaling and squaring). P^2 is real
/// and pentadiagonal; only interior rows are faithful.
Eigen::MatrixXd heat_matrix(const MuParam& mu, double t, int n);

/// Heat flow through the phi_n basis: expand, multiply by heat_matrix,
/// resum at x.
double heat_spectral(const MuParam& mu, const EnvelopedFunction& f, double t, double x, int n_terms = 64);

/// A heat solution in one of three representations.
struct HeatState {
  struct Kernel {
    std::function<double(double)> initial;
  };
  struct Gaussian {
    std::complex<double> alpha;
    std::complex<double> z;
  };
  struct Polynomial {
    DensePoly<double> initial;
  };

  MuParam mu;
  double t = 0.0;
  std::variant<Kernel, Gaussian, Polynomial> payload;

  /// psi(x, t). Polynomials evolve by exp(t D^2) term by term.
  std::complex<double> evaluate(double x) const;
  HeatState advanced(double dt) const;
};

}  // namespace ghermite

#endif  // GHERMITE_HEAT_HPP
