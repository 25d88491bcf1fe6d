#ifndef GHERMITE_QUADRATURE_HPP
#define GHERMITE_QUADRATURE_HPP

#include "ghermite/mu.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ghermite {

enum class Measure {
  hermite_mu,  ///< |t|^(2 mu) exp(-t^2) dt on the real line
  alpha_mu,    ///< (1-t)^(mu-1) (1+t)^mu dt / B(1/2, mu) on (-1, 1)
  jacobi,      ///< (1-t)^a (1+t)^b dt on (-1, 1), unnormalized
};

std::string to_string(Measure m);

/// Nodes strictly increasing, weights positive, exact for polynomials of
/// degree <= exactness_degree against the measure.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int exactness_degree = 0;
  Measure measure = Measure::hermite_mu;

  int size() const { return static_cast<int>(nodes.size()); }
  double mass() const { return weights.sum(); }

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R acc = R(0);
    for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights(i) * f(nodes(i));
    return acc;
  }
};

/// Eigensolver failure (no convergence of the implicit QL sweep).
class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TridiagonalEigen {
  Eigen::VectorXd values;       ///< ascending
  Eigen::VectorXd first_row;    ///< first component of each normalized eigenvector
};

/// Implicit-shift QL iteration for a symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal (off.size() == diag.size() - 1).
/// Tracks only the first eigenvector components, which is all a Gauss rule
/// needs. Throws EigenError after 60 sweeps on one eigenvalue.
TridiagonalEigen symmetric_tridiagonal_eigen(const Eigen::VectorXd& diag, const Eigen::VectorXd& off);

/// Gauss rule for a measure given by its orthonormal recurrence
///   t p_k = sqrt(b_{k+1}) p_{k+1} + a_k p_k + sqrt(b_k) p_{k-1},
/// a = a_0..a_{N-1}, b = b_1..b_{N-1}. Nodes from the Jacobi matrix and a
/// Newton polish; weights from the Christoffel sum
/// mass / sum_{k<N} p_k(t_i)^2, which stays accurate for tiny weights.
QuadratureRule gauss_from_recurrence(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mass,
                                     Measure measure);

/// Rule for |t|^(2 mu) exp(-t^2) dt: zero diagonal, off-diagonals
/// sqrt((k + 2 mu theta(k)) / 2). Total mass Gamma(mu + 1/2).
QuadratureRule gauss_hermite_mu(const MuParam& mu, int n);

/// Gauss-Jacobi rule for (1-t)^a (1+t)^b dt on (-1, 1), a, b > -1.
QuadratureRule gauss_jacobi(double a, double b, int n);

/// Rule for the probability measure (1-t)^(mu-1) (1+t)^mu dt / B(1/2, mu),
/// mu > 0.
QuadratureRule gauss_alpha_mu(const MuParam& mu, int n);

/// "node,weight" lines with 17 significant digits.
std::string to_csv(const QuadratureRule& rule);

}  // namespace ghermite

#endif  // GHERMITE_QUADRATURE_HPP
