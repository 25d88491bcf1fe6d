#ifndef GHERMITE_OSCILLATOR_HPP
#define GHERMITE_OSCILLATOR_HPP

#include "ghermite/mu.hpp"
#include "ghermite/poly.hpp"
#include "ghermite/transform.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <string>
#include <vector>

namespace ghermite {

/// Truncated matrices of the Bose-like oscillator on span{e_0 .. e_{N-1}}.
struct OscillatorRep {
  MuParam mu;
  int n = 0;
  Eigen::MatrixXcd A, Adag, P, Q, H, J, F;

  /// Identities built from operator words of length k are trusted on
  /// columns 0 .. interior(k).
  int interior(int word_length) const { return n - 1 - word_length; }

  /// p(M) v by Horner.
  Eigen::VectorXcd apply_poly(const DensePoly<double>& p, const Eigen::MatrixXcd& m,
                              const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd apply_poly(const DensePoly<std::complex<double>>& p, const Eigen::MatrixXcd& m,
                              const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd ground() const;
};

/// Throws std::invalid_argument for N < 4.
OscillatorRep build(const MuParam& mu, int n);

/// One identity: defect = max |lhs - rhs| / max(1, max |rhs|) over the
/// trusted columns. column_defects keeps the per-column values (before
/// restriction) so edge corruption stays visible.
struct IdentityDefect {
  std::string identity;
  int word_length = 0;
  int interior_bound = 0;
  double max_defect = 0.0;
  std::vector<double> column_defects;
};

struct OscillatorReport {
  std::string check;
  std::vector<IdentityDefect> identities;

  double max_defect() const;
  bool pass(double tolerance) const { return max_defect() < tolerance; }
  nlohmann::json to_json() const;
};

/// i[P,H] = Q and i[Q,H] = -P, their ladder forms [A,H] = A, [Adag,H] = -Adag,
/// and the squared forms i[P,Q^2] = 2Q, i[P^2,Q] = 2P.
OscillatorReport check_equations_of_motion(const OscillatorRep& rep);

/// i(PQ - QP) = I + 2 mu J, [A,Adag] = I + 2 mu J, JP = -PJ, JQ = -QJ,
/// J = exp(-i pi (H - mu - 1/2)), J = J* = J^{-1}, exp(-2 pi i (H - mu - 1/2)) = I,
/// the ladder actions on e_n and the Hamiltonian as a symmetric product,
/// [A,Adag] commuting with A^2, Adag^2, P^2, Q^2, H,
/// and the rotation identities exp(i l H) X exp(-i l H).
OscillatorReport check_commutation(const OscillatorRep& rep);

/// Power commutators [A, Adag^m], i[P, Q^m], i[P^m, Q] for m <= n_max and
/// their ground-state forms, plus i[P, p(Q)] e_0 = (D p)(Q) e_0 and the two
/// companion forms for Hermite and sample polynomials.
OscillatorReport check_ladder_powers(const OscillatorRep& rep, int n_max);

/// P^n e_0 and Q^n e_0 as Hermite polynomials in Q, P or Adag applied to e_0,
/// and e_n rebuilt from H_n(Q) e_0 and H_n(P) e_0, n <= n_max.
OscillatorReport check_rodrigues_operator(const OscillatorRep& rep, int n_max);

/// F^2 = J, F* = JF = FJ, P = F* Q F, F e_n = (-i)^n e_n, with F both as the
/// diagonal matrix and as exp(-i pi/2 (H - mu - 1/2)).
OscillatorReport check_structure(const OscillatorRep& rep);

/// Matrix entries of Q, P, H against quadrature inner products of the
/// function-space operators, and F against the diagonal spectral transform.
OscillatorReport check_representation(const OscillatorRep& rep, int quad_size = 0);

}  // namespace ghermite

#endif  // GHERMITE_OSCILLATOR_HPP
