#include "ghermite/oscillator.hpp"

#include "ghermite/hermite.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghermite {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cd = std::complex<double>;

namespace {

const cd kI(0.0, 1.0);

template <class S>
VectorXcd horner(const DensePoly<S>& p, const MatrixXcd& m, const VectorXcd& v) {
  if (p.is_zero()) return VectorXcd::Zero(v.size());
  VectorXcd r = cd(p.coeff(p.degree())) * v;
  for (int j = p.degree() - 1; j >= 0; --j) r = m * r + cd(p.coeff(j)) * v;
  return r;
}

MatrixXcd power(const MatrixXcd& m, int k) {
  MatrixXcd r = MatrixXcd::Identity(m.rows(), m.cols());
  for (int j = 0; j < k; ++j) r = r * m;
  return r;
}

MatrixXcd comm(const MatrixXcd& x, const MatrixXcd& y) { return x * y - y * x; }

// |lhs - rhs| over the size of the quantities involved: the right side, and
// for commutators the two products whose difference forms the left side.
double column_defect(const VectorXcd& lhs, const VectorXcd& rhs, double operand_scale = 0.0) {
  const double scale = std::max({1.0, rhs.cwiseAbs().maxCoeff(), operand_scale});
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

struct Commutator {
  MatrixXcd value;
  Eigen::MatrixXd scale;
};

// c (XY - YX), remembering the magnitude of the two products.
Commutator commutator(const MatrixXcd& x, const MatrixXcd& y, cd c = 1.0) {
  const MatrixXcd xy = x * y, yx = y * x;
  return {c * (xy - yx), std::abs(c) * xy.cwiseAbs().cwiseMax(yx.cwiseAbs())};
}

// Collects identities into a report, restricting each to the columns its
// operator words leave intact.
class Recorder {
 public:
  Recorder(const OscillatorRep& rep, std::string check) : rep_(rep) { report_.check = std::move(check); }

  void matrix(const std::string& name, int word_length, const MatrixXcd& lhs, const MatrixXcd& rhs,
              const Eigen::MatrixXd* scale = nullptr) {
    const int bound = rep_.interior(word_length);
    if (bound < 0) return;
    IdentityDefect d{name, word_length, bound, 0.0, {}};
    for (int c = 0; c < rep_.n; ++c) {
      d.column_defects.push_back(column_defect(lhs.col(c), rhs.col(c), scale ? scale->col(c).maxCoeff() : 0.0));
      if (c <= bound) d.max_defect = std::max(d.max_defect, d.column_defects.back());
    }
    report_.identities.push_back(std::move(d));
  }

  // Identity between vectors built from the ground state; only meaningful
  // when the whole word fits inside the truncation.
  void matrix(const std::string& name, int word_length, const Commutator& lhs, const MatrixXcd& rhs) {
    matrix(name, word_length, lhs.value, rhs, &lhs.scale);
  }

  void vector(const std::string& name, int word_length, const VectorXcd& lhs, const VectorXcd& rhs,
              double operand_scale = 0.0) {
    if (rep_.interior(word_length) < 0) return;
    const double v = column_defect(lhs, rhs, operand_scale);
    report_.identities.push_back({name, word_length, 0, v, {v}});
  }

  OscillatorReport take() { return std::move(report_); }

 private:
  const OscillatorRep& rep_;
  OscillatorReport report_;
};

std::string with_n(const std::string& base, int n) { return base + " [n=" + std::to_string(n) + "]"; }

}  // namespace

VectorXcd OscillatorRep::apply_poly(const DensePoly<double>& p, const MatrixXcd& m, const VectorXcd& v) const {
  return horner(p, m, v);
}

VectorXcd OscillatorRep::apply_poly(const DensePoly<cd>& p, const MatrixXcd& m, const VectorXcd& v) const {
  return horner(p, m, v);
}

VectorXcd OscillatorRep::ground() const {
  VectorXcd e = VectorXcd::Zero(n);
  e(0) = 1.0;
  return e;
}

OscillatorRep build(const MuParam& mu, int n) {
  if (n < 4) throw std::invalid_argument("oscillator truncation needs N >= 4");
  mu.require_numeric();
  OscillatorRep r{mu, n, {}, {}, {}, {}, {}, {}, {}};
  r.A = operator_matrix(mu, OperatorTag::A, n).entries;
  r.Adag = operator_matrix(mu, OperatorTag::Adag, n).entries;
  r.P = operator_matrix(mu, OperatorTag::P, n).entries;
  r.Q = operator_matrix(mu, OperatorTag::Q, n).entries;
  r.H = operator_matrix(mu, OperatorTag::H, n).entries;
  r.J = operator_matrix(mu, OperatorTag::J, n).entries;
  r.F = operator_matrix(mu, OperatorTag::F, n).entries;
  return r;
}

double OscillatorReport::max_defect() const {
  double m = 0.0;
  for (const auto& d : identities) m = std::max(m, d.max_defect);
  return m;
}

nlohmann::json OscillatorReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& d : identities)
    ids.push_back({{"identity", d.identity},
                   {"word_length", d.word_length},
                   {"interior_bound", d.interior_bound},
                   {"max_defect", d.max_defect},
                   {"column_defects", d.column_defects}});
  return {{"check", check}, {"max_defect", max_defect()}, {"identities", ids}};
}

OscillatorReport check_equations_of_motion(const OscillatorRep& r) {
  Recorder rec(r, "equations_of_motion");
  rec.matrix("i[P,H] = Q", 2, commutator(r.P, r.H, kI), r.Q);
  rec.matrix("i[Q,H] = -P", 2, commutator(r.Q, r.H, kI), -r.P);
  rec.matrix("[A,H] = A", 2, commutator(r.A, r.H), r.A);
  rec.matrix("[Adag,H] = -Adag", 2, commutator(r.Adag, r.H), -r.Adag);
  rec.matrix("i[P,Q^2] = 2Q", 3, commutator(r.P, r.Q * r.Q, kI), 2.0 * r.Q);
  rec.matrix("i[P^2,Q] = 2P", 3, commutator(r.P * r.P, r.Q, kI), 2.0 * r.P);
  rec.matrix("[A,Adag^2] = 2Adag", 3, commutator(r.A, r.Adag * r.Adag), 2.0 * r.Adag);
  rec.matrix("[Adag,A^2] = -2A", 3, commutator(r.Adag, r.A * r.A), -2.0 * r.A);
  return rec.take();
}

OscillatorReport check_commutation(const OscillatorRep& r) {
  Recorder rec(r, "commutation");
  const double mu = r.mu.value();
  const int n = r.n;
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const MatrixXcd deformed = id + 2.0 * mu * r.J;
  const MatrixXcd shifted = r.H - (mu + 0.5) * id;
  const double pi = std::numbers::pi;

  rec.matrix("i(PQ - QP) = I + 2 mu J", 2, commutator(r.P, r.Q, kI), deformed);
  rec.matrix("[A,Adag] = I + 2 mu J", 2, commutator(r.A, r.Adag), deformed);
  rec.matrix("JP = -PJ", 1, r.J * r.P, -r.P * r.J);
  rec.matrix("JQ = -QJ", 1, r.J * r.Q, -r.Q * r.J);
  rec.matrix("J = exp(-i pi (H - mu - 1/2))", 0, (-kI * pi * shifted).exp(), r.J);
  rec.matrix("J = J*", 0, r.J, r.J.adjoint());
  rec.matrix("J^2 = I", 0, r.J * r.J, id);
  rec.matrix("exp(-2 pi i (H - mu - 1/2)) = I", 0, (-2.0 * kI * pi * shifted).exp(), id);
  for (int k = 0; k < n; ++k) {
    VectorXcd e = VectorXcd::Zero(n);
    e(k) = 1.0;
    rec.vector(with_n("J e_n = (-1)^n e_n", k), 0, r.J * e, ((k % 2) ? -1.0 : 1.0) * e);
  }

  // Ladder actions.
  const VectorXcd e0 = r.ground();
  rec.vector("A e_0 = 0", 1, r.A * e0, VectorXcd::Zero(n));
  for (int total = 1; total < std::min(n, 16); ++total) {
    for (int m = 0; m <= total; ++m) {
      const int k = total - m;  // power of Adag
      const VectorXcd lhs = power(r.A, m) * (power(r.Adag, k) * e0);
      VectorXcd rhs = VectorXcd::Zero(n);
      if (k >= m) rhs = gamma_mu<double>(r.mu, k) / gamma_mu<double>(r.mu, k - m) * (power(r.Adag, k - m) * e0);
      rec.vector("A^m Adag^n e_0 [m=" + std::to_string(m) + ",n=" + std::to_string(k) + "]", m + k, lhs, rhs);
    }
  }
  MatrixXcd adag_a = MatrixXcd::Zero(n, n), a_adag = MatrixXcd::Zero(n, n), energy = MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    adag_a(k, k) = k + 2.0 * mu * theta(k);
    a_adag(k, k) = k + 1 + 2.0 * mu * theta(k + 1);
    energy(k, k) = k + mu + 0.5;
  }
  rec.matrix("Adag A e_n = (n + 2 mu theta_n) e_n", 2, r.Adag * r.A, adag_a);
  rec.matrix("A Adag e_n = (n + 1 + 2 mu theta_{n+1}) e_n", 2, r.A * r.Adag, a_adag);
  rec.matrix("H = (A Adag + Adag A)/2", 2, 0.5 * (r.A * r.Adag + r.Adag * r.A), r.H);
  rec.matrix("H e_n = (n + mu + 1/2) e_n", 0, r.H, energy);
  rec.matrix("H = (P^2 + Q^2)/2", 2, 0.5 * (r.P * r.P + r.Q * r.Q), r.H);

  // [A,Adag] commutes with the even words.
  const MatrixXcd c = comm(r.A, r.Adag);
  const MatrixXcd zero = MatrixXcd::Zero(n, n);
  rec.matrix("[[A,Adag], A^2] = 0", 4, commutator(c, r.A * r.A), zero);
  rec.matrix("[[A,Adag], Adag^2] = 0", 4, commutator(c, r.Adag * r.Adag), zero);
  rec.matrix("[[A,Adag], P^2] = 0", 4, commutator(c, r.P * r.P), zero);
  rec.matrix("[[A,Adag], Q^2] = 0", 4, commutator(c, r.Q * r.Q), zero);
  rec.matrix("[[A,Adag], H] = 0", 3, commutator(c, r.H), zero);

  // Rotations generated by H. The exponentials are diagonal, so one index
  // of margin is enough to keep the truncated Q, P faithful.
  for (double lambda : {0.3, 1.1, pi / 2}) {
    const MatrixXcd u = (kI * lambda * r.H).exp();
    const MatrixXcd ui = (-kI * lambda * r.H).exp();
    const std::string tag = " [lambda=" + std::to_string(lambda) + "]";
    rec.matrix("exp(ilH) Q exp(-ilH) = Q cos l + P sin l" + tag, 1, u * r.Q * ui,
               std::cos(lambda) * r.Q + std::sin(lambda) * r.P);
    rec.matrix("exp(ilH) P exp(-ilH) = -Q sin l + P cos l" + tag, 1, u * r.P * ui,
               -std::sin(lambda) * r.Q + std::cos(lambda) * r.P);
    rec.matrix("exp(ilH) A exp(-ilH) = exp(-il) A" + tag, 1, u * r.A * ui, std::exp(-kI * lambda) * r.A);
  }
  return rec.take();
}

OscillatorReport check_ladder_powers(const OscillatorRep& r, int n_max) {
  Recorder rec(r, "ladder_powers");
  const int n = r.n;
  const MatrixXcd ipq = kI * comm(r.P, r.Q);
  const MatrixXcd a_adag = comm(r.A, r.Adag);
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  for (int m = 2; m <= n_max; m += 2) {
    const int h = m / 2;
    rec.matrix(with_n("[A, Adag^(2n)] = 2n Adag^(2n-1)", h), m + 1, commutator(r.A, power(r.Adag, m)),
               double(m) * power(r.Adag, m - 1));
    rec.matrix(with_n("i[P, Q^(2n)] = 2n Q^(2n-1)", h), m + 1, commutator(r.P, power(r.Q, m), kI),
               double(m) * power(r.Q, m - 1));
    rec.matrix(with_n("i[P^(2n), Q] = 2n P^(2n-1)", h), m + 1, commutator(power(r.P, m), r.Q, kI),
               double(m) * power(r.P, m - 1));
  }
  for (int m = 1; m <= n_max; m += 2) {
    const int h = (m - 1) / 2;
    rec.matrix(with_n("[A, Adag^(2n+1)] = Adag^(2n) (2n + [A,Adag])", h), m + 1, commutator(r.A, power(r.Adag, m)),
               power(r.Adag, m - 1) * (double(m - 1) * id + a_adag));
    rec.matrix(with_n("i[P, Q^(2n+1)] = Q^(2n) (2n + i[P,Q])", h), m + 1, commutator(r.P, power(r.Q, m), kI),
               power(r.Q, m - 1) * (double(m - 1) * id + ipq));
    rec.matrix(with_n("i[P^(2n+1), Q] = P^(2n) (2n + i[P,Q])", h), m + 1, commutator(power(r.P, m), r.Q, kI),
               power(r.P, m - 1) * (double(m - 1) * id + ipq));
  }

  // Ground-state forms.
  const VectorXcd e0 = r.ground();
  const double mu = r.mu.value();
  rec.vector("Adag e_0 / sqrt 2 = Q e_0", 1, r.Adag * e0 / std::sqrt(2.0), r.Q * e0);
  rec.vector("Q e_0 = -i P e_0", 1, r.Q * e0, -kI * (r.P * e0));
  rec.vector("i[P,Q] e_0 = (1 + 2 mu) e_0", 2, ipq * e0, (1.0 + 2.0 * mu) * e0);
  // c (xy - yx) = rhs for vectors, scaled by the size of the two products.
  auto vcomm = [&](const std::string& name, int k, cd c, const VectorXcd& xy, const VectorXcd& yx,
                   const VectorXcd& rhs) {
    rec.vector(name, k, c * (xy - yx), rhs, std::max(xy.cwiseAbs().maxCoeff(), yx.cwiseAbs().maxCoeff()));
  };
  for (int m = 1; m <= n_max; ++m) {
    const double ratio = gamma_step(mu, m);
    vcomm(with_n("i[P, Q^n] e_0 = gamma ratio Q^(n-1) e_0", m), m + 1, kI, r.P * (power(r.Q, m) * e0),
          power(r.Q, m) * (r.P * e0), ratio * (power(r.Q, m - 1) * e0));
    vcomm(with_n("i[P^n, Q] e_0 = gamma ratio P^(n-1) e_0", m), m + 1, kI, power(r.P, m) * (r.Q * e0),
          r.Q * (power(r.P, m) * e0), ratio * (power(r.P, m - 1) * e0));
    vcomm(with_n("[A, Adag^n] e_0 = gamma ratio Adag^(n-1) e_0", m), m + 1, 1.0, r.A * (power(r.Adag, m) * e0),
          power(r.Adag, m) * (r.A * e0), ratio * (power(r.Adag, m - 1) * e0));
  }

  // Polynomial forms with the Dunkl derivative computed symbolically.
  auto poly_checks = [&](const DensePoly<double>& p, const std::string& label) {
    const int k = p.degree() + 1;
    const DensePoly<double> dp = dunkl_apply(r.mu, p);
    vcomm("i[P, p(Q)] e_0 = (Dp)(Q) e_0 " + label, k, kI, r.P * r.apply_poly(p, r.Q, e0),
          r.apply_poly(p, r.Q, r.P * e0), r.apply_poly(dp, r.Q, e0));
    vcomm("i[p(P), Q] e_0 = (Dp)(P) e_0 " + label, k, kI, r.apply_poly(p, r.P, r.Q * e0),
          r.Q * r.apply_poly(p, r.P, e0), r.apply_poly(dp, r.P, e0));
    vcomm("[A, p(Adag)] e_0 = (Dp)(Adag) e_0 " + label, k, 1.0, r.A * r.apply_poly(p, r.Adag, e0),
          r.apply_poly(p, r.Adag, r.A * e0), r.apply_poly(dp, r.Adag, e0));
  };
  for (int m = 1; m <= n_max; ++m) {
    for (double lambda : {1.0, 1.0 / std::sqrt(2.0)}) {
      const DensePoly<double> h = hermite_coeffs<double>(r.mu, m).scale_argument(lambda);
      const std::string label = "[H_n(l x), n=" + std::to_string(m) + ", l=" + std::to_string(lambda) + "]";
      poly_checks(h, label);
      // The Dunkl derivative of H_n(l x) is 2 l n H_{n-1}(l x).
      const DensePoly<double> expect = hermite_coeffs<double>(r.mu, m - 1).scale_argument(lambda) * (2.0 * lambda * m);
      rec.vector("(D H_n(l.))(Q) e_0 = 2 l n H_{n-1}(l Q) e_0 " + label, m,
                 r.apply_poly(dunkl_apply(r.mu, h), r.Q, e0), r.apply_poly(expect, r.Q, e0));
    }
  }
  poly_checks(DensePoly<double>{0.5, -1.0, 0.0, 2.0, 0.25}, "[sample quartic]");
  poly_checks(DensePoly<double>{-3.0, 0.0, 1.5, 0.0, 0.0, 0.75, -0.125}, "[sample sextic]");
  return rec.take();
}

OscillatorReport check_rodrigues_operator(const OscillatorRep& r, int n_max) {
  Recorder rec(r, "rodrigues_operator");
  const VectorXcd e0 = r.ground();
  const double rt2 = std::sqrt(2.0);
  for (int m = 0; m <= n_max; ++m) {
    const DensePoly<cd> h = hermite_coeffs<double>(r.mu, m).cast<cd>();
    const double g = gamma_mu<double>(r.mu, m);
    const double fact = std::tgamma(m + 1.0);
    const double half_pow = std::pow(2.0, 0.5 * m), full_pow = std::pow(2.0, m);
    const cd in = std::pow(kI, m), min = std::pow(-kI, m);
    const VectorXcd pn = power(r.P, m) * e0;
    const VectorXcd qn = power(r.Q, m) * e0;
    const VectorXcd an = power(r.Adag, m) * e0;
    const int k = m + 1;

    rec.vector(with_n("P^n e_0 = i^n gamma/(2^(n/2) n!) H_n(Q/sqrt 2) e_0", m), k, pn,
               in * g / (half_pow * fact) * r.apply_poly(h.scale_argument(1.0 / rt2), r.Q, e0));
    rec.vector(with_n("P^n e_0 = i^n gamma/(2^n n!) H_n(Adag/sqrt 2) e_0", m), k, pn,
               in * g / (full_pow * fact) * r.apply_poly(h.scale_argument(1.0 / rt2), r.Adag, e0));
    rec.vector(with_n("Q^n e_0 = (-i)^n gamma/(2^(n/2) n!) H_n(P/sqrt 2) e_0", m), k, qn,
               min * g / (half_pow * fact) * r.apply_poly(h.scale_argument(1.0 / rt2), r.P, e0));
    rec.vector(with_n("Q^n e_0 = (-i)^n gamma/(2^n n!) H_n(i Adag/sqrt 2) e_0", m), k, qn,
               min * g / (full_pow * fact) * r.apply_poly(h.scale_argument(kI / rt2), r.Adag, e0));
    rec.vector(with_n("Adag^n e_0 = gamma/(2^(n/2) n!) H_n(Q) e_0", m), k, an,
               g / (half_pow * fact) * r.apply_poly(h, r.Q, e0));
    VectorXcd en = VectorXcd::Zero(r.n);
    en(m) = 1.0;
    rec.vector(with_n("e_n = sqrt(gamma)/(2^(n/2) n!) H_n(Q) e_0", m), k, en,
               std::sqrt(g) / (half_pow * fact) * r.apply_poly(h, r.Q, e0));
    rec.vector(with_n("e_n = (-i)^n sqrt(gamma)/(2^(n/2) n!) H_n(P) e_0", m), k, en,
               min * std::sqrt(g) / (half_pow * fact) * r.apply_poly(h, r.P, e0));
  }
  return rec.take();
}

OscillatorReport check_structure(const OscillatorRep& r) {
  Recorder rec(r, "structure");
  const double mu = r.mu.value();
  const int n = r.n;
  const MatrixXcd shifted = r.H - (mu + 0.5) * MatrixXcd::Identity(n, n);
  const MatrixXcd f_exp = (-0.5 * kI * std::numbers::pi * shifted).exp();
  for (const auto& [label, f] : {std::pair<std::string, const MatrixXcd&>{"diagonal F", r.F},
                                 std::pair<std::string, const MatrixXcd&>{"F = exp(-i pi/2 (H - mu - 1/2))", f_exp}}) {
    const std::string tag = " [" + label + "]";
    rec.matrix("F^2 = J" + tag, 0, f * f, r.J);
    rec.matrix("F* = JF" + tag, 0, f.adjoint(), r.J * f);
    rec.matrix("F* = FJ" + tag, 0, f.adjoint(), f * r.J);
    rec.matrix("P = F* Q F" + tag, 1, f.adjoint() * r.Q * f, r.P);
    MatrixXcd phases = MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) phases(k, k) = fourier_phase<cd>(k);
    rec.matrix("F e_n = (-i)^n e_n" + tag, 0, f, phases);
  }
  return rec.take();
}

OscillatorReport check_representation(const OscillatorRep& r, int quad_size) {
  Recorder rec(r, "representation");
  rec.matrix("<phi_m, Q phi_n> = Q(m,n)", 0, function_space_matrix(r.mu, OperatorTag::Q, r.n, quad_size), r.Q);
  rec.matrix("<phi_m, P phi_n> = P(m,n)", 0, function_space_matrix(r.mu, OperatorTag::P, r.n, quad_size), r.P);
  rec.matrix("<phi_m, H phi_n> = H(m,n)", 0, function_space_matrix(r.mu, OperatorTag::H, r.n, quad_size), r.H);
  MatrixXcd spectral(r.n, r.n);
  for (int k = 0; k < r.n; ++k) {
    SpectralVector v{r.mu, VectorXcd::Zero(r.n), 0.0};
    v.coeffs(k) = 1.0;
    spectral.col(k) = fourier_spectral(v).coeffs;
  }
  rec.matrix("spectral Fourier transform = F", 0, spectral, r.F);
  return rec.take();
}

}  // namespace ghermite
