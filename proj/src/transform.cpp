#include "ghermite/transform.hpp"

#include "ghermite/efun.hpp"
#include "ghermite/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ghermite {

namespace {

double off_diag(double mu, int k) { return std::sqrt((k + 2.0 * mu * theta(k)) / 2.0); }

}  // namespace

Eigen::VectorXd phi_eval_all(const MuParam& mu, int n, double x) {
  mu.require_numeric();
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const double m = mu.value();
  Eigen::VectorXd out(n + 1);
  // Run the recurrence on the polynomial part and carry exp(-x^2/2) as a
  // separate log scale, so large |x| neither overflows nor flushes early.
  double log_scale = -0.5 * x * x;
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(std::tgamma(m + 0.5));
  out(0) = p * std::exp(log_scale);
  for (int k = 0; k < n; ++k) {
    const double next = (x * p - (k > 0 ? off_diag(m, k) : 0.0) * p_prev) / off_diag(m, k + 1);
    p_prev = p;
    p = next;
    if (std::abs(p) > 1e100) {
      p *= 1e-100;
      p_prev *= 1e-100;
      log_scale += 100.0 * std::log(10.0);
    }
    out(k + 1) = p * std::exp(log_scale);
  }
  return out;
}

double phi_eval(const MuParam& mu, int n, double x) { return phi_eval_all(mu, n, x)(n); }

PolyJet orthonormal_jet(const MuParam& mu, int n, double x) {
  mu.require_numeric();
  const double m = mu.value();
  PolyJet j;
  j.value.resize(n + 1);
  j.first.resize(n + 1);
  j.second.resize(n + 1);
  j.value(0) = 1.0 / std::sqrt(std::tgamma(m + 0.5));
  j.first(0) = 0.0;
  j.second(0) = 0.0;
  for (int k = 0; k < n; ++k) {
    const double back = k > 0 ? off_diag(m, k) : 0.0;
    const double fwd = off_diag(m, k + 1);
    const double pv = k > 0 ? j.value(k - 1) : 0.0;
    const double p1 = k > 0 ? j.first(k - 1) : 0.0;
    const double p2 = k > 0 ? j.second(k - 1) : 0.0;
    j.value(k + 1) = (x * j.value(k) - back * pv) / fwd;
    j.first(k + 1) = (j.value(k) + x * j.first(k) - back * p1) / fwd;
    j.second(k + 1) = (2.0 * j.first(k) + x * j.second(k) - back * p2) / fwd;
  }
  return j;
}

std::complex<double> SpectralVector::evaluate(double x) const {
  if (coeffs.size() == 0) return 0.0;
  const Eigen::VectorXd phi = phi_eval_all(mu, size() - 1, x);
  std::complex<double> acc = 0.0;
  for (int k = 0; k < size(); ++k) acc += coeffs(k) * phi(k);
  return acc;
}

nlohmann::json SpectralVector::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (int k = 0; k < size(); ++k) c.push_back({coeffs(k).real(), coeffs(k).imag()});
  return {{"mu", mu.to_string()}, {"coeffs", c}, {"parseval_defect", parseval_defect}};
}

namespace {

// w_i exp(u_i^2) for the Hermite-type rule, from the Christoffel sum over
// the bounded functions phi_k, which never overflows.
Eigen::VectorXd scaled_weights(const MuParam& mu, const QuadratureRule& rule) {
  Eigen::VectorXd out(rule.size());
  for (int i = 0; i < rule.size(); ++i) out(i) = 1.0 / phi_eval_all(mu, rule.size() - 1, rule.nodes(i)).squaredNorm();
  return out;
}

}  // namespace

SpectralVector expand(const MuParam& mu, const EnvelopedFunction& f, int n_terms, int quad_size) {
  mu.require_numeric();
  if (n_terms < 1) throw std::invalid_argument("n_terms must be positive");
  if (!(f.sigma > 0.0)) throw DomainError("envelope exponent sigma must be positive");
  if (quad_size == 0) quad_size = n_terms + 64;
  if (quad_size < n_terms + 16) throw std::invalid_argument("quadrature size must be at least n_terms + 16");
  const double m = mu.value();
  const QuadratureRule rule = gauss_hermite_mu(mu, quad_size);
  const Eigen::VectorXd omega = scaled_weights(mu, rule);
  const double s = 1.0 / std::sqrt(f.sigma + 0.5);
  SpectralVector out{mu, Eigen::VectorXcd::Zero(n_terms), 0.0};
  for (int i = 0; i < rule.size(); ++i) {
    const double t = s * rule.nodes(i);
    const Eigen::VectorXd phi = phi_eval_all(mu, n_terms - 1, t);
    const std::complex<double> fv = f(t);
    for (int k = 0; k < n_terms; ++k) out.coeffs(k) += omega(i) * fv * phi(k);
  }
  out.coeffs *= std::pow(s, 2.0 * m + 1.0);
  out.parseval_defect = weighted_norm_squared(mu, f) - out.coeffs.squaredNorm();
  return out;
}

double weighted_norm_squared(const MuParam& mu, const EnvelopedFunction& f, int quad_size) {
  mu.require_numeric();
  if (!(f.sigma > 0.0)) throw DomainError("envelope exponent sigma must be positive");
  const QuadratureRule rule = gauss_hermite_mu(mu, quad_size);
  const double scale = 1.0 / std::sqrt(2.0 * f.sigma);
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) acc += rule.weights(i) * std::norm(f.factor(scale * rule.nodes(i)));
  return acc * std::pow(scale, 2.0 * mu.value() + 1.0);
}

SpectralVector fourier_spectral(const SpectralVector& v) {
  SpectralVector out = v;
  for (int k = 0; k < v.size(); ++k) out.coeffs(k) *= fourier_phase<std::complex<double>>(k);
  out.parseval_defect = 0.0;
  return out;
}

SpectralVector inverse_fourier_spectral(const SpectralVector& v) {
  SpectralVector out = v;
  for (int k = 0; k < v.size(); ++k) out.coeffs(k) *= fourier_phase<std::complex<double>>(-k);
  out.parseval_defect = 0.0;
  return out;
}

namespace {

std::complex<double> kernel_integral(const MuParam& mu, const EnvelopedFunction& f, double x, int quad_size,
                                     double sign) {
  mu.require_numeric();
  if (!(f.sigma > 0.0)) throw DomainError("envelope exponent sigma must be positive");
  const double m = mu.value();
  const QuadratureRule rule = gauss_hermite_mu(mu, quad_size);
  const double scale = 1.0 / std::sqrt(f.sigma);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double t = scale * rule.nodes(i);
    // e_mu(-i x t) = c - i s; the inverse kernel flips the sign of s.
    const CosSin cs = c_s_mu(mu, x * t);
    acc += rule.weights(i) * std::complex<double>(cs.c, -sign * cs.s) * f.factor(t);
  }
  return acc * std::pow(scale, 2.0 * m + 1.0);
}

double fourier_norm(const MuParam& mu) {
  return std::pow(2.0, mu.value() + 0.5) * std::tgamma(mu.value() + 0.5);
}

}  // namespace

std::complex<double> fourier_integral(const MuParam& mu, const EnvelopedFunction& f, double x, int quad_size) {
  return kernel_integral(mu, f, x, quad_size, 1.0);
}

std::complex<double> fourier_quadrature(const MuParam& mu, const EnvelopedFunction& f, double x,
                                        int quad_size) {
  return kernel_integral(mu, f, x, quad_size, 1.0) / fourier_norm(mu);
}

std::complex<double> inverse_fourier_quadrature(const MuParam& mu, const EnvelopedFunction& f, double x,
                                                int quad_size) {
  return kernel_integral(mu, f, x, quad_size, -1.0) / fourier_norm(mu);
}

std::string to_string(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::A: return "A";
    case OperatorTag::Adag: return "Adag";
    case OperatorTag::Q: return "Q";
    case OperatorTag::P: return "P";
    case OperatorTag::H: return "H";
    case OperatorTag::J: return "J";
    case OperatorTag::F: return "F";
  }
  return "?";
}

OperatorTag parse_operator_tag(const std::string& name) {
  for (OperatorTag t : {OperatorTag::A, OperatorTag::Adag, OperatorTag::Q, OperatorTag::P, OperatorTag::H,
                        OperatorTag::J, OperatorTag::F})
    if (to_string(t) == name) return t;
  throw std::invalid_argument("unknown operator tag: " + name);
}

nlohmann::json OperatorMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < size(); ++c) row.push_back({entries(r, c).real(), entries(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return {{"tag", to_string(tag)},
          {"N", size()},
          {"lower_bandwidth", lower_bandwidth},
          {"upper_bandwidth", upper_bandwidth},
          {"entries", rows}};
}

OperatorMatrix operator_matrix(const MuParam& mu, OperatorTag tag, int n) {
  mu.require_numeric();
  if (n < 2) throw std::invalid_argument("operator matrices need N >= 2");
  const double m = mu.value();
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(k + 2.0 * m * theta(k));
  const Eigen::MatrixXcd adag = a.transpose();
  OperatorMatrix out;
  out.tag = tag;
  switch (tag) {
    case OperatorTag::A:
      out.entries = a;
      out.upper_bandwidth = 1;
      break;
    case OperatorTag::Adag:
      out.entries = adag;
      out.lower_bandwidth = 1;
      break;
    case OperatorTag::Q:
      out.entries = (a + adag) / std::sqrt(2.0);
      out.lower_bandwidth = out.upper_bandwidth = 1;
      break;
    case OperatorTag::P:
      out.entries = (a - adag) / (i * std::sqrt(2.0));
      out.lower_bandwidth = out.upper_bandwidth = 1;
      break;
    case OperatorTag::H:
    case OperatorTag::J:
    case OperatorTag::F:
      out.entries = Eigen::MatrixXcd::Zero(n, n);
      for (int k = 0; k < n; ++k) {
        if (tag == OperatorTag::H)
          out.entries(k, k) = k + m + 0.5;
        else if (tag == OperatorTag::J)
          out.entries(k, k) = (k % 2) ? -1.0 : 1.0;
        else
          out.entries(k, k) = fourier_phase<std::complex<double>>(k);
      }
      break;
  }
  return out;
}

Eigen::MatrixXcd function_space_matrix(const MuParam& mu, OperatorTag tag, int n, int quad_size) {
  mu.require_numeric();
  if (tag != OperatorTag::Q && tag != OperatorTag::P && tag != OperatorTag::H)
    throw std::invalid_argument("function-space matrices exist for Q, P and H only");
  if (quad_size == 0) quad_size = n + 8;
  // An even rule keeps the node t = 0 away from the 1/x terms.
  if (quad_size % 2) ++quad_size;
  if (quad_size < n + 2) throw std::invalid_argument("quadrature too small for exact inner products");
  const double m = mu.value();
  const QuadratureRule rule = gauss_hermite_mu(mu, quad_size);
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes(q);
    const PolyJet jp = orthonormal_jet(mu, n - 1, x);
    const PolyJet jm = orthonormal_jet(mu, n - 1, -x);
    for (int c = 0; c < n; ++c) {
      // phi = p exp(-x^2/2); every action below is written as
      // (polynomial part) * exp(-x^2/2).
      const double p = jp.value(c), p1 = jp.first(c), p2 = jp.second(c);
      const double reflected = p - jm.value(c);
      const double d1 = p1 - x * p;
      std::complex<double> act;
      if (tag == OperatorTag::Q) {
        act = x * p;
      } else if (tag == OperatorTag::P) {
        act = -i * (d1 + m / x * reflected);
      } else {
        const double d2 = p2 - 2.0 * x * p1 + (x * x - 1.0) * p;
        const double dunkl_sq = d2 + 2.0 * m * d1 / x - m / (x * x) * reflected;
        act = 0.5 * (x * x * p - dunkl_sq);
      }
      for (int r = 0; r < n; ++r) out(r, c) += rule.weights(q) * jp.value(r) * act;
    }
  }
  return out;
}

}  // namespace ghermite
