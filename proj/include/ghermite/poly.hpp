#ifndef GHERMITE_POLY_HPP
#define GHERMITE_POLY_HPP

#include "ghermite/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace ghermite {

/// Univariate polynomial stored as ascending coefficients: coeffs()[k]
/// multiplies x^k. The zero polynomial has no coefficients and degree -1.
/// Trailing exact zeros are trimmed after every operation.
template <class S>
class DensePoly {
 public:
  using Scalar = S;
  using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

  DensePoly() = default;
  explicit DensePoly(Vector coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<S> coeffs) : c_(static_cast<Eigen::Index>(coeffs.size())) {
    Eigen::Index k = 0;
    for (const S& v : coeffs) c_(k++) = v;
    trim();
  }

  static DensePoly constant(const S& c) { return DensePoly{c}; }
  static DensePoly monomial(int n, const S& c = S(1)) {
    if (n < 0) throw std::out_of_range("monomial degree must be nonnegative");
    Vector v = Vector::Zero(n + 1);
    v(n) = c;
    return DensePoly(std::move(v));
  }
  /// The polynomial x.
  static DensePoly x() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 0; }
  const Vector& coeffs() const { return c_; }
  S coeff(int k) const { return (k >= 0 && k < c_.size()) ? c_(k) : S(0); }
  S leading() const { return is_zero() ? S(0) : c_(c_.size() - 1); }

  /// Horner evaluation; T may be wider than S (e.g. complex).
  template <class T>
  T operator()(const T& x) const {
    T acc = T(0);
    for (Eigen::Index k = c_.size(); k-- > 0;) acc = acc * x + T(c_(k));
    return acc;
  }

  /// p(-x).
  DensePoly reflect() const {
    Vector v = c_;
    for (Eigen::Index k = 1; k < v.size(); k += 2) v(k) = -v(k);
    return DensePoly(std::move(v));
  }

  /// p(lambda x).
  DensePoly scale_argument(const S& lambda) const {
    Vector v = c_;
    S p(1);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      v(k) *= p;
      p *= lambda;
    }
    return DensePoly(std::move(v));
  }

  /// x^k p(x).
  DensePoly shift_up(int k) const {
    if (is_zero()) return {};
    Vector v = Vector::Zero(c_.size() + k);
    v.tail(c_.size()) = c_;
    return DensePoly(std::move(v));
  }

  /// Ordinary derivative.
  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    Vector v(c_.size() - 1);
    for (Eigen::Index k = 1; k < c_.size(); ++k) v(k - 1) = S(static_cast<long long>(k)) * c_(k);
    return DensePoly(std::move(v));
  }

  template <class T>
  DensePoly<T> cast() const {
    typename DensePoly<T>::Vector v(c_.size());
    for (Eigen::Index k = 0; k < c_.size(); ++k) v(k) = static_cast<T>(c_(k));
    return DensePoly<T>(std::move(v));
  }

  DensePoly& operator+=(const DensePoly& o) {
    const Eigen::Index n = std::max(c_.size(), o.c_.size());
    Vector v = Vector::Zero(n);
    v.head(c_.size()) = c_;
    v.head(o.c_.size()) += o.c_;
    c_ = std::move(v);
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) { return *this += -o; }
  DensePoly& operator*=(const S& s) {
    c_ *= s;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(const DensePoly& a) { return DensePoly(Vector(-a.c_)); }
  friend DensePoly operator*(DensePoly a, const S& s) { return a *= s; }
  friend DensePoly operator*(const S& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vector v = Vector::Zero(a.c_.size() + b.c_.size() - 1);
    for (Eigen::Index i = 0; i < a.c_.size(); ++i)
      for (Eigen::Index j = 0; j < b.c_.size(); ++j) v(i + j) += a.c_(i) * b.c_(j);
    return DensePoly(std::move(v));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.c_.size() == b.c_.size() && (a.c_.array() == b.c_.array()).all();
  }

 private:
  void trim() {
    Eigen::Index n = c_.size();
    while (n > 0 && c_(n - 1) == S(0)) --n;
    if (n != c_.size()) c_.conservativeResize(n);
  }

  Vector c_;
};

/// Bivariate polynomial: coeffs()(j, k) multiplies x^j y^k.
template <class S>
class BivariatePoly {
 public:
  using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

  BivariatePoly() = default;
  explicit BivariatePoly(Matrix coeffs) : c_(std::move(coeffs)) {}

  /// Zero polynomial able to hold terms x^j y^k with j, k <= degree.
  static BivariatePoly zero(int degree) { return BivariatePoly(Matrix::Zero(degree + 1, degree + 1)); }

  const Matrix& coeffs() const { return c_; }
  S coeff(int j, int k) const {
    return (j >= 0 && k >= 0 && j < c_.rows() && k < c_.cols()) ? c_(j, k) : S(0);
  }
  void set(int j, int k, const S& v) {
    grow(j + 1, k + 1);
    c_(j, k) = v;
  }
  void add(int j, int k, const S& v) {
    grow(j + 1, k + 1);
    c_(j, k) += v;
  }

  int total_degree() const {
    int d = -1;
    for (Eigen::Index j = 0; j < c_.rows(); ++j)
      for (Eigen::Index k = 0; k < c_.cols(); ++k)
        if (c_(j, k) != S(0)) d = std::max(d, static_cast<int>(j + k));
    return d;
  }

  template <class T>
  T operator()(const T& x, const T& y) const {
    T acc = T(0);
    for (Eigen::Index j = c_.rows(); j-- > 0;) {
      T row = T(0);
      for (Eigen::Index k = c_.cols(); k-- > 0;) row = row * y + T(c_(j, k));
      acc = acc * x + row;
    }
    return acc;
  }

  /// p(x, y0) as a univariate polynomial in x.
  DensePoly<S> at_y(const S& y0) const {
    typename DensePoly<S>::Vector v = DensePoly<S>::Vector::Zero(c_.rows());
    for (Eigen::Index j = 0; j < c_.rows(); ++j) {
      S acc(0);
      for (Eigen::Index k = c_.cols(); k-- > 0;) acc = acc * y0 + c_(j, k);
      v(j) = acc;
    }
    return DensePoly<S>(std::move(v));
  }

  BivariatePoly swapped() const { return BivariatePoly(Matrix(c_.transpose())); }

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    r.grow(b.c_.rows(), b.c_.cols());
    r.c_.topLeftCorner(b.c_.rows(), b.c_.cols()) += b.c_;
    return r;
  }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.c_.size() == 0 || b.c_.size() == 0) return {};
    BivariatePoly r(Matrix::Zero(a.c_.rows() + b.c_.rows() - 1, a.c_.cols() + b.c_.cols() - 1));
    for (Eigen::Index j = 0; j < a.c_.rows(); ++j)
      for (Eigen::Index k = 0; k < a.c_.cols(); ++k) {
        if (a.c_(j, k) == S(0)) continue;
        r.c_.block(j, k, b.c_.rows(), b.c_.cols()) += a.c_(j, k) * b.c_;
      }
    return r;
  }
  /// Coefficient-wise equality, ignoring zero padding.
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    const Eigen::Index rows = std::max(a.c_.rows(), b.c_.rows());
    const Eigen::Index cols = std::max(a.c_.cols(), b.c_.cols());
    for (Eigen::Index j = 0; j < rows; ++j)
      for (Eigen::Index k = 0; k < cols; ++k)
        if (a.coeff(j, k) != b.coeff(j, k)) return false;
    return true;
  }

 private:
  void grow(Eigen::Index rows, Eigen::Index cols) {
    rows = std::max(rows, c_.rows());
    cols = std::max(cols, c_.cols());
    if (rows == c_.rows() && cols == c_.cols()) return;
    Matrix m = Matrix::Zero(rows, cols);
    m.topLeftCorner(c_.rows(), c_.cols()) = c_;
    c_ = std::move(m);
  }

  Matrix c_;
};

}  // namespace ghermite

#endif  // GHERMITE_POLY_HPP
