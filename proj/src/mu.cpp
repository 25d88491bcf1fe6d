#include "ghermite/mu.hpp"

#include <cctype>
#include <cmath>

namespace ghermite {

namespace {

bool is_exact_pole(const Rational& mu) {
  // mu = -(2k+1)/2  <=>  2 mu is a negative odd integer.
  const Rational twice = 2 * mu;
  if (denominator(twice) != 1) return false;
  const auto num = numerator(twice);
  return num < 0 && (num % 2 != 0);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  try {
    if (s.find('/') != std::string::npos) {
      Rational q(s);
      return q;
    }
    // Decimal literal: sign, digits, optional fraction, optional exponent.
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long long scale = 0;
    bool seen_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      seen_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
        --scale;
        seen_digit = true;
      }
    }
    if (!seen_digit) throw std::invalid_argument("not a number");
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      ++pos;
      const std::string exponent = s.substr(pos);
      std::size_t used = 0;
      const long long e = std::stoll(exponent, &used);
      if (used != exponent.size()) throw std::invalid_argument("bad exponent");
      scale += e;
      pos = s.size();
    }
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
    Int mantissa(digits);
    Int ten_power = boost::multiprecision::pow(Int(10), static_cast<unsigned>(std::llabs(scale)));
    Rational q = scale >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

MuParam::MuParam(double value) : value_(value) {
  if (!(value > -0.5) || !std::isfinite(value)) throw DomainError("mu must exceed -1/2");
}

MuParam MuParam::exact(const Rational& value) {
  if (is_exact_pole(value)) throw DomainError("mu must avoid -1/2, -3/2, -5/2, ...");
  MuParam mu;
  mu.exact_ = value;
  mu.value_ = value.convert_to<double>();
  return mu;
}

MuParam MuParam::parse(std::string_view text) { return exact(parse_rational(text)); }

const Rational& MuParam::exact_value() const {
  if (!exact_) throw std::logic_error("mu has no exact representation");
  return *exact_;
}

void MuParam::require_numeric() const {
  if (!numeric_ok()) throw DomainError("mu must exceed -1/2");
}

void MuParam::require_positive() const {
  if (!(value_ > 0.0)) throw DomainError("mu must be positive");
}

std::string MuParam::to_string() const {
  if (exact_) return ghermite::to_string(*exact_);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

double log_gamma_mu(const MuParam& mu, int n) {
  if (n < 0) throw std::out_of_range("log_gamma_mu: n must be nonnegative");
  mu.require_numeric();
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) acc += std::log(gamma_step(mu.value(), k));
  return acc;
}

double alpha_mu_moment(const MuParam& mu, int n) {
  if (n < 0) throw std::out_of_range("alpha_mu_moment: n must be nonnegative");
  mu.require_positive();
  double m = 1.0;
  for (int k = 1; k <= n; ++k) m *= k / gamma_step(mu.value(), k);
  return m;
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double beta(double a, double b) {
  // Sign matters only for negative non-integer arguments, which callers avoid.
  return std::exp(log_beta(a, b));
}

}  // namespace ghermite
