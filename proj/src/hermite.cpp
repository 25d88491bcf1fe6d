#include "ghermite/hermite.hpp"

namespace ghermite {

std::vector<double> hermite_eval_all(const MuParam& mu, int n, double x) {
  if (n < 0) throw std::out_of_range("hermite_eval: n must be nonnegative");
  mu.require_numeric();
  std::vector<double> h(static_cast<std::size_t>(n) + 1);
  h[0] = 1.0;
  if (n == 0) return h;
  double prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = (k + 1) / gamma_step(mu.value(), k + 1) * (2.0 * x * h[k] - 2.0 * k * prev);
    prev = h[k];
    h[k + 1] = next;
  }
  return h;
}

double hermite_eval(const MuParam& mu, int n, double x) { return hermite_eval_all(mu, n, x).back(); }

}  // namespace ghermite
