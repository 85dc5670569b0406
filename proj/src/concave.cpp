#include "bn/concave.hpp"

#include <algorithm>
#include <cmath>

namespace bn {

bool is_concave(const std::vector<double>& c) {
  if (c.empty()) throw std::domain_error("is_concave: empty sequence");
  const size_t n = c.size() - 1;
  for (size_t k = 0; k < n; ++k) {
    if (c[k] < c[k + 1]) return false;
  }
  if (c[n] < 0.0) return false;
  // Delta c_j = c_j - c_{j+1} must be nondecreasing in j (c_{n+1} = 0).
  auto delta = [&](size_t j) { return c[j] - (j + 1 <= n ? c[j + 1] : 0.0); };
  for (size_t j = 0; j < n; ++j) {
    if (delta(j) > delta(j + 1)) return false;
  }
  return true;
}

ConcaveSeq make_concave(std::vector<double> c) {
  if (c.empty()) throw std::domain_error("make_concave: empty sequence");
  const double scale = std::max(1e-300, *std::max_element(c.begin(), c.end()));
  const double slack = 1e-12 * scale;
  const size_t n = c.size() - 1;
  // Snap: clamp negatives, enforce monotonicity within slack.
  for (double& v : c) {
    if (v < 0.0 && v > -slack) v = 0.0;
  }
  for (size_t k = n; k-- > 0;) {
    if (c[k] < c[k + 1] && c[k] > c[k + 1] - slack) c[k] = c[k + 1];
  }
  if (!is_concave(c)) {
    // Retry after a slack-tolerant Delta fix.
    auto delta = [&](size_t j) { return c[j] - (j + 1 <= n ? c[j + 1] : 0.0); };
    bool fixable = true;
    for (size_t j = 0; j < n; ++j) {
      if (delta(j) > delta(j + 1) + slack) fixable = false;
    }
    if (!fixable) throw std::domain_error("make_concave: sequence is not concave");
    for (size_t j = n; j-- > 0;) {
      const double dnext = c[j + 1] - (j + 2 <= n ? c[j + 2] : 0.0);
      if (c[j] - c[j + 1] > dnext) c[j] = c[j + 1] + dnext;
      // c[j+1] + dnext can round one ulp high; the recheck is exact.
      while (c[j] - c[j + 1] > dnext) c[j] = std::nextafter(c[j], 0.0);
    }
    if (!is_concave(c)) throw std::domain_error("make_concave: sequence is not concave");
  }
  return ConcaveSeq{static_cast<int>(n), std::move(c)};
}

ConcaveSeq v_basis(int n, int l) {
  if (n < 1) throw std::domain_error("v_basis: n must be >= 1");
  if (l < 0 || l > n) throw std::domain_error("v_basis: l out of range");
  std::vector<double> v(static_cast<size_t>(n) + 1);
  const double cap = 1.0 - static_cast<double>(l - 1) / n;
  for (int k = 0; k <= n; ++k) {
    v[static_cast<size_t>(k)] = std::min(1.0 - static_cast<double>(k - 1) / n, cap);
  }
  // Snap ulp-level wiggles in the difference chain so exact checks downstream hold.
  return make_concave(std::move(v));
}

std::vector<double> decompose(const ConcaveSeq& c) {
  if (!is_concave(c.values)) throw std::domain_error("decompose: input is not concave");
  const int n = c.n;
  auto delta = [&](int j) {
    return c.values[static_cast<size_t>(j)] - (j + 1 <= n ? c.values[static_cast<size_t>(j) + 1] : 0.0);
  };
  std::vector<double> g(static_cast<size_t>(n) + 1, 0.0);
  g[0] = n * delta(0);
  for (int l = 1; l <= n; ++l) g[static_cast<size_t>(l)] = n * (delta(l) - delta(l - 1));
  return g;
}

double s_functional(const ConcaveSeq& c) {
  double sum = 0.0;
  for (int k = 0; k <= c.n; ++k) sum += c.values[static_cast<size_t>(k)] / (c.n - k + 1);
  return sum;
}

double v_weighted_sum_exact(int n, int l) {
  if (l < 0 || l > n) throw std::domain_error("v_weighted_sum_exact: l out of range");
  double harmonic = 0.0;
  for (int m = n - l + 1; m <= n + 1; ++m) harmonic += 1.0 / m;
  return (1.0 - static_cast<double>(l - 1) / n) * (harmonic + 1.0) - 1.0 / n;
}

double h_ns_sup(int n, int s) {
  if (n < 1 || s < 1) throw std::domain_error("h_ns_sup: n, s must be >= 1");
  auto H = [&](double tau) {
    return std::pow(tau, s + 1) / (1.0 - std::log(1.0 + 1.0 / n - tau));
  };
  double best = 0.0;
  const int grid = 10000;
  for (int i = 0; i <= grid; ++i) best = std::max(best, H(static_cast<double>(i) / grid));
  // H peaks sharply near tau = 1 for large s; refine the top decile
  // geometrically toward the endpoint.
  for (double d = 0.1; d > 1e-14; d *= 0.75) best = std::max(best, H(1.0 - d));
  best = std::max(best, H(1.0));
  return best;
}

TrigPoly build_poly(const ConcaveSeq& c) {
  const int n = c.n;
  std::vector<cd> coeffs(2 * static_cast<size_t>(n) + 1);
  for (int k = -n; k <= n; ++k) {
    coeffs[static_cast<size_t>(k + n)] = cd(c.values[static_cast<size_t>(std::abs(k))]);
  }
  return TrigPoly(std::move(coeffs));
}

TailBoundCheck pointwise_tail_bound_check(const ConcaveSeq& c, double x, double K) {
  const int n = c.n;
  if (!(x > 1.0 / n) || !(x < kPi)) throw std::domain_error("pointwise_tail_bound_check: x out of (1/n, pi)");
  const int idx = n - static_cast<int>(std::floor(1.0 / x + 1.0));
  const double lhs = std::abs(build_poly(c).eval(x));
  const double bound_core = c.values[static_cast<size_t>(idx)] / x;
  TailBoundCheck out;
  if (bound_core <= 0.0) {
    out.ratio = (lhs <= 1e-12 * std::max(1.0, c.values[0])) ? 0.0 : kInf;
  } else {
    out.ratio = lhs / bound_core;
  }
  out.ok = out.ratio <= K;
  return out;
}

double tail_integral_lhs(const ConcaveSeq& c) {
  const int n = c.n;
  double sum = 0.0;
  for (double v : c.values) sum += v;
  double lhs = sum / n;
  // floor(1/x + 1) = m exactly on x in (1/m, 1/(m-1)]; integrate x^{-1} in
  // closed form on each piece of (1/n, pi).
  for (int m = n; m >= 1; --m) {
    const double lo = std::max(1.0 / n, 1.0 / m);
    const double hi = std::min(kPi, m > 1 ? 1.0 / (m - 1) : kPi);
    if (hi <= lo) continue;
    lhs += c.values[static_cast<size_t>(n - m)] * std::log(hi / lo);
  }
  return lhs;
}

ConcaveSeq random_concave(int n, std::mt19937_64& rng, std::vector<double>* weights_out) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(static_cast<size_t>(n) + 1, 0.0);
  // Sparse-ish nonnegative weights keep the sweep varied.
  for (int l = 0; l <= n; ++l) {
    if (unif(rng) < 0.3) w[static_cast<size_t>(l)] = unif(rng);
  }
  if (*std::max_element(w.begin(), w.end()) == 0.0) w[static_cast<size_t>(n / 2)] = 1.0;
  std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
  for (int l = 0; l <= n; ++l) {
    if (w[static_cast<size_t>(l)] == 0.0) continue;
    const ConcaveSeq v = v_basis(n, l);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] += w[static_cast<size_t>(l)] * v.values[static_cast<size_t>(k)];
  }
  if (weights_out) *weights_out = w;
  return make_concave(std::move(c));
}

}  // namespace bn
