#include "bn/kernels.hpp"

#include <cmath>

namespace bn {

TrigPoly dirichlet(int n) {
  if (n < 0) throw std::domain_error("dirichlet: order must be nonnegative");
  return TrigPoly(std::vector<cd>(2 * static_cast<size_t>(n) + 1, cd(1.0)));
}

TrigPoly jackson(int r, int N) {
  if (r < 1 || N < 1) throw std::domain_error("jackson: r and N must be >= 1");
  // r-fold convolution of the all-ones window on [-N, N], integer exact.
  std::vector<__int128> cur(2 * static_cast<size_t>(N) + 1, 1);
  for (int step = 1; step < r; ++step) {
    const size_t w = 2 * static_cast<size_t>(N) + 1;
    std::vector<__int128> next(cur.size() + w - 1, 0);
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = 0; j < w; ++j) next[i + j] += cur[i];
    }
    cur.swap(next);
  }
  std::vector<cd> c(cur.size());
  for (size_t i = 0; i < cur.size(); ++i) c[i] = cd(static_cast<double>(cur[i]));
  return TrigPoly(std::move(c));
}

double jackson_plateau_ratio(int r, int N, double lambda) {
  const TrigPoly j = jackson(r, N);
  const int m_max = static_cast<int>(std::floor(lambda * N));
  double mn = kInf;
  for (int m = -m_max; m <= m_max; ++m) mn = std::min(mn, j.coeff(m).real());
  return mn / std::pow(static_cast<double>(N), r - 1);
}

TrigPoly nikolskii_q(int n) {
  if (n < 0) throw std::domain_error("nikolskii_q: n must be nonnegative");
  const int deg = 2 * n + 1;
  std::vector<cd> c(2 * static_cast<size_t>(deg) + 1, cd(0.0));
  auto at = [&](int k) -> cd& { return c[static_cast<size_t>(k + deg)]; };
  at(0) = 1.0 / (2.0 * (n + 1));
  for (int k = 1; k <= n; ++k) {
    const double a = 0.5 / (n - k + 1);
    at(k) += a;
    at(-k) += a;
    const double b = -0.5 / k;
    at(k + n + 1) += b;
    at(-(k + n + 1)) += b;
  }
  return TrigPoly(std::move(c));
}

double nikolskii_q_pairing(const std::vector<double>& c) {
  if (c.empty()) throw std::domain_error("nikolskii_q_pairing: empty sequence");
  const int n = static_cast<int>(c.size()) - 1;
  double sum = c[0] / (n + 1);
  for (int k = 1; k <= n; ++k) sum += 2.0 * c[static_cast<size_t>(k)] / (n - k + 1);
  return kPi * sum;
}

double hl_norm_proxy(const std::vector<double>& a, double p) {
  if (a.empty()) throw std::domain_error("hl_norm_proxy: empty sequence");
  if (!(p > 0.0) || is_inf(p)) throw std::domain_error("hl_norm_proxy: p must be finite positive");
  for (size_t k = 0; k + 1 < a.size(); ++k) {
    if (a[k] < a[k + 1] - 1e-12 * std::max(1.0, a[0])) {
      throw std::domain_error("hl_norm_proxy: sequence must be nonincreasing");
    }
  }
  if (!a.empty() && a.back() < -1e-15) throw std::domain_error("hl_norm_proxy: negative entry");
  double sum = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    sum += std::pow(std::max(a[k], 0.0), p) * std::pow(1.0 + static_cast<double>(k), p - 2.0);
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace bn
