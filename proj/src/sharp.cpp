#include "bn/sharp.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "bn/concave.hpp"
#include "bn/kernels.hpp"
#include "bn/witnesses.hpp"

namespace bn {

double constant_2_inf_closed_form(int n, int s) {
  if (n < 1 || s < 0) throw std::domain_error("constant_2_inf_closed_form: n >= 1, s >= 0");
  double sum = (s == 0) ? 1.0 : 0.0;  // k = 0 term
  for (int k = 1; k <= n; ++k) sum += 2.0 * std::pow(k, 2 * s);
  return std::sqrt(sum / kTwoPi);
}

namespace {

cd weyl_mult(int k, int s) {
  if (k == 0) return cd(s == 0 ? 1.0 : 0.0);
  return std::pow(std::abs(k), s) * std::polar(1.0, kPi * s * (k > 0 ? 1.0 : -1.0) / 2.0);
}

// Working state for one coefficient vector on a fixed power-of-two grid.
struct Objective {
  int n, s, M;
  double p, q;
  std::vector<cd> mult;  // Weyl multiplier per k

  Objective(int n_, int s_, double p_, double q_, int M_) : n(n_), s(s_), M(M_), p(p_), q(q_) {
    mult.resize(2 * static_cast<size_t>(n) + 1);
    for (int k = -n; k <= n; ++k) mult[static_cast<size_t>(k + n)] = weyl_mult(k, s);
  }

  TrigPoly poly(const std::vector<cd>& c) const { return TrigPoly(std::vector<cd>(c)); }

  // Grid synthesis via FFT: T(x_j) = sum_k c_k (-1)^k w^{jk}.
  std::vector<cd> grid_values(const std::vector<cd>& c) const {
    std::vector<cd> b(static_cast<size_t>(M), cd(0.0));
    for (int k = -n; k <= n; ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      b[static_cast<size_t>(((k % M) + M) % M)] += sgn * c[static_cast<size_t>(k + n)];
    }
    fft(b, true);
    return b;
  }

  // Analysis adjoint of grid_values: G_k = h sum_j u_j e^{i k x_j}.
  std::vector<cd> adjoint(std::vector<cd> u) const {
    fft(u, false);
    std::vector<cd> G(2 * static_cast<size_t>(n) + 1);
    const double h = kTwoPi / M;
    for (int k = -n; k <= n; ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      G[static_cast<size_t>(k + n)] = h * sgn * u[static_cast<size_t>(((k % M) + M) % M)];
    }
    return G;
  }

  double norm_of(const std::vector<cd>& vals, double r) const {
    if (is_inf(r)) {
      double m = 0.0;
      for (const cd& v : vals) m = std::max(m, std::abs(v));
      return m;
    }
    double acc = 0.0;
    for (const cd& v : vals) acc += std::pow(std::abs(v), r);
    return std::pow(acc * kTwoPi / M, 1.0 / r);
  }

  std::vector<cd> deriv_coeffs(const std::vector<cd>& c) const {
    std::vector<cd> d(c.size());
    for (size_t i = 0; i < c.size(); ++i) d[i] = mult[i] * c[i];
    return d;
  }

  double ratio(const std::vector<cd>& c) const {
    const auto tv = grid_values(c);
    const auto dv = grid_values(deriv_coeffs(c));
    const double den = norm_of(tv, p);
    return den > 0.0 ? norm_of(dv, q) / den : 0.0;
  }

  // Complex gradient of ||vals||_r with respect to the synthesis coefficients
  // (gamma_k = dF/dRe c_k + i dF/dIm c_k = scale * h sum_j |v_j|^{r-2} v_j e^{-ikx_j}).
  std::vector<cd> norm_gradient(const std::vector<cd>& vals, double r, double norm_val) const {
    if (is_inf(r)) {
      size_t js = 0;
      double best = -1.0;
      for (size_t j = 0; j < vals.size(); ++j) {
        if (std::abs(vals[j]) > best) {
          best = std::abs(vals[j]);
          js = j;
        }
      }
      std::vector<cd> u(vals.size(), cd(0.0));
      u[js] = vals[js] / std::abs(vals[js]) * (static_cast<double>(M) / kTwoPi);
      return adjoint(std::move(u));  // the h factor in adjoint cancels the M/2pi
    }
    std::vector<cd> u(vals.size(), cd(0.0));
    const double floor_v = 1e-14 * std::max(norm_val, 1e-300);
    for (size_t j = 0; j < vals.size(); ++j) {
      const double a = std::abs(vals[j]);
      if (a > floor_v) u[j] = std::pow(a, r - 2.0) * vals[j];
    }
    auto G = adjoint(std::move(u));
    const double scale = std::pow(norm_val, 1.0 - r);
    for (cd& g : G) g *= scale;
    return G;
  }

  // Ascent direction of the ratio at c; the numerator chain picks up a
  // conj(m_k) from Td_j = sum m_k c_k e^{ikx_j}.
  std::vector<cd> ratio_gradient(const std::vector<cd>& c, double* ratio_out) const {
    const auto tv = grid_values(c);
    const auto dv = grid_values(deriv_coeffs(c));
    const double D = norm_of(tv, p), N = norm_of(dv, q);
    *ratio_out = N / D;
    const auto gD = norm_gradient(tv, p, D);
    const auto gN = norm_gradient(dv, q, N);
    std::vector<cd> g(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
      g[i] = (std::conj(mult[i]) * gN[i] * D - N * gD[i]) / (D * D);
    }
    return g;
  }
};

double vec_norm(const std::vector<cd>& v) {
  double s = 0.0;
  for (const cd& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<std::vector<cd>> build_starts(int n, int s, double p, const EstimateOptions& opts) {
  const size_t K = 2 * static_cast<size_t>(n) + 1;
  std::vector<std::vector<cd>> starts;
  auto blank = [&] { return std::vector<cd>(K, cd(0.0)); };

  {  // e^{inx}
    auto c = blank();
    c[K - 1] = 1.0;
    starts.push_back(std::move(c));
  }
  {  // cos nx
    auto c = blank();
    c[K - 1] = 0.5;
    c[0] = 0.5;
    starts.push_back(std::move(c));
  }
  starts.push_back(dirichlet(n).coeffs());
  {  // conjugate-multiplier polynomial: the (2, inf) equality case
    auto c = blank();
    for (int k = -n; k <= n; ++k) c[static_cast<size_t>(k + n)] = std::conj(weyl_mult(k, s));
    starts.push_back(std::move(c));
  }
  if (s >= 2) {
    const int r = jackson_r_for(p);
    if (n > 4 * r * s) {
      const int N = n / (r * s);
      const TrigPoly J = jackson(r, N);
      auto c = blank();
      const int shift = n - r * N;
      for (int k = -r * N; k <= r * N; ++k) c[static_cast<size_t>(k + shift + n)] = J.coeff(k);
      starts.push_back(std::move(c));
    }
  }
  if (s >= 1) {  // concave V_l witness
    const int se = (s % 2) ? s + 1 : s;
    const int l = (n <= se) ? n : 1 + static_cast<int>(std::floor(n * (1.0 - 1.0 / se)));
    starts.push_back(build_poly(v_basis(n, l)).coeffs());
  }
  for (int t = static_cast<int>(starts.size()); t < opts.starts; ++t) {
    std::mt19937_64 rng(opts.seed * 1000003ULL + static_cast<unsigned long long>(t));
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto c = blank();
    for (cd& x : c) x = cd(gauss(rng), gauss(rng));
    starts.push_back(std::move(c));
  }
  return starts;
}

}  // namespace

EstimateResult estimate_constant(int n, int s, double p, double q, EstimateOptions opts) {
  if (!(p < q)) throw std::domain_error("estimate_constant: requires p < q");
  if (n < 1) throw std::domain_error("estimate_constant: n >= 1");
  const int M = std::max(next_pow2(4 * (n + 1)), opts.coarse_grid);
  const Objective obj(n, s, p, q, M);
  const auto starts = build_starts(n, s, p, opts);

  std::mutex mu;
  EstimateResult best;
  std::vector<cd> best_c;
  std::atomic<size_t> next{0};
  std::atomic<int> evals{0};

  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= starts.size()) return;
      std::vector<cd> c = starts[idx];
      const double nc = vec_norm(c);
      if (nc == 0.0) continue;
      for (cd& x : c) x /= nc;

      double r = 0.0;
      std::vector<cd> local_best_c = c;
      double local_best = obj.ratio(c);
      int ev = 1;
      double step = 0.3;
      for (int it = 0; it < opts.iters && step > 1e-7; ++it) {
        auto g = obj.ratio_gradient(c, &r);
        const double gn = vec_norm(g);
        if (gn == 0.0) break;
        bool moved = false;
        for (double a = step; a > 1e-8; a *= 0.5) {
          std::vector<cd> cn = c;
          for (size_t i = 0; i < cn.size(); ++i) cn[i] += a / gn * g[i];
          const double nn = vec_norm(cn);
          for (cd& x : cn) x /= nn;
          const double rn = obj.ratio(cn);
          ++ev;
          if (rn > r * (1.0 + 1e-12)) {
            c = std::move(cn);
            if (rn > local_best) {
              local_best = rn;
              local_best_c = c;
            }
            step = std::min(0.3, a * 2.0);
            moved = true;
            break;
          }
        }
        if (!moved) step *= 0.25;
      }
      evals += ev;
      std::lock_guard<std::mutex> lock(mu);
      if (local_best > best.ratio) {
        best.ratio = local_best;
        best.best_start = static_cast<int>(idx);
        best_c = local_best_c;
      }
    }
  };
  {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(hw, 8); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best_c.empty()) throw std::runtime_error("estimate_constant: no usable start");

  // Re-evaluate the winner with the production quadrature grids.
  const TrigPoly T{std::vector<cd>(best_c)};
  const double den = quasinorm(T, p, default_grid(n, p));
  const TrigPoly Td = (s == 0) ? T : weyl_derivative(T, s);
  EstimateResult out;
  out.evaluations = evals.load();
  out.best_start = best.best_start;
  out.argmax = T;
  out.ratio = quasinorm(Td, q, default_grid(n, q)) / den;
  return out;
}

std::vector<double> entire_limit_scan(int s, double p, double q, const std::vector<int>& n_list,
                                      EstimateOptions opts) {
  std::vector<double> out;
  for (int n : n_list) {
    const double c = estimate_constant(n, s, p, q, opts).ratio;
    out.push_back(std::pow(n, -s - 1.0 / p + (is_inf(q) ? 0.0 : 1.0 / q)) * c);
  }
  return out;
}

}  // namespace bn
