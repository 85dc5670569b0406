#include "bn/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bn/simplex.hpp"

namespace bn {

namespace {

double basis_eval(int k, double x, bool sine) {
  return sine ? std::sin(k * x) : std::cos(k * x);
}

// Antiderivative of the basis function (constant of integration 0).
double basis_antideriv(int k, double x, bool sine) {
  if (sine) return -std::cos(k * x) / k;
  return (k == 0) ? x : std::sin(k * x) / k;
}

std::vector<int> basis_indices(int n, bool sine) {
  std::vector<int> ks;
  for (int k = sine ? 1 : 0; k <= n; ++k) ks.push_back(k);
  return ks;
}

Eigen::VectorXd constraint_vector(const std::vector<int>& ks, int s, bool sine) {
  Eigen::VectorXd e(static_cast<int>(ks.size()));
  for (size_t i = 0; i < ks.size(); ++i) e[static_cast<int>(i)] = derivative_at_zero_coeff(ks[i], s, sine);
  return e;
}

TrigPoly poly_from_coeffs(int n, bool sine, const Eigen::VectorXd& a) {
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1, cd(0.0));
  if (sine) {
    for (int k = 1; k <= n; ++k) {
      const cd half(0.0, -0.5 * a[k - 1]);  // sin kx = (e^{ikx}-e^{-ikx})/(2i)
      c[static_cast<size_t>(n + k)] = half;
      c[static_cast<size_t>(n - k)] = -half;
    }
  } else {
    c[static_cast<size_t>(n)] = cd(a[0]);
    for (int k = 1; k <= n; ++k) {
      c[static_cast<size_t>(n + k)] = cd(0.5 * a[k]);
      c[static_cast<size_t>(n - k)] = cd(0.5 * a[k]);
    }
  }
  return TrigPoly(std::move(c));
}

double eval_coeffs(const std::vector<int>& ks, bool sine, const Eigen::VectorXd& a, double x) {
  double v = 0.0;
  for (size_t i = 0; i < ks.size(); ++i) v += a[static_cast<int>(i)] * basis_eval(ks[i], x, sine);
  return v;
}

double eval_coeffs_deriv(const std::vector<int>& ks, bool sine, const Eigen::VectorXd& a, double x) {
  double v = 0.0;
  for (size_t i = 0; i < ks.size(); ++i) {
    const int k = ks[i];
    v += a[static_cast<int>(i)] * k * (sine ? std::cos(k * x) : -std::sin(k * x));
  }
  return v;
}

// Sorted sign changes of x -> f(x) on [-pi, pi), bisected to 1e-12. The scan
// grid is offset by half a cell so that exact zeros at 0 and +-pi (forced for
// odd polynomials) fall strictly inside a bracket.
std::vector<double> sign_changes(const std::function<double(double)>& f, int grid) {
  std::vector<double> zs;
  auto node = [&](int j) { return -kPi + kTwoPi * (j + 0.5) / grid; };
  double x0 = node(0), f0 = f(x0);
  for (int j = 1; j <= grid; ++j) {
    const double x1 = node(j);
    const double f1 = f(x1);
    if ((f0 < 0.0) != (f1 < 0.0)) {
      double lo = x0, hi = x1, flo = f0;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double z = 0.5 * (lo + hi);
      if (z >= kPi) z -= kTwoPi;
      zs.push_back(z);
    }
    x0 = x1;
    f0 = f1;
  }
  std::sort(zs.begin(), zs.end());
  return zs;
}

// Periodic trapezoid weights for sorted nodes on [-pi, pi).
Eigen::VectorXd periodic_weights(const std::vector<double>& xs) {
  const int M = static_cast<int>(xs.size());
  Eigen::VectorXd w(M);
  for (int j = 0; j < M; ++j) {
    const double prev = (j == 0) ? xs[static_cast<size_t>(M - 1)] - kTwoPi : xs[static_cast<size_t>(j - 1)];
    const double next = (j == M - 1) ? xs[0] + kTwoPi : xs[static_cast<size_t>(j + 1)];
    w[j] = 0.5 * (next - prev);
  }
  return w;
}

struct LadOutcome {
  Eigen::VectorXd a;
  double objective = 0.0;
  int iterations = 0;
  std::string status = "direct";
};

// Weighted least-absolute-deviations min_z sum_j w_j |r_j + (H z)_j| via the
// bounded dual max y'r, H'y = 0, |y_j| <= w_j (shifted to [0, 2w]).
// Coefficients come back in the full basis through a = a0 + sum z_m dir_m.
LadOutcome lad_solve(const std::vector<double>& xs, const std::vector<int>& ks, bool sine,
                     const Eigen::VectorXd& e, int pivot) {
  const int d = static_cast<int>(ks.size());
  const int M = static_cast<int>(xs.size());
  const Eigen::VectorXd w = periodic_weights(xs);

  Eigen::VectorXd a0 = Eigen::VectorXd::Zero(d);
  a0[pivot] = 1.0 / e[pivot];

  LadOutcome out;
  if (d == 1) {
    out.a = a0;
    double obj = 0.0;
    for (int j = 0; j < M; ++j) obj += w[j] * std::abs(eval_coeffs(ks, sine, a0, xs[static_cast<size_t>(j)]));
    out.objective = obj;
    return out;
  }

  Eigen::MatrixXd H(M, d - 1);
  Eigen::VectorXd r(M);
  for (int j = 0; j < M; ++j) {
    const double x = xs[static_cast<size_t>(j)];
    r[j] = basis_eval(ks[static_cast<size_t>(pivot)], x, sine) / e[pivot];
    int m = 0;
    for (int i = 0; i < d; ++i) {
      if (i == pivot) continue;
      H(j, m++) = basis_eval(ks[static_cast<size_t>(i)], x, sine) -
                  e[i] / e[pivot] * basis_eval(ks[static_cast<size_t>(pivot)], x, sine);
    }
  }

  LpProblem lp;
  lp.A = H.transpose();
  lp.b = H.transpose() * w;
  lp.c = r;
  lp.upper = 2.0 * w;
  const LpResult res = solve_lp(lp);
  out.status = res.status;
  out.iterations = res.iterations;
  if (!res.optimal) throw std::runtime_error("solve_extremal: LP " + res.status);
  out.objective = res.value - r.dot(w);

  // Complementary slackness: residuals vanish where the dual multiplier is
  // strictly interior. Weighted least squares with interiorness weights.
  Eigen::VectorXd omega(M);
  for (int j = 0; j < M; ++j) {
    omega[j] = std::min(res.x[j], 2.0 * w[j] - res.x[j]) / w[j];
    omega[j] = std::max(omega[j], 0.0);
  }
  Eigen::MatrixXd G = H.transpose() * omega.asDiagonal() * H;
  G.diagonal().array() += 1e-10 * (G.trace() / (d - 1) + 1.0);
  const Eigen::VectorXd z = G.ldlt().solve(-H.transpose() * (omega.asDiagonal() * r));
  out.a = a0;
  int m = 0;
  for (int i = 0; i < d; ++i) {
    if (i == pivot) continue;
    out.a[i] += z[m];
    out.a[pivot] -= e[i] / e[pivot] * z[m];
    ++m;
  }
  return out;
}

// Exact sum_j sigma_j int_{alpha_j}^{alpha_{j+1}} f via a closed-form
// antiderivative, periodic over [-pi, pi). Signs from midpoint evaluation.
std::vector<int> interval_signs(const std::function<double(double)>& f, const std::vector<double>& zs) {
  const int m = static_cast<int>(zs.size());
  std::vector<int> sg(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double hi = (j + 1 < m) ? zs[static_cast<size_t>(j + 1)] : zs[0] + kTwoPi;
    const double mid = 0.5 * (zs[static_cast<size_t>(j)] + hi);
    sg[static_cast<size_t>(j)] = (f(mid) < 0.0) ? -1 : 1;
  }
  return sg;
}

// Newton polish of the stationarity system: T(alpha_i) = 0, e.a = 1,
// int sign(T) phi_k = mu e_k, with the sign pattern frozen.
void newton_polish(const std::vector<int>& ks, bool sine, const Eigen::VectorXd& e,
                   Eigen::VectorXd& a, std::vector<double>& zs, double* residual_out) {
  const int d = static_cast<int>(ks.size());
  const int mz = static_cast<int>(zs.size());
  auto f = [&](double x) { return eval_coeffs(ks, sine, a, x); };
  if (mz == 0) {
    *residual_out = 0.0;
    return;
  }
  const std::vector<int> sg = interval_signs(f, zs);

  const int dim = d + mz + 1;
  Eigen::VectorXd u(dim);
  u.head(d) = a;
  for (int i = 0; i < mz; ++i) u[d + i] = zs[static_cast<size_t>(i)];
  u[dim - 1] = 0.0;  // mu, refreshed from the first residual evaluation

  auto residual = [&](const Eigen::VectorXd& uu) {
    Eigen::VectorXd F(dim);
    const Eigen::VectorXd ac = uu.head(d);
    for (int i = 0; i < mz; ++i) F[i] = eval_coeffs(ks, sine, ac, uu[d + i]);
    F[mz] = e.dot(ac) - 1.0;
    for (int k = 0; k < d; ++k) {
      double I = 0.0;
      for (int j = 0; j < mz; ++j) {
        const double lo = uu[d + j];
        const double hi = (j + 1 < mz) ? uu[d + j + 1] : uu[d] + kTwoPi;
        I += sg[static_cast<size_t>(j)] *
             (basis_antideriv(ks[static_cast<size_t>(k)], hi, sine) -
              basis_antideriv(ks[static_cast<size_t>(k)], lo, sine));
      }
      F[mz + 1 + k] = I - uu[dim - 1] * e[k];
    }
    return F;
  };

  // Initialize mu by least squares against the current sign integrals.
  {
    const Eigen::VectorXd F0 = residual(u);
    double num = 0.0, den = 0.0;
    for (int k = 0; k < d; ++k) {
      num += (F0[mz + 1 + k] + u[dim - 1] * e[k]) * e[k];
      den += e[k] * e[k];
    }
    u[dim - 1] = num / den;
  }

  Eigen::VectorXd F = residual(u);
  double fn = F.lpNorm<Eigen::Infinity>();
  const Eigen::VectorXd u_in = u;
  const double fn_in = fn;
  for (int iter = 0; iter < 50 && fn > 1e-13; ++iter) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::VectorXd ac = u.head(d);
    for (int i = 0; i < mz; ++i) {
      const double x = u[d + i];
      for (int k = 0; k < d; ++k) J(i, k) = basis_eval(ks[static_cast<size_t>(k)], x, sine);
      J(i, d + i) = eval_coeffs_deriv(ks, sine, ac, x);
    }
    for (int k = 0; k < d; ++k) J(mz, k) = e[k];
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < mz; ++i) {
        const int prev = (i == 0) ? mz - 1 : i - 1;
        J(mz + 1 + k, d + i) =
            2.0 * sg[static_cast<size_t>(prev)] * basis_eval(ks[static_cast<size_t>(k)], u[d + i], sine);
      }
      J(mz + 1 + k, dim - 1) = -e[k];
    }
    const Eigen::VectorXd du = J.partialPivLu().solve(-F);
    double step = 1.0;
    for (int h = 0; h < 25; ++h) {
      const Eigen::VectorXd ut = u + step * du;
      const Eigen::VectorXd Ft = residual(ut);
      if (Ft.lpNorm<Eigen::Infinity>() < fn) {
        u = ut;
        F = Ft;
        fn = F.lpNorm<Eigen::Infinity>();
        break;
      }
      step *= 0.5;
      if (h == 24) iter = 50;  // stalled
    }
  }
  if (fn > fn_in) {
    u = u_in;
    fn = fn_in;
  }
  a = u.head(d);
  for (int i = 0; i < mz; ++i) zs[static_cast<size_t>(i)] = u[d + i];
  std::sort(zs.begin(), zs.end());
  *residual_out = fn;
}

double exact_l1(const std::vector<int>& ks, bool sine, const Eigen::VectorXd& a,
                const std::vector<double>& zs) {
  auto f = [&](double x) { return eval_coeffs(ks, sine, a, x); };
  if (zs.empty()) {
    // No sign change: |int T| = 2 pi |a_0| (zero for the sine basis).
    return (!sine && !ks.empty() && ks[0] == 0) ? kTwoPi * std::abs(a[0]) : 0.0;
  }
  auto anti = [&](double x) {
    double v = 0.0;
    for (size_t i = 0; i < ks.size(); ++i) v += a[static_cast<int>(i)] * basis_antideriv(ks[i], x, sine);
    return v;
  };
  const std::vector<int> sg = interval_signs(f, zs);
  const int mz = static_cast<int>(zs.size());
  double I = 0.0;
  for (int j = 0; j < mz; ++j) {
    const double lo = zs[static_cast<size_t>(j)];
    const double hi = (j + 1 < mz) ? zs[static_cast<size_t>(j + 1)] : zs[0] + kTwoPi;
    I += sg[static_cast<size_t>(j)] * (anti(hi) - anti(lo));
  }
  return std::abs(I);
}

}  // namespace

double derivative_at_zero_coeff(int k, int s, bool sine_basis) {
  if (k == 0) return (s == 0 && !sine_basis) ? 1.0 : 0.0;
  const double ks = std::pow(static_cast<double>(k), s);
  if (sine_basis) {
    if (s % 2 == 0) return 0.0;
    return (((s - 1) / 2) % 2 ? -1.0 : 1.0) * ks;
  }
  if (s % 2 == 1) return 0.0;
  return ((s / 2) % 2 ? -1.0 : 1.0) * ks;
}

TrigPoly ExtremalSolution::poly() const {
  if (n == 0) return TrigPoly::constant(cd(coeffs[0]));
  return poly_from_coeffs(n, sine_basis, coeffs);
}

ExtremalSolution solve_extremal(int n, int s, int M, double grid_shift) {
  if (n < 0 || s < 0) throw std::domain_error("solve_extremal: n, s must be nonnegative");
  if (n == 0 && s >= 1) throw std::domain_error("solve_extremal: infeasible, T^{(s)}(0)=0 for constants");
  ExtremalSolution sol;
  sol.n = n;
  sol.s = s;
  sol.sine_basis = (s % 2 == 1);
  if (n == 0) {
    sol.coeffs = Eigen::VectorXd::Ones(1);
    sol.l1_norm = kTwoPi;
    sol.constant = 1.0 / kTwoPi;
    sol.grid_M = 1;
    sol.solver_status = "closed-form";
    sol.lp_objective = kTwoPi;
    sol.quad_l1 = kTwoPi;
    return sol;
  }

  const bool sine = sol.sine_basis;
  const std::vector<int> ks = basis_indices(n, sine);
  const Eigen::VectorXd e_raw = constraint_vector(ks, s, sine);
  int pivot = 0;
  const double escale = e_raw.cwiseAbs().maxCoeff(&pivot);
  if (escale == 0.0) throw std::domain_error("solve_extremal: constraint vanishes on the basis");
  // Solve against the unit-scaled constraint (k^s reaches ~1e33 at n = 128,
  // s = 16, which would push the LP data below its absolute tolerances) and
  // undo the scaling on the coefficients at the end.
  const Eigen::VectorXd e = e_raw / escale;

  const int M0 = (M > 0) ? M : 64 * (n + 1);
  sol.grid_M = M0;
  std::vector<double> xs(static_cast<size_t>(M0));
  for (int j = 0; j < M0; ++j) xs[static_cast<size_t>(j)] = -kPi + kTwoPi * (j + grid_shift) / M0;

  LadOutcome lad = lad_solve(xs, ks, sine, e, pivot);
  sol.lp_objective = lad.objective;
  sol.lp_iterations = lad.iterations;
  sol.solver_status = lad.status;

  auto zero_find = [&](const Eigen::VectorXd& a) {
    auto f = [&](double x) { return eval_coeffs(ks, sine, a, x); };
    return sign_changes(f, std::max(4096, 64 * (n + 1)));
  };
  std::vector<double> zs = zero_find(lad.a);

  // Refined re-solve: base nodes plus clusters around the detected zeros.
  if (static_cast<int>(ks.size()) > 1 && !zs.empty()) {
    std::vector<double> xs2 = xs;
    const double cell = kTwoPi / M0;
    for (double z : zs) {
      for (int t = -8; t <= 8; ++t) {
        double x = z + t * cell / 8.0;
        while (x < -kPi) x += kTwoPi;
        while (x >= kPi) x -= kTwoPi;
        xs2.push_back(x);
      }
    }
    std::sort(xs2.begin(), xs2.end());
    xs2.erase(std::unique(xs2.begin(), xs2.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              xs2.end());
    const LadOutcome lad2 = lad_solve(xs2, ks, sine, e, pivot);
    lad = lad2;
    sol.lp_objective = lad2.objective;
    sol.lp_iterations += lad2.iterations;
    zs = zero_find(lad.a);
  }

  Eigen::VectorXd a = lad.a;
  newton_polish(ks, sine, e, a, zs, &sol.polish_residual);
  a /= e.dot(a);  // exact normalization against the scaled constraint
  zs = zero_find(a);

  sol.coeffs = a / escale;  // now T^{(s)}(0) = e_raw . coeffs = 1
  sol.zeros = zs;
  sol.l1_norm = exact_l1(ks, sine, a, zs) / escale;
  sol.constant = 1.0 / sol.l1_norm;
  sol.quad_l1 = quasinorm(poly_from_coeffs(n, sine, sol.coeffs), 1.0,
                          next_pow2(std::max(8 * M0, 2 * n + 2)));
  return sol;
}

double bn_constant_1_inf(int n, int s) { return solve_extremal(n, s).constant; }

double sign_identity_residual(const ExtremalSolution& sol, const TrigPoly& Q) {
  if (Q.degree() > sol.n) throw std::domain_error("sign_identity_residual: deg Q > n");
  const TrigPoly P = sol.poly();
  const cd q0 = (sol.s == 0) ? Q.eval(0.0) : weyl_derivative(Q, sol.s).eval(0.0);

  cd I(0.0);
  if (sol.zeros.empty()) {
    const double sg = (P.eval(0.0).real() < 0.0) ? -1.0 : 1.0;
    I = sg * kTwoPi * Q.coeff(0);
  } else {
    auto pf = [&](double x) { return P.eval(x).real(); };
    const std::vector<int> sg = interval_signs(pf, sol.zeros);
    auto anti = [&](double x) {
      cd v = Q.coeff(0) * x;
      for (int k = 1; k <= Q.degree(); ++k) {
        const cd ik(0.0, static_cast<double>(k));
        v += Q.coeff(k) * std::exp(ik * x) / ik - Q.coeff(-k) * std::exp(-ik * x) / ik;
      }
      return v;
    };
    const int mz = static_cast<int>(sol.zeros.size());
    for (int j = 0; j < mz; ++j) {
      const double lo = sol.zeros[static_cast<size_t>(j)];
      const double hi = (j + 1 < mz) ? sol.zeros[static_cast<size_t>(j + 1)] : sol.zeros[0] + kTwoPi;
      I += static_cast<double>(sg[static_cast<size_t>(j)]) * (anti(hi) - anti(lo));
    }
  }
  return std::abs(I - sol.l1_norm * q0);
}

std::vector<ZeroInfo> zeros_of_extremal(const ExtremalSolution& sol) {
  const TrigPoly P = sol.poly();
  auto f = [&](double x) { return P.eval(x).real(); };
  const std::vector<double> zs = sign_changes(f, 64 * (sol.n + 1));

  // P' for the simplicity check.
  std::vector<cd> dc(P.coeffs());
  for (int k = -P.degree(); k <= P.degree(); ++k) {
    dc[static_cast<size_t>(k + P.degree())] *= cd(0.0, static_cast<double>(k));
  }
  const TrigPoly Pd(std::move(dc));
  const double dsup = quasinorm(Pd, kInf, std::max(1024, next_pow2(16 * (sol.n + 1))));

  std::vector<ZeroInfo> out;
  for (double z : zs) {
    ZeroInfo zi;
    zi.x = z;
    zi.deriv = std::abs(Pd.eval(z).real());
    zi.simple = zi.deriv >= 1e-8 * dsup;
    out.push_back(zi);
  }
  return out;
}

namespace {

double dist_to_high_frequencies_on_grid(int n, int s, int N_trunc, int M, LpResult* res_out);

}  // namespace

double dist_to_high_frequencies(int n, int s, int N_trunc, int grid_M) {
  if (N_trunc <= n) throw std::domain_error("dist_to_high_frequencies: N_trunc must exceed n");
  const int M0 = (grid_M > 0) ? grid_M : std::max(2048, 16 * N_trunc);
  // Rare degenerate grids can cycle the simplex past its iteration budget;
  // re-posing the same Chebyshev problem on a slightly different grid breaks
  // the tie without changing the discretization quality.
  std::string status;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const int M = M0 + attempt * (M0 / 16 + 1);
    LpResult res;
    const double v = dist_to_high_frequencies_on_grid(n, s, N_trunc, M, &res);
    if (res.optimal) return v;
    status = res.status;
  }
  throw std::runtime_error("dist_to_high_frequencies: LP " + status);
}

namespace {

double dist_to_high_frequencies_on_grid(int n, int s, int N_trunc, int M, LpResult* res_out) {

  // h_{n,s}(x) = D_n^{(s)}(x)/(2 pi) = (1/(2 pi))(delta_{s0} + 2 sum k^s cos(kx + pi s/2)).
  std::vector<double> h(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    const double x = -kPi + kTwoPi * j / M;
    double v = (s == 0) ? 1.0 : 0.0;
    for (int k = 1; k <= n; ++k) v += 2.0 * std::pow(k, s) * std::cos(k * x + kPi * s / 2.0);
    h[static_cast<size_t>(j)] = v / kTwoPi;
  }

  // Chebyshev dual: max sum h_j (lam_j - mu_j) over lam, mu >= 0 with
  // sum (lam - mu) phi_b = 0 for every high-frequency basis function and
  // sum (lam + mu) = 1.
  const int nb = 2 * (N_trunc - n);
  LpProblem lp;
  lp.A.resize(nb + 1, 2 * M);
  lp.b = Eigen::VectorXd::Zero(nb + 1);
  lp.b[nb] = 1.0;
  lp.c.resize(2 * M);
  lp.upper = Eigen::VectorXd::Constant(2 * M, kInf);
  for (int j = 0; j < M; ++j) {
    const double x = -kPi + kTwoPi * j / M;
    int row = 0;
    for (int k = n + 1; k <= N_trunc; ++k) {
      lp.A(row, j) = std::cos(k * x);
      lp.A(row, M + j) = -std::cos(k * x);
      ++row;
      lp.A(row, j) = std::sin(k * x);
      lp.A(row, M + j) = -std::sin(k * x);
      ++row;
    }
    lp.A(nb, j) = 1.0;
    lp.A(nb, M + j) = 1.0;
    lp.c[j] = h[static_cast<size_t>(j)];
    lp.c[M + j] = -h[static_cast<size_t>(j)];
  }
  const LpResult res = solve_lp(lp);
  *res_out = res;
  return res.value;
}

}  // namespace

}  // namespace bn
