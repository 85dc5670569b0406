#include "bn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bn/concave.hpp"
#include "bn/extremal.hpp"
#include "bn/hardy.hpp"
#include "bn/kernels.hpp"
#include "bn/sharp.hpp"
#include "bn/trigpoly.hpp"
#include "bn/witnesses.hpp"

namespace bn {

namespace {

constexpr unsigned long long kSuiteSeed = 0x5eedULL;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

TrigPoly random_poly(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1);
  for (cd& x : c) x = cd(gauss(rng), gauss(rng));
  return TrigPoly(std::move(c));
}

void push(std::vector<CheckResult>& out, const std::string& name, bool pass,
          const std::string& observed) {
  out.push_back({name, pass, observed});
}

// ---------------------------------------------------------------- trig suite

std::vector<CheckResult> suite_trig() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(kSuiteSeed);

  {  // Parseval on random polynomials
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const int n = 1 + static_cast<int>(rng() % 64);
      const TrigPoly T = random_poly(n, rng);
      double s2 = 0.0;
      for (const cd& c : T.coeffs()) s2 += std::norm(c);
      const double qn = quasinorm(T, 2.0);
      worst = std::max(worst, std::abs(qn * qn / (kTwoPi * s2) - 1.0));
    }
    push(out, "parseval", worst <= 1e-9, "max rel err " + fmt(worst));
  }
  {  // Dirichlet closed-form norms
    double worst = 0.0;
    for (int n : {1, 2, 4, 8, 16, 32, 64}) {
      const TrigPoly D = dirichlet(n);
      worst = std::max(worst, std::abs(quasinorm(D, kInf) / (2.0 * n + 1.0) - 1.0));
      worst = std::max(worst, std::abs(quasinorm(D, 2.0) / std::sqrt(kTwoPi * (2 * n + 1)) - 1.0));
    }
    push(out, "dirichlet_norms", worst <= 1e-9, "max rel err " + fmt(worst));
  }
  {  // Weyl semigroup property
    const TrigPoly T = random_poly(12, rng);
    const TrigPoly A = weyl_derivative(weyl_derivative(T, 0.7), 1.3);
    const TrigPoly B = weyl_derivative(T, 2.0);
    double worst = 0.0;
    for (int k = -12; k <= 12; ++k) worst = std::max(worst, std::abs(A.coeff(k) - B.coeff(k)));
    push(out, "weyl_compose", worst <= 1e-9, "max coeff err " + fmt(worst));
  }
  {  // parity projection
    const TrigPoly T = random_poly(9, rng);
    const TrigPoly E = parity_project(T, Parity::Even);
    const TrigPoly E2 = parity_project(E, Parity::Even);
    double worst = 0.0;
    for (int k = -9; k <= 9; ++k) worst = std::max(worst, std::abs(E.coeff(k) - E2.coeff(k)));
    bool ok = worst <= 1e-12 && E.is_even();
    push(out, "parity_idempotent", ok, "max coeff err " + fmt(worst));
  }
  {  // normalized p-norm monotone in p
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
      const TrigPoly T = random_poly(8, rng);
      double prev = 0.0;
      for (double p : {0.5, 1.0, 2.0, 4.0}) {
        const double v = quasinorm(T, p) * std::pow(kTwoPi, -1.0 / p);
        ok = ok && v >= prev * (1.0 - 1e-9);
        prev = v;
      }
      ok = ok && quasinorm(T, kInf) >= prev * (1.0 - 1e-9);
    }
    push(out, "mean_norm_monotone", ok, ok ? "nondecreasing over p" : "violated");
  }
  {  // Bernstein inequality at p = q = inf
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const int n = 4 + static_cast<int>(rng() % 16);
      const TrigPoly T = random_poly(n, rng);
      worst = std::max(worst, quasinorm(weyl_derivative(T, 1.0), kInf) / (n * quasinorm(T, kInf)));
    }
    push(out, "bernstein_inf", worst <= 1.0 + 1e-6, "max ratio " + fmt(worst));
  }
  {  // Jackson plateau band across N
    bool ok = true;
    std::string obs;
    for (int r : {2, 3}) {
      double lo = kInf, hi = 0.0;
      for (int N : {8, 16, 32, 64}) {
        const double v = jackson_plateau_ratio(r, N, jackson_default_lambda(r));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      ok = ok && lo > 0.0 && hi / lo <= 4.0;
      obs += "r=" + std::to_string(r) + " band [" + fmt(lo) + "," + fmt(hi) + "] ";
    }
    push(out, "jackson_plateau", ok, obs);
  }
  {  // ||J_{r,N}||_p / N^{r-1/p} band (Hardy-Littlewood scaling)
    bool ok = true;
    std::string obs;
    for (auto [r, p] : {std::pair<int, double>{2, 1.0}, {3, 0.5}}) {
      double lo = kInf, hi = 0.0;
      for (int N : {8, 16, 32, 64}) {
        const TrigPoly J = jackson(r, N);
        const double v = quasinorm(J, p) / std::pow(N, r - 1.0 / p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      ok = ok && lo > 0.0 && hi / lo <= 4.0;
      obs += "r=" + std::to_string(r) + ",p=" + fmt(p) + " [" + fmt(lo) + "," + fmt(hi) + "] ";
    }
    push(out, "jackson_pnorm_band", ok, obs);
  }
  {  // derivative-of-Dirichlet envelope upper band
    double worst = 0.0;
    for (int n : {4, 16, 64}) {
      for (int s : {1, 4, 16}) {
        for (double r : {2.0, kInf}) {
          const double nrm = quasinorm(weyl_derivative(dirichlet(n), s), r);
          const double env =
              std::pow(n, s) * (1.0 + std::pow(static_cast<double>(n) / s,
                                               1.0 - (is_inf(r) ? 0.0 : 1.0 / r)));
          worst = std::max(worst, nrm / env);
        }
      }
    }
    push(out, "dirichlet_derivative_envelope", worst <= 10.0, "max ratio " + fmt(worst));
  }
  {  // pairing identity against grid quadrature
    const ConcaveSeq c = random_concave(16, rng);
    const TrigPoly T = build_poly(c);
    const TrigPoly Q = nikolskii_q(16);
    const int M = 4096;
    const auto tv = evaluate_grid(T, M);
    const auto qv = evaluate_grid(Q, M);
    double integral = 0.0;
    for (int j = 0; j < M; ++j) {
      integral += (tv[static_cast<size_t>(j)] * qv[static_cast<size_t>(j)]).real();
    }
    integral *= kTwoPi / M;
    std::vector<double> cc(c.values);
    const double exact = nikolskii_q_pairing(cc);
    const double err = std::abs(integral - exact) / std::max(1.0, std::abs(exact));
    push(out, "nikolskii_pairing", err <= 1e-8, "rel err " + fmt(err));
  }
  {  // Q_{2n+1} sup norm uniform in n
    double worst = 0.0;
    for (int n : {1, 2, 4, 8, 16, 32, 64, 128}) {
      worst = std::max(worst, quasinorm(nikolskii_q(n), kInf));
    }
    push(out, "nikolskii_q_bounded", worst <= 10.0, "max sup norm " + fmt(worst));
  }
  return out;
}

// -------------------------------------------------------------- entire suite

std::vector<CheckResult> suite_entire() {
  std::vector<CheckResult> out;

  {  // dilation identity for ||f||_p, computed two independent ways
    double worst = 0.0;
    const double p = 1.0;
    for (int s : {2, 4, 8}) {
      // direct xi-quadrature of |f(xi)| = |phi_hat(xi/s)|
      const double dxi = 0.0173 * s;
      double direct = 0.0;
      const double Xi = 24.0 * s;
      const int N = static_cast<int>(Xi / dxi);
      for (int i = -N; i <= N; ++i) {
        direct += std::pow(bump_profile(std::abs(i * dxi) / s), p) * dxi;
      }
      direct = std::pow(direct, 1.0 / p);
      double scaled = 0.0;
      {
        const double dh = 0.011;
        const int Nh = static_cast<int>(24.0 / dh);
        for (int i = -Nh; i <= Nh; ++i) scaled += std::pow(bump_profile(std::abs(i * dh)), p) * dh;
        scaled = std::pow(s, 1.0 / p) * std::pow(scaled, 1.0 / p);
      }
      worst = std::max(worst, std::abs(direct / scaled - 1.0));
    }
    push(out, "bump_scaling_identity", worst <= 1e-6, "max rel err " + fmt(worst));
  }
  {  // |f^{(s)}| stays away from zero on |xi| <= s
    double lo = kInf;
    for (int s : {2, 4, 8}) {
      for (double eta : {0.0, 0.5, 1.0}) lo = std::min(lo, bump_deriv_profile(s, eta));
    }
    push(out, "bump_derivative_floor", lo >= 0.1, "min spot value " + fmt(lo));
  }
  {  // normalized witness ratios stay positive
    double lo = kInf;
    for (int s : {2, 8}) {
      for (auto [p, q] : {std::pair<double, double>{1.0, kInf}, {1.0, 2.0}, {2.0, kInf}}) {
        lo = std::min(lo, entire_bump_witness(s, p, q).normalized);
      }
    }
    push(out, "bump_normalized_positive", lo > 1e-3, "min normalized " + fmt(lo));
  }
  {  // Plancherel-Polya: sampled p-sums comparable to the line norm
    bool ok = true;
    std::string obs;
    for (int s : {2, 4}) {
      const double p = 1.0;
      double sampled = 0.0;
      for (int m = -64 * s; m <= 64 * s; ++m) {
        sampled += std::pow(bump_profile(std::abs(kPi * m / s)), p);
      }
      sampled = std::pow(kPi * sampled, 1.0 / p);
      const RatioReport rep = entire_bump_witness(s, p, kInf);
      const double band = sampled / rep.denominator;
      ok = ok && band > 0.25 && band < 4.0;
      obs += "s=" + std::to_string(s) + " ratio " + fmt(band) + " ";
    }
    push(out, "plancherel_polya_band", ok, obs);
  }
  return out;
}

// ------------------------------------------------------------- concave suite

std::vector<CheckResult> suite_concave() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(kSuiteSeed + 1);

  {  // V_l elements are concave
    bool ok = true;
    for (int l = 0; l <= 16; ++l) ok = ok && is_concave(v_basis(16, l).values);
    push(out, "v_basis_concave", ok, ok ? "all l in 0..16" : "violation");
  }
  {  // decompose round-trip recovers generator weights
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      std::vector<double> w;
      const ConcaveSeq c = random_concave(24, rng, &w);
      const std::vector<double> g = decompose(c);
      for (size_t i = 0; i < w.size(); ++i) worst = std::max(worst, std::abs(g[i] - w[i]));
    }
    push(out, "decompose_roundtrip", worst <= 1e-10, "max weight err " + fmt(worst));
  }
  {  // closed form for the s-functional of V_l
    double worst = 0.0;
    for (int n : {4, 16, 64}) {
      for (int l = 0; l <= n; ++l) {
        worst = std::max(worst,
                         std::abs(s_functional(v_basis(n, l)) - v_weighted_sum_exact(n, l)));
      }
    }
    push(out, "v_weighted_sum_exact", worst <= 1e-12, "max err " + fmt(worst));
  }
  {  // L1 norm vs s-functional two-sided band
    double lo = kInf, hi = 0.0;
    for (int n : {8, 32, 128}) {
      for (int t = 0; t < 20; ++t) {
        const ConcaveSeq c = random_concave(n, rng, nullptr);
        const double v = quasinorm(build_poly(c), 1.0) / s_functional(c);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const double qbound = kPi / 7.0;  // pi / sup_n ||Q_{2n+1}||_inf, sup ~ 6.1
    const bool ok = hi / lo <= 20.0 && lo >= qbound;
    push(out, "l1_vs_s_functional", ok,
         "band [" + fmt(lo) + "," + fmt(hi) + "], pairing floor " + fmt(qbound));
  }
  {  // tail-sum + exact log integral controlled by the s-functional
    double worst = 0.0;
    for (int n : {8, 32, 128}) {
      for (int t = 0; t < 20; ++t) {
        const ConcaveSeq c = random_concave(n, rng, nullptr);
        worst = std::max(worst, tail_integral_lhs(c) / s_functional(c));
      }
    }
    push(out, "tail_integral_band", worst <= 10.0, "max ratio " + fmt(worst));
  }
  {  // coefficient-moment bound behind the concave envelope
    double worst = 0.0;
    for (int n : {4, 16, 64}) {
      for (int s : {4, 16, 64}) {
        for (int t = 0; t < 10; ++t) {
          const ConcaveSeq c = random_concave(n, rng, nullptr);
          double msum = 0.0;
          for (int k = 1; k <= n; ++k) {
            msum += std::pow(k, s) * c.values[static_cast<size_t>(k)];
          }
          const double env = (std::pow(n, s) + std::pow(n, s + 1.0) / (s + 1.0)) *
                             (1.0 / std::log(s + 2.0) + 1.0 / std::log(n + 2.0)) *
                             s_functional(c);
          worst = std::max(worst, msum / env);
        }
      }
    }
    push(out, "coefficient_moment_band", worst <= 5.0, "max ratio " + fmt(worst));
  }
  {  // pointwise tail bound
    double worst = 0.0;
    bool ok = true;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int n : {8, 32, 128}) {
      for (int t = 0; t < 25; ++t) {
        const ConcaveSeq c = random_concave(n, rng, nullptr);
        const double x = 1.0 / n + (kPi - 1.0 / n - 1e-9) * unif(rng);
        const TailBoundCheck tb = pointwise_tail_bound_check(c, x);
        ok = ok && tb.ok;
        worst = std::max(worst, tb.ratio);
      }
    }
    push(out, "pointwise_tail_bound", ok, "max ratio " + fmt(worst) + " (K=" + fmt(kTailBoundK) + ")");
  }
  {  // sup of H_{n,s} against the double-log envelope
    double worst = 0.0;
    for (int n : {1, 4, 16, 64}) {
      for (int s : {1, 4, 16, 64}) {
        worst = std::max(worst,
                         h_ns_sup(n, s) / (1.0 / std::log(s + 2.0) + 1.0 / std::log(n + 2.0)));
      }
    }
    push(out, "h_ns_sup_band", worst <= 5.0, "max ratio " + fmt(worst));
  }
  {  // concave witness normalized ratios over a small sweep
    double lo = kInf, hi = 0.0;
    for (int n : {4, 16, 64}) {
      for (int s : {4, 16, 64}) {
        const double v = concave_witness(n, s).normalized;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    push(out, "concave_witness_band", lo > 0.0 && hi / lo <= 50.0,
         "band [" + fmt(lo) + "," + fmt(hi) + "]");
  }
  return out;
}

// ------------------------------------------------------------ extremal suite

std::vector<CheckResult> suite_extremal() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(kSuiteSeed + 2);

  std::vector<ExtremalSolution> sols;
  for (int n = 1; n <= 6; ++n) {
    for (int s = 0; s <= 2; ++s) sols.push_back(solve_extremal(n, s));
  }

  {  // normalization P^{(s)}(0) = 1 read back off the polynomial
    double worst = 0.0;
    for (const auto& sol : sols) {
      const TrigPoly P = sol.poly();
      const cd v = (sol.s == 0) ? P.eval(0.0) : weyl_derivative(P, sol.s).eval(0.0);
      worst = std::max(worst, std::abs(v - cd(1.0)));
    }
    push(out, "extremal_normalization", worst <= 1e-9, "max |P^(s)(0)-1| " + fmt(worst));
  }
  {  // stationarity identity over the full monomial family
    double worst = 0.0;
    for (const auto& sol : sols) {
      for (int k = 0; k <= sol.n; ++k) {
        std::vector<cd> cc(2 * static_cast<size_t>(sol.n) + 1, cd(0.0));
        cc[static_cast<size_t>(sol.n + k)] = (k == 0) ? cd(1.0) : cd(0.5);
        if (k > 0) cc[static_cast<size_t>(sol.n - k)] = cd(0.5);
        worst = std::max(worst, sign_identity_residual(sol, TrigPoly(cc)) / sol.l1_norm);
        if (k > 0) {
          std::vector<cd> cs(2 * static_cast<size_t>(sol.n) + 1, cd(0.0));
          cs[static_cast<size_t>(sol.n + k)] = cd(0.0, -0.5);
          cs[static_cast<size_t>(sol.n - k)] = cd(0.0, 0.5);
          worst = std::max(worst, sign_identity_residual(sol, TrigPoly(cs)) / sol.l1_norm);
        }
      }
    }
    push(out, "sign_identity", worst <= 1e-6, "max rel residual " + fmt(worst));
  }
  {  // 2n simple zeros at s = 0
    bool ok = true;
    std::string obs;
    for (const auto& sol : sols) {
      if (sol.s != 0) continue;
      const auto zs = zeros_of_extremal(sol);
      bool simple = true;
      for (const auto& z : zs) simple = simple && z.simple;
      ok = ok && static_cast<int>(zs.size()) == 2 * sol.n && simple;
      obs += std::to_string(zs.size()) + "/" + std::to_string(2 * sol.n) + " ";
    }
    push(out, "zero_count_s0", ok, "counts " + obs);
  }
  {  // alternating-sum identity at the zeros (s = 0)
    double worst = 0.0;
    for (const auto& sol : sols) {
      if (sol.s != 0 || sol.n > 4) continue;
      const TrigPoly P = sol.poly();
      const double sp = (P.eval(kPi).real() < 0.0) ? -1.0 : 1.0;
      for (int k = 1; k <= sol.n; ++k) {
        double lhs = 0.0;
        for (size_t j = 0; j < sol.zeros.size(); ++j) {
          const double sgn = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^{k+1}, 1-based
          lhs += sgn * std::sin(k * sol.zeros[j]);
        }
        lhs *= 2.0 * sp;
        const double rhs = sol.l1_norm * k;  // (sin kx)'(0) = k
        worst = std::max(worst, std::abs(lhs - rhs) / sol.l1_norm);
      }
    }
    push(out, "alternating_zero_identity", worst <= 1e-6, "max rel residual " + fmt(worst));
  }
  {  // grid invariance: doubling and half-cell rotation
    double worst = 0.0;
    for (auto [n, s] : {std::pair{3, 0}, {4, 1}}) {
      const double a = solve_extremal(n, s).l1_norm;
      const double b = solve_extremal(n, s, 128 * (n + 1)).l1_norm;
      const double c = solve_extremal(n, s, 0, 0.5).l1_norm;
      worst = std::max({worst, std::abs(b / a - 1.0), std::abs(c / a - 1.0)});
    }
    push(out, "grid_invariance", worst <= 1e-6, "max rel change " + fmt(worst));
  }
  {  // duality sandwich at s = 0
    bool ok = true;
    std::string obs;
    for (int n : {1, 2}) {
      const double c = bn_constant_1_inf(n, 0);
      double best = 0.0;
      for (int t = 0; t < 100000; ++t) {
        const TrigPoly T = random_poly(n, rng);
        best = std::max(best, quasinorm(T, kInf, 256) / quasinorm(T, 1.0, 256));
      }
      const double d = dist_to_high_frequencies(n, 0, 8 * n);
      ok = ok && best <= c * (1.0 + 1e-2) && c <= d * (1.0 + 1e-9);
      obs += "n=" + std::to_string(n) + ": " + fmt(best) + " <= " + fmt(c) + " <= " + fmt(d) + " ";
    }
    push(out, "duality_sandwich", ok, obs);
  }
  {  // constant dominates the exponential witness
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      for (int s = 0; s <= 2; ++s) {
        const double c = bn_constant_1_inf(n, s);
        const double w = std::pow(n, s) / kTwoPi;  // e^{inx} ratio at (1, inf)
        ok = ok && c >= w * (1.0 - 1e-9);
      }
    }
    push(out, "witness_domination", ok, ok ? "constant >= e^{inx} ratio" : "violated");
  }
  return out;
}

// --------------------------------------------------------------- hardy suite

std::vector<CheckResult> suite_hardy() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(kSuiteSeed + 3);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto random_seq = [&](int len) {
    DiscreteSeq a;
    a.offset = -(len / 2);
    a.values.resize(static_cast<size_t>(len));
    for (cd& v : a.values) v = cd(gauss(rng), gauss(rng));
    return a;
  };

  {  // sinc interpolation property
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const DiscreteSeq a = random_seq(9);
      const SincSynthesis f = synthesize_f_a(a);
      for (int m = a.lo() - 2; m <= a.hi() + 2; ++m) {
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(f.eval(kPi * m) - sgn * a.at(m)));
      }
    }
    push(out, "sinc_interpolation", worst <= 1e-10, "max err " + fmt(worst));
  }
  {  // divergence decisions on the worked delta examples
    DiscreteSeq d0{0, {cd(1.0)}};
    DiscreteSeq d01{0, {cd(1.0), cd(-1.0)}};
    const bool a = !hp_quasinorm(d0, 1.0).finite;
    const bool b = hp_quasinorm(d01, 1.0).finite;
    const bool c = !hp_quasinorm(d01, 0.5).finite;
    push(out, "hp_divergence_decisions", a && b && c,
         std::string(a ? "inf" : "fin") + "/" + (b ? "fin" : "inf") + "/" + (c ? "inf" : "fin"));
  }
  {  // half-integer samples give the shifted transform
    double worst = 0.0;
    const DiscreteSeq a = random_seq(7);
    const SincSynthesis f = synthesize_f_a(a);
    for (int m = -10; m <= 10; ++m) {
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const cd lhs = f.eval(kPi * (m + 0.5));
      const cd rhs = sgn / kPi * hilbert_at(a, m, OffsetKind::Half);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    push(out, "half_sample_identity", worst <= 1e-9, "max err " + fmt(worst));
  }
  {  // binomial recentring of moments
    const DiscreteSeq a = random_seq(6);
    DiscreteSeq b = a;
    b.offset += 3;  // same values listed at k+3
    const auto ma = moments(a, 4);
    const auto mb = moments(b, 4);
    double worst = 0.0;
    for (int j = 0; j <= 4; ++j) {
      cd expect(0.0);
      double binom = 1.0;
      for (int i = 0; i <= j; ++i) {
        expect += binom * std::pow(3.0, j - i) * ma[static_cast<size_t>(i)];
        binom = binom * (j - i) / (i + 1.0);
      }
      worst = std::max(worst, std::abs(mb[static_cast<size_t>(j)] - expect));
    }
    push(out, "moment_recentring", worst <= 1e-8, "max err " + fmt(worst));
  }
  {  // atom bands per p
    bool ok = true;
    std::string obs;
    for (double p : {1.0 / 3.0, 0.5, 1.0}) {
      double cp = 0.0, chc = 0.0, plo = kInf, phi = 0.0;
      for (int t = 0; t < 30; ++t) {
        double lo = 0.0, hi = 0.0;
        const DiscreteSeq a = random_atom(p, 24, rng, &lo, &hi);
        const AtomCertificate cert = validate_atom(a, lo, hi, p);
        ok = ok && cert.valid;
        const HpNorm hint = hp_quasinorm(a, p, OffsetKind::Integer, 2000);
        const HpNorm hhalf = hp_quasinorm(a, p, OffsetKind::Half, 2000);
        ok = ok && hint.finite && hhalf.finite;
        if (!hint.finite || !hhalf.finite) continue;
        cp = std::max(cp, hint.ell_p);
        chc = std::max(chc, hhalf.transform_p);
        const double band = hhalf.value / hint.value;
        plo = std::min(plo, band);
        phi = std::max(phi, band);
      }
      ok = ok && plo > 0.05 && phi < 20.0;
      obs += "p=" + fmt(p) + ": ell_p<=" + fmt(cp) + " Hc<=" + fmt(chc) + " equiv[" + fmt(plo) +
             "," + fmt(phi) + "] ";
    }
    push(out, "atom_bands", ok, obs);
  }
  {  // window-doubling stability of the quasinorm tail model
    double lo1 = 0.0, hi1 = 0.0;
    const DiscreteSeq a = random_atom(0.5, 12, rng, &lo1, &hi1);
    const HpNorm w1 = hp_quasinorm(a, 0.5, OffsetKind::Integer, 5000);
    const HpNorm w2 = hp_quasinorm(a, 0.5, OffsetKind::Integer, 10000);
    const double rel = std::abs(w1.value / w2.value - 1.0);
    push(out, "window_doubling", w1.finite && w2.finite && rel <= 1e-5, "rel change " + fmt(rel));
  }
  {  // Fourier moment of atoms decays like s^{-1/p}
    bool ok = true;
    std::string obs;
    {
      DiscreteSeq a{0, {cd(0.5), cd(-0.5)}};
      double worst = 0.0;
      for (int s : {1, 5, 10, 20, 40}) {
        worst = std::max(worst, atom_fourier_moment(a, 0.0, 1.0, s, 1.0) * s);
      }
      ok = ok && worst < 20.0;
      obs += "p=1: max value*s " + fmt(worst) + " ";
    }
    {
      double lo = 0.0, hi = 0.0;
      std::mt19937_64 rng2(kSuiteSeed + 9);
      const DiscreteSeq a = random_atom(0.5, 6, rng2, &lo, &hi);
      double worst = 0.0;
      for (int s : {1, 5, 10, 20, 40}) {
        worst = std::max(worst, atom_fourier_moment(a, lo, hi, s, 0.5) * s * s);
      }
      ok = ok && worst < 50.0;
      obs += "p=1/2: max value*s^2 " + fmt(worst);
    }
    push(out, "atom_fourier_moment_decay", ok, obs);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite) {
  if (suite == "trig") return suite_trig();
  if (suite == "entire") return suite_entire();
  if (suite == "concave") return suite_concave();
  if (suite == "extremal") return suite_extremal();
  if (suite == "hardy") return suite_hardy();
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"trig", "entire", "concave", "extremal", "hardy"}) {
      auto part = verify_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::domain_error("verify_suite: unknown suite '" + suite + "'");
}

}  // namespace bn
