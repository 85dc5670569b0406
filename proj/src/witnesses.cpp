#include "bn/witnesses.hpp"

#include <cmath>
#include <functional>

#include "bn/concave.hpp"
#include "bn/kernels.hpp"

namespace bn {

namespace {

double inv_or_zero(double p) { return is_inf(p) ? 0.0 : 1.0 / p; }

// Composite Simpson of f on [a, b] with an even panel count.
template <typename F>
auto simpson(F f, double a, double b, int N) {
  if (N % 2) ++N;
  const double h = (b - a) / N;
  auto acc = f(a) + f(b);
  for (int i = 1; i < N; ++i) acc += ((i % 2) ? 4.0 : 2.0) * f(a + h * i);
  return acc * (h / 3.0);
}

}  // namespace

const char* witness_name(WitnessId id) {
  switch (id) {
    case WitnessId::exponential: return "exponential";
    case WitnessId::modulated_jackson: return "modulated_jackson";
    case WitnessId::concave_tnl: return "concave_tnl";
    case WitnessId::entire_bump: return "entire_bump";
  }
  return "?";
}

double envelope(WitnessId id, int n, double s, double p, double q) {
  const double e = inv_or_zero(p) - inv_or_zero(q);
  switch (id) {
    case WitnessId::exponential:
    case WitnessId::modulated_jackson:
      return std::pow(n, s) * (1.0 + std::pow(n / s, e));
    case WitnessId::concave_tnl:
      return (std::pow(n, s) + std::pow(n, s + 1.0) / (s + 1.0)) *
             (1.0 / std::log(s + 2.0) + 1.0 / std::log(n + 2.0));
    case WitnessId::entire_bump:
      return std::pow(s, -e);
  }
  throw std::domain_error("envelope: unknown witness");
}

double normalize_ratio(const RatioReport& report) {
  return report.ratio / envelope(report.id, report.n, report.s, report.p, report.q);
}

RatioReport exponential_witness(int n, double s, double p, double q) {
  if (n < 1) throw std::domain_error("exponential_witness: n >= 1");
  RatioReport r;
  r.id = WitnessId::exponential;
  r.n = n;
  r.s = s;
  r.p = p;
  r.q = q;
  r.numerator = std::pow(n, s) * std::pow(kTwoPi, inv_or_zero(q));
  r.denominator = std::pow(kTwoPi, inv_or_zero(p));
  r.ratio = r.numerator / r.denominator;
  r.normalized = normalize_ratio(r);
  return r;
}

int jackson_r_for(double p) {
  if (!(p > 0.0)) throw std::domain_error("jackson_r_for: p > 0");
  return static_cast<int>(std::floor(1.0 / p)) + 1;
}

RatioReport modulated_jackson_witness(int n, int s, double p, double q, int grid_override) {
  if (s < 2) throw std::domain_error("modulated_jackson_witness: s >= 2");
  const int r = jackson_r_for(p);
  if (n <= 4 * r * s) {
    throw std::domain_error(
        "modulated_jackson_witness: n <= 4rs, the exponential witness covers this range");
  }
  const int N = n / (r * s);
  const TrigPoly J = jackson(r, N);

  // T = J_{r,N} e^{i(n-rN)x}: shift the coefficient window by n - rN.
  const int shift = n - r * N;
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1, cd(0.0));
  for (int k = -r * N; k <= r * N; ++k) {
    c[static_cast<size_t>(k + shift + n)] = J.coeff(k);
  }
  const TrigPoly T(std::move(c));

  RatioReport rep;
  rep.id = WitnessId::modulated_jackson;
  rep.n = n;
  rep.s = s;
  rep.p = p;
  rep.q = q;
  rep.jackson_r = r;
  rep.jackson_N = N;
  rep.grid_num = grid_override > 0 ? grid_override : default_grid(n, q);
  rep.grid_den = grid_override > 0 ? grid_override : default_grid(n, p);
  rep.numerator = quasinorm(weyl_derivative(T, s), q, rep.grid_num);
  rep.denominator = quasinorm(T, p, rep.grid_den);
  rep.ratio = rep.numerator / rep.denominator;
  rep.normalized = normalize_ratio(rep);
  return rep;
}

RatioReport concave_witness(int n, int s, int grid_override) {
  if (n < 1 || s < 1) throw std::domain_error("concave_witness: n, s >= 1");
  const bool odd = (s % 2 == 1);
  const int se = odd ? s + 1 : s;  // even derivative order actually evaluated
  const int l = (n <= se) ? n : 1 + static_cast<int>(std::floor(n * (1.0 - 1.0 / se)));
  const ConcaveSeq v = v_basis(n, l);
  const TrigPoly T = build_poly(v);

  RatioReport rep;
  rep.id = WitnessId::concave_tnl;
  rep.n = n;
  rep.s = s;
  rep.p = 1.0;
  rep.q = kInf;
  rep.concave_l = l;
  rep.bernstein_reduced = odd;

  // Nonnegative coefficients: ||T^{(se)}||_inf is attained at 0.
  double num = 0.0;
  for (int k = 1; k <= n; ++k) num += 2.0 * std::pow(k, se) * v.values[static_cast<size_t>(k)];
  rep.grid_den = grid_override > 0 ? grid_override : default_grid(n, 1.0);
  rep.denominator = quasinorm(T, 1.0, rep.grid_den);
  rep.numerator = odd ? num / n : num;  // Bernstein: ||T^{(s+1)}|| <= n ||T^{(s)}||
  rep.ratio = rep.numerator / rep.denominator;
  rep.normalized = normalize_ratio(rep);
  return rep;
}

double bump_phi(double x) {
  auto psi = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = 2.0 * (1.0 - std::abs(x));
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = psi(t), b = psi(1.0 - t);
  return a / (a + b);
}

double bump_profile(double eta, int support_points) {
  // phi even: phi_hat(eta) = 2 int_0^1 phi(u) cos(u eta) du.
  return std::abs(2.0 * simpson([&](double u) { return bump_phi(u) * std::cos(u * eta); }, 0.0,
                                1.0, support_points));
}

double bump_deriv_profile(int s, double eta, int support_points) {
  const cd I = simpson(
      [&](double u) {
        const double w = std::pow((u + s - 1.0) / s, s);
        return bump_phi(u) * w * std::polar(1.0, -u * eta);
      },
      -1.0, 1.0, support_points);
  return std::abs(I);
}

namespace {

// (int_R prof(|eta|)^p d eta)^{1/p} with truncation doubling; profiles are
// even so the scan runs over eta >= 0. Returns the node count via *nodes.
double profile_norm(const std::function<double(double)>& prof, double p,
                    const BumpQuadOptions& quad, int* nodes) {
  const double h = quad.eta_step;
  double H = quad.eta_max;
  auto segment = [&](double lo, double hi) {
    // trapezoid; the profile decays superpolynomially so this is spectral-ish
    const int N = static_cast<int>(std::ceil((hi - lo) / h));
    const double hh = (hi - lo) / N;
    double acc = 0.0;
    for (int i = 0; i <= N; ++i) {
      const double w = (i == 0 || i == N) ? 0.5 : 1.0;
      acc += w * std::pow(prof(lo + hh * i), p);
    }
    *nodes += N + 1;
    return acc * hh;
  };
  double total = segment(0.0, H);
  for (int d = 0;; ++d) {
    if (d >= quad.max_doublings) {
      throw std::runtime_error("entire_bump_witness: frequency truncation did not converge");
    }
    const double inc = segment(H, 2.0 * H);
    H *= 2.0;
    total += inc;
    if (inc <= quad.tail_tol * total) break;
  }
  return std::pow(2.0 * total, 1.0 / p);
}

double profile_sup(const std::function<double(double)>& prof, const BumpQuadOptions& quad,
                   int* nodes) {
  double best = 0.0, arg = 0.0;
  const int N = static_cast<int>(std::ceil(quad.eta_max / quad.eta_step));
  for (int i = 0; i <= N; ++i) {
    const double v = prof(i * quad.eta_step);
    if (v > best) {
      best = v;
      arg = i * quad.eta_step;
    }
  }
  *nodes += N + 1;
  for (int i = -100; i <= 100; ++i) {
    const double x = arg + i * quad.eta_step / 100.0;
    if (x >= 0.0) best = std::max(best, prof(x));
  }
  *nodes += 201;
  return best;
}

}  // namespace

RatioReport entire_bump_witness(int s, double p, double q, BumpQuadOptions quad) {
  if (s < 2) throw std::domain_error("entire_bump_witness: s >= 2");
  if (!(p < q)) throw std::domain_error("entire_bump_witness: p < q");
  RatioReport rep;
  rep.id = WitnessId::entire_bump;
  rep.n = 0;
  rep.s = s;
  rep.p = p;
  rep.q = q;

  auto A = [&](double eta) { return bump_profile(eta, quad.support_points); };
  auto B = [&](double eta) { return bump_deriv_profile(s, eta, quad.support_points); };

  // |f(xi)| = |phi_hat(xi/s)| gives ||f||_p = s^{1/p} ||phi_hat||_p (the exact
  // dilation identity); likewise ||f^{(s)}||_q = s^{1/q} ||g_s||_q.
  rep.denominator = std::pow(s, 1.0 / p) * profile_norm(A, p, quad, &rep.grid_den);
  if (is_inf(q)) {
    rep.numerator = profile_sup(B, quad, &rep.grid_num);
  } else {
    rep.numerator = std::pow(s, 1.0 / q) * profile_norm(B, q, quad, &rep.grid_num);
  }
  rep.ratio = rep.numerator / rep.denominator;
  rep.normalized = normalize_ratio(rep);
  return rep;
}

}  // namespace bn
