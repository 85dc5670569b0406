#pragma once

#include <random>

#include "bn/trigpoly.hpp"

namespace bn {

/// Nonnegative, nonincreasing sequence c_0..c_n with nondecreasing
/// differences Delta c_j = c_j - c_{j+1} (c_{n+1} := 0).
struct ConcaveSeq {
  int n = 0;
  std::vector<double> values;  // size n+1
};

/// Exact check of both invariant chains. Empty input is a domain error.
bool is_concave(const std::vector<double>& c);

/// Validates a floating sequence with slack 1e-12 and snaps tiny violations,
/// then wraps it. Throws on genuine violations.
ConcaveSeq make_concave(std::vector<double> c);

/// Basis element v_l(k) = min{1-(k-1)/n, 1-(l-1)/n}, 0 <= l, k <= n.
ConcaveSeq v_basis(int n, int l);

/// Nonnegative weights g with c = sum_l g_l V_l:
/// g_0 = n*Delta c_0, g_l = n*(Delta c_l - Delta c_{l-1}).
std::vector<double> decompose(const ConcaveSeq& c);

/// sum_{k=0}^n c_k / (n-k+1).
double s_functional(const ConcaveSeq& c);

/// Closed form for s_functional(v_basis(n, l)):
/// (1-(l-1)/n)(sum_{m=n-l+1}^{n+1} 1/m + 1) - 1/n.
double v_weighted_sum_exact(int n, int l);

/// sup over tau in [0,1] of H_{n,s}(tau) = tau^{s+1}/(1 - log(1+1/n-tau)),
/// dense grid plus geometric refinement of the top decile.
double h_ns_sup(int n, int s);

/// Cosine-series polynomial c_0 + sum_{k=1}^n 2 c_k cos kx  (c_{+-k} = c_k).
TrigPoly build_poly(const ConcaveSeq& c);

struct TailBoundCheck {
  bool ok = false;
  double ratio = 0.0;  // |T(x)| * x / c_{n - floor(1/x + 1)}
};

/// Module-wide recorded constant for the pointwise tail bound.
inline constexpr double kTailBoundK = 8.0;

/// Checks |T(x)| <= K * x^{-1} * c_{n-floor(1/x+1)} against the recorded K.
TailBoundCheck pointwise_tail_bound_check(const ConcaveSeq& c, double x, double K = kTailBoundK);

/// Left-hand side of the Lemma-4.3-style comparison,
/// (1/n) sum c_k + integral_{1/n}^pi x^{-1} c_{n-floor(1/x+1)} dx,
/// with the integral evaluated exactly over the breakpoints of the index.
double tail_integral_lhs(const ConcaveSeq& c);

/// Random nonnegative combination of V_l basis elements; also returns the
/// generator weights when `weights_out` is non-null.
ConcaveSeq random_concave(int n, std::mt19937_64& rng, std::vector<double>* weights_out = nullptr);

}  // namespace bn
