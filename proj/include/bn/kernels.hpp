#pragma once

#include "bn/trigpoly.hpp"

namespace bn {

/// Dirichlet kernel D_n: c_k = 1 for |k| <= n.
TrigPoly dirichlet(int n);

/// Jackson kernel J_{r,N}(x) = (sin((N+1/2)x)/sin(x/2))^r of degree rN.
/// Coefficients are the r-fold convolution of the all-ones window, computed
/// in integer arithmetic before conversion to double.
TrigPoly jackson(int r, int N);

/// min_{|m| <= floor(lambda*N)} J^hat_{r,N}(m) / N^{r-1}.
double jackson_plateau_ratio(int r, int N, double lambda);

/// Default plateau width lambda(r) = 1/(2r).
inline double jackson_default_lambda(int r) { return 1.0 / (2.0 * r); }

/// The uniformly bounded polynomial Q_{2n+1} used in the Hardy-type lower
/// bound for L1 norms of cosine series:
///   Q_{2n+1}(x) = 1/(2(n+1)) + sum_{k=1}^n cos(kx)/(n-k+1)
///                            - sum_{k=1}^n cos((k+n+1)x)/k.
TrigPoly nikolskii_q(int n);

/// Exact coefficient-space pairing: for T = c_0 + 2 sum c_k cos kx of degree n,
///   integral T * Q_{2n+1} = pi * (c_0/(n+1) + 2 sum_{k=1}^n c_k/(n-k+1)).
double nikolskii_q_pairing(const std::vector<double>& c);

/// Hardy-Littlewood norm proxy for a nonincreasing nonnegative cosine
/// coefficient sequence: (sum_k a_k^p (1+k)^{p-2})^{1/p}.
double hl_norm_proxy(const std::vector<double>& a, double p);

}  // namespace bn
