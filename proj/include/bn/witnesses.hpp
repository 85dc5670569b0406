#pragma once

#include "bn/trigpoly.hpp"

namespace bn {

enum class WitnessId { exponential, modulated_jackson, concave_tnl, entire_bump };

const char* witness_name(WitnessId id);

struct RatioReport {
  WitnessId id = WitnessId::exponential;
  int n = 0;  // 0 for entire-function witnesses
  double s = 0.0;
  double p = 0.0, q = kInf;
  double numerator = 0.0;    // ||.^{(s)}||_q
  double denominator = 0.0;  // ||.||_p
  double ratio = 0.0;
  double normalized = 0.0;   // ratio / envelope
  int grid_num = 0, grid_den = 0;
  // Witness-specific parameters.
  int jackson_r = 0, jackson_N = 0;
  int concave_l = 0;
  bool bernstein_reduced = false;  // odd-s concave reduction in effect
};

/// Reference envelope per witness family: n^s (1 + (n/s)^{1/p-1/q}) for the
/// trig witnesses, (n^s + n^{s+1}/(s+1))(1/log(s+2) + 1/log(n+2)) for the
/// concave one, s^{1/q-1/p} for the entire one.
double envelope(WitnessId id, int n, double s, double p, double q);

double normalize_ratio(const RatioReport& report);

/// T = e^{inx}; ratio n^s (2 pi)^{1/q-1/p} in closed form.
RatioReport exponential_witness(int n, double s, double p, double q);

/// Smallest r with p*r > 1.
int jackson_r_for(double p);

/// T = J_{r,N} e^{i(n-rN)x} with N = floor(n/(r s)). Requires n > 4 r s
/// (otherwise the exponential witness already settles the range) and s >= 2.
/// grid_override > 0 replaces the default quadrature grid for both norms.
RatioReport modulated_jackson_witness(int n, int s, double p, double q, int grid_override = 0);

/// T_{n,l} for the V_l basis sequence, p = 1, q = inf. Even s: sup norm of the
/// derivative read off at 0. Odd s: the even-(s+1) ratio divided by n.
RatioReport concave_witness(int n, int s, int grid_override = 0);

struct BumpQuadOptions {
  int support_points = 2048;   // Simpson panels on the bump support
  double eta_step = 0.01;      // frequency-variable step (after /s rescale)
  double eta_max = 8.0;        // initial truncation, doubled until converged
  double tail_tol = 1e-9;      // relative norm increment accepted at doubling
  int max_doublings = 8;
};

/// f = Fourier transform of phi_s, phi_s(x) = s phi(sx - s + 1); reduces to
/// the profiles |phi_hat(xi/s)| and |g_s(xi/s)| so all norms are 1-D scans.
RatioReport entire_bump_witness(int s, double p, double q, BumpQuadOptions quad = {});

/// |phi_hat(eta)| for the plateau bump phi (1 on |x| <= 1/2, support [-1,1]).
double bump_profile(double eta, int support_points = 2048);

/// |g_s(eta)|, g_s(eta) = int phi(u) ((u+s-1)/s)^s e^{-i u eta} du, so that
/// |f^{(s)}(xi)| = |g_s(xi/s)|.
double bump_deriv_profile(int s, double eta, int support_points = 2048);

/// The bump itself (explicit plateau construction).
double bump_phi(double x);

}  // namespace bn
