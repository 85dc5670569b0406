#pragma once

#include <Eigen/Dense>

#include "bn/trigpoly.hpp"

namespace bn {

/// Minimizer of ||T||_1* over degree-n polynomials with T^{(s)}(0) = 1,
/// after parity reduction (cosine basis for even s, sine basis for odd s).
struct ExtremalSolution {
  int n = 0;
  int s = 0;
  bool sine_basis = false;     // odd s
  Eigen::VectorXd coeffs;      // a_0..a_n (cosine) or a_1..a_n (sine)
  double l1_norm = 0.0;        // exact piecewise integral of |P|
  double constant = 0.0;       // 1 / l1_norm
  std::vector<double> zeros;   // sorted sign changes in [-pi, pi)
  int grid_M = 0;
  std::string solver_status;
  double lp_objective = 0.0;   // discrete LP optimum (diagnostic)
  double quad_l1 = 0.0;        // trapezoid quasinorm at 8x grid (diagnostic)
  double polish_residual = 0.0;  // max stationarity residual after Newton
  int lp_iterations = 0;

  TrigPoly poly() const;
};

/// Constraint coefficient of the k-th parity basis function in T^{(s)}(0):
/// k^s cos(pi s/2) for cos kx, k^s sin(pi s/2) for sin kx.
double derivative_at_zero_coeff(int k, int s, bool sine_basis);

/// LP solve (weighted least-absolute-deviations dual) on M grid nodes,
/// refined near the detected zeros and polished by Newton on the exact
/// stationarity system. M = 0 picks 64(n+1); grid_shift rotates the base
/// grid by that fraction of a cell.
ExtremalSolution solve_extremal(int n, int s, int M = 0, double grid_shift = 0.0);

/// 1 / ||P_n||_1*.
double bn_constant_1_inf(int n, int s);

/// | integral sign(P_n) Q - ||P_n||_1* Q^{(s)}(0) |, piecewise closed-form
/// integration of Q between consecutive zeros of P_n.
double sign_identity_residual(const ExtremalSolution& sol, const TrigPoly& Q);

struct ZeroInfo {
  double x = 0.0;
  double deriv = 0.0;  // |P'(x)|
  bool simple = false;
};

/// Sign changes on a 64(n+1) grid, bisected to 1e-12; simplicity means
/// |P'(alpha)| >= 1e-8 ||P'||_inf.
std::vector<ZeroInfo> zeros_of_extremal(const ExtremalSolution& sol);

/// min over g in span{e^{ikx}: n < |k| <= N_trunc} of ||h_{n,s} - g||_inf,
/// h_{n,s} = D_n^{(s)}/(2 pi), by a Chebyshev LP dual on a dense grid.
double dist_to_high_frequencies(int n, int s, int N_trunc, int grid_M = 0);

}  // namespace bn
