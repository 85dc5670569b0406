#pragma once

#include <Eigen/Dense>
#include <string>

namespace bn {

/// Dense bounded-variable LP:  maximize c'x  s.t.  A x = b,  0 <= x <= upper
/// (upper may be +inf). Two-phase primal simplex with Bland anti-cycling
/// fallback; intended for problems with few rows and many columns.
struct LpProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  Eigen::VectorXd upper;
};

struct LpResult {
  bool optimal = false;
  std::string status;  // "optimal", "infeasible", "unbounded", "iteration-limit"
  double value = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd dual;  // row multipliers pi = c_B B^{-1}
  int iterations = 0;
};

LpResult solve_lp(const LpProblem& p, int max_iters = 200000);

}  // namespace bn
