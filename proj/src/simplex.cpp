#include "bn/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bn {

namespace {

constexpr double kTol = 1e-9;
constexpr double kInfD = std::numeric_limits<double>::infinity();

enum class VarState { Basic, AtLower, AtUpper };

struct Tableau {
  Eigen::MatrixXd A;       // m x (n + m), artificials appended
  Eigen::VectorXd b;       // >= 0 after row flips
  Eigen::VectorXd upper;   // bounds incl. artificials
  Eigen::VectorXd cost;    // current-phase objective (maximize)
  std::vector<int> basis;  // row -> column
  std::vector<VarState> state;
  Eigen::VectorXd x;
  int m = 0, n_orig = 0;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  void refactor() {
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = A.col(basis[static_cast<size_t>(i)]);
    lu.compute(B);
  }

  void recompute_basic_values() {
    Eigen::VectorXd rhs = b;
    for (int j = 0; j < A.cols(); ++j) {
      if (state[static_cast<size_t>(j)] == VarState::AtUpper) rhs -= A.col(j) * upper[j];
    }
    const Eigen::VectorXd xb = lu.solve(rhs);
    for (int i = 0; i < m; ++i) x[basis[static_cast<size_t>(i)]] = xb[i];
  }
};

// One simplex phase; returns status string.
std::string run_phase(Tableau& t, int max_iters, int* iters_used) {
  const int ncols = static_cast<int>(t.A.cols());
  int degenerate_streak = 0;
  for (int iter = 0; iter < max_iters; ++iter) {
    t.refactor();
    t.recompute_basic_values();
    Eigen::VectorXd cb(t.m);
    for (int i = 0; i < t.m; ++i) cb[i] = t.cost[t.basis[static_cast<size_t>(i)]];
    const Eigen::VectorXd pi = t.lu.transpose().solve(cb);

    const bool bland = degenerate_streak > 40;
    int enter = -1;
    double enter_sign = 0.0, best = kTol;
    for (int j = 0; j < ncols; ++j) {
      if (t.state[static_cast<size_t>(j)] == VarState::Basic) continue;
      if (t.upper[j] <= 0.0 && t.state[static_cast<size_t>(j)] == VarState::AtLower) continue;  // fixed
      const double d = t.cost[j] - pi.dot(t.A.col(j));
      double gain = 0.0, sign = 0.0;
      if (t.state[static_cast<size_t>(j)] == VarState::AtLower && d > kTol) {
        gain = d;
        sign = 1.0;
      } else if (t.state[static_cast<size_t>(j)] == VarState::AtUpper && d < -kTol) {
        gain = -d;
        sign = -1.0;
      }
      if (gain > best) {
        best = gain;
        enter = j;
        enter_sign = sign;
        if (bland) break;  // first eligible index
      }
    }
    if (enter < 0) {
      *iters_used += iter;
      return "optimal";
    }

    const Eigen::VectorXd y = t.lu.solve(t.A.col(enter));
    double t_max = t.upper[enter];  // bound-flip limit
    int leave_row = -1;
    bool leave_to_upper = false;
    // Ties broken toward the smallest basis index (Bland) to stop cycling.
    auto consider = [&](int i, double lim, bool to_upper) {
      const bool better = lim < t_max - 1e-12;
      const bool tie = !better && lim < t_max + 1e-12 && leave_row >= 0 &&
                       t.basis[static_cast<size_t>(i)] < t.basis[static_cast<size_t>(leave_row)];
      if (better || tie) {
        t_max = std::min(t_max, lim);
        leave_row = i;
        leave_to_upper = to_upper;
      }
    };
    for (int i = 0; i < t.m; ++i) {
      const int bj = t.basis[static_cast<size_t>(i)];
      const double yi = enter_sign * y[i];
      if (yi > kTol) {
        consider(i, std::max(0.0, t.x[bj]) / yi, false);
      } else if (yi < -kTol && std::isfinite(t.upper[bj])) {
        consider(i, std::max(0.0, t.upper[bj] - t.x[bj]) / (-yi), true);
      }
    }
    if (!std::isfinite(t_max)) {
      *iters_used += iter;
      return "unbounded";
    }
    degenerate_streak = (t_max < 1e-11) ? degenerate_streak + 1 : 0;

    if (leave_row < 0) {
      // Bound flip: entering variable runs to its other bound.
      t.state[static_cast<size_t>(enter)] =
          (enter_sign > 0.0) ? VarState::AtUpper : VarState::AtLower;
      t.x[enter] = (enter_sign > 0.0) ? t.upper[enter] : 0.0;
    } else {
      const int leave = t.basis[static_cast<size_t>(leave_row)];
      t.state[static_cast<size_t>(leave)] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;
      t.x[leave] = leave_to_upper ? t.upper[leave] : 0.0;
      t.basis[static_cast<size_t>(leave_row)] = enter;
      t.state[static_cast<size_t>(enter)] = VarState::Basic;
      t.x[enter] = (t.state[static_cast<size_t>(enter)] == VarState::Basic)
                       ? ((enter_sign > 0.0) ? t_max : t.upper[enter] - t_max)
                       : t.x[enter];
    }
  }
  *iters_used += max_iters;
  return "iteration-limit";
}

}  // namespace

LpResult solve_lp(const LpProblem& p, int max_iters) {
  LpResult res;
  const int m = static_cast<int>(p.A.rows());
  const int n = static_cast<int>(p.A.cols());

  Tableau t;
  t.m = m;
  t.n_orig = n;
  t.A.resize(m, n + m);
  t.A.leftCols(n) = p.A;
  t.A.rightCols(m).setIdentity();
  t.b = p.b;
  // Deterministic RHS perturbation breaks the heavy degeneracy of all-zero
  // rows (anti-cycling); magnitude is far below every consumer's tolerance.
  const double bscale = std::max(1.0, t.b.lpNorm<Eigen::Infinity>());
  for (int i = 0; i < m; ++i) {
    t.b[i] += 1e-11 * bscale * (1.0 + std::fmod(0.618033988749895 * (i + 1), 1.0));
  }
  for (int i = 0; i < m; ++i) {
    if (t.b[i] < 0.0) {
      t.b[i] = -t.b[i];
      t.A.row(i) = -t.A.row(i);
    }
  }
  t.upper.resize(n + m);
  t.upper.head(n) = p.upper;
  t.upper.tail(m).setConstant(kInfD);
  t.x = Eigen::VectorXd::Zero(n + m);
  t.state.assign(static_cast<size_t>(n + m), VarState::AtLower);
  t.basis.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    t.basis[static_cast<size_t>(i)] = n + i;
    t.state[static_cast<size_t>(n + i)] = VarState::Basic;
    t.x[n + i] = t.b[i];
  }

  // Phase 1: drive the artificials to zero.
  t.cost = Eigen::VectorXd::Zero(n + m);
  t.cost.tail(m).setConstant(-1.0);
  res.status = run_phase(t, max_iters, &res.iterations);
  if (res.status != "optimal") return res;
  t.refactor();
  t.recompute_basic_values();
  double art_sum = 0.0;
  for (int i = 0; i < m; ++i) art_sum += t.x[n + i];
  const double scale = std::max(1.0, t.b.lpNorm<Eigen::Infinity>());
  if (art_sum > 1e-7 * scale) {
    res.status = "infeasible";
    return res;
  }

  // Phase 2: original objective; artificials pinned at zero.
  for (int i = 0; i < m; ++i) t.upper[n + i] = 0.0;
  t.cost = Eigen::VectorXd::Zero(n + m);
  t.cost.head(n) = p.c;
  res.status = run_phase(t, max_iters, &res.iterations);
  if (res.status != "optimal") return res;

  t.refactor();
  t.recompute_basic_values();
  res.x = t.x.head(n);
  res.value = p.c.dot(res.x);
  Eigen::VectorXd cb(m);
  for (int i = 0; i < m; ++i) cb[i] = t.cost[t.basis[static_cast<size_t>(i)]];
  res.dual = t.lu.transpose().solve(cb);
  res.optimal = true;
  return res;
}

}  // namespace bn
