#pragma once

#include "bn/trigpoly.hpp"

namespace bn {

/// (sum_{|k|<=n} |k|^{2s})^{1/2} / sqrt(2 pi): the sharp (2, inf) constant
/// (Cauchy-Schwarz on the coefficient pairing, equality attainable).
double constant_2_inf_closed_form(int n, int s);

struct EstimateOptions {
  int starts = 32;
  unsigned long long seed = 20240901ULL;
  int iters = 150;
  int coarse_grid = 1024;  // ascent grid; the final ratio uses default_grid
};

struct EstimateResult {
  double ratio = 0.0;   // lower bound on the (n,s,p,q) sharp constant
  TrigPoly argmax = TrigPoly::zero(0);
  int best_start = -1;
  int evaluations = 0;
};

/// Multi-start projected subgradient ascent on ||T^{(s)}||_q / ||T||_p over
/// complex coefficient vectors; witness polynomials seed the start list.
EstimateResult estimate_constant(int n, int s, double p, double q, EstimateOptions opts = {});

/// n^{-s-1/p+1/q} * estimate_constant(n, s, p, q) per n.
std::vector<double> entire_limit_scan(int s, double p, double q, const std::vector<int>& n_list,
                                      EstimateOptions opts = {});

}  // namespace bn
