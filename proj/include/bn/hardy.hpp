#pragma once

#include <functional>
#include <random>

#include "bn/common.hpp"

namespace bn {

/// Finitely supported complex sequence over the integers.
struct DiscreteSeq {
  int offset = 0;            // index of values[0]
  std::vector<cd> values;    // contiguous block; may contain zeros

  cd at(int k) const {
    const int i = k - offset;
    if (i < 0 || i >= static_cast<int>(values.size())) return cd(0.0);
    return values[static_cast<size_t>(i)];
  }
  int lo() const { return offset; }
  int hi() const { return offset + static_cast<int>(values.size()) - 1; }
};

enum class OffsetKind { Integer, Half };  // H(a) vs H_c(a)

/// Discrete Hilbert transform value at a single index.
/// Integer kind: sum_{k != m} a_k/(m-k).  Half kind: sum_k a_k/(m-k+1/2).
cd hilbert_at(const DiscreteSeq& a, int m, OffsetKind kind);

struct HilbertTail {
  int first_moment_index = -1;  // smallest j with nonzero (shifted) moment; -1 if none found
  double moment_abs = 0.0;      // |mu_j| for that j
  double abs_sum = 0.0;         // sum |a_k|, crude |H|_m <= abs_sum/(|m|-R) bound
  int support_radius = 0;
};

struct HilbertResult {
  DiscreteSeq window;  // exact values on [support-W, support+W]
  HilbertTail tail;
};

/// Exact transform on a window around the support plus a moment-based tail
/// decay model (|H(a)_m| ~ |mu_j| / |m|^{j+1} beyond the window).
HilbertResult hilbert(const DiscreteSeq& a, OffsetKind kind, int window = 256);

struct HpNorm {
  bool finite = false;
  double value = kInf;
  double ell_p = 0.0;       // ||a||_p component
  double transform_p = 0.0; // ||H(a)||_p component (finite case)
};

/// ||a||_p + ||H(a)||_p with analytic tail summation; the divergence decision
/// comes from the moment scan (diverges iff p*(j+1) <= 1 for the first
/// nonvanishing moment index j).
HpNorm hp_quasinorm(const DiscreteSeq& a, double p, OffsetKind kind = OffsetKind::Integer,
                    int window = 10000);

/// Moments sum_k a_k k^j for j = 0..jmax, wide-precision accumulation.
std::vector<cd> moments(const DiscreteSeq& a, int jmax);

struct AtomCertificate {
  bool valid = false;
  double p = 0.0;
  double interval_lo = 0.0, interval_hi = 0.0;
  int j0 = 0;                         // required vanishing-moment order
  bool support_ok = false;
  bool sup_ok = false;
  double sup_norm = 0.0, sup_bound = 0.0;
  std::vector<double> moment_residuals;  // |mu_j|, j = 0..j0
  bool moments_ok = false;
};

/// Definition check for an H_p-atom on the interval [lo, hi], |I| >= 1.
AtomCertificate validate_atom(const DiscreteSeq& a, double lo, double hi, double p);

struct SincSynthesis {
  std::function<double(double)> eval_abs;  // |f_a(x)|
  std::function<cd(double)> eval;
  double sampled_p_sum(double p) const;    // (sum_m |f_a(pi m)|^p)^{1/p} = (sum |a_m|^p)^{1/p}
  double truncated_norm(double p, double R, int samples_per_unit = 64) const;
  DiscreteSeq a;
};

/// f_a(x) = sum_k (-1)^k a_k sinc(x - pi k).
SincSynthesis synthesize_f_a(const DiscreteSeq& a);

/// integral_{-1}^{1} |xi|^s |g(xi)| dxi with
/// g(xi) = pi sum_k (-1)^k a_{k+M} e^{-i k pi xi}, M = centre of the interval.
double atom_fourier_moment(const DiscreteSeq& a, double lo, double hi, int s, double p);

/// Random H_p-atom on a random integer interval of length in [2, max_len]:
/// vanishing moments solved in the null-space basis, sup bound met with
/// factor-1/2 slack.
DiscreteSeq random_atom(double p, int max_len, std::mt19937_64& rng, double* interval_lo = nullptr,
                        double* interval_hi = nullptr);

}  // namespace bn
