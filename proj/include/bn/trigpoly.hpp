#pragma once

#include <vector>

#include "bn/common.hpp"

namespace bn {

/// Trigonometric polynomial T(x) = sum_{k=-n}^n c_k e^{ikx} stored as the
/// two-sided coefficient sequence c_{-n}..c_n.
class TrigPoly {
 public:
  // Coefficient sequence must have odd length 2n+1.
  explicit TrigPoly(std::vector<cd> coeffs);

  static TrigPoly zero(int n);
  static TrigPoly constant(cd value) { return TrigPoly({value}); }

  int degree() const { return n_; }
  cd coeff(int k) const { return coeffs_[static_cast<size_t>(k + n_)]; }
  void set_coeff(int k, cd v);
  const std::vector<cd>& coeffs() const { return coeffs_; }

  // Symmetry flags detected at construction (tolerance 1e-12 relative).
  bool is_real() const { return real_; }
  bool is_even() const { return even_; }
  bool is_odd() const { return odd_; }

  cd eval(double x) const;

 private:
  int n_;
  std::vector<cd> coeffs_;
  bool real_ = false, even_ = false, odd_ = false;
  void detect_flags();
};

TrigPoly make_poly(std::vector<cd> coeffs);

/// Samples T(x_j), x_j = -pi + 2*pi*j/M, j = 0..M-1. Requires M >= 2n+2.
std::vector<cd> evaluate_grid(const TrigPoly& t, int M);

/// Weyl derivative of order s > 0: c_k -> |k|^s e^{i pi s sgn(k)/2} c_k.
TrigPoly weyl_derivative(const TrigPoly& t, double s);

/// Default quadrature grid size for quasinorm(., p) on degree-n polynomials.
/// Rounded up to a power of two for the FFT synthesis path.
int default_grid(int n, double p);

/// L_p quasinorm (integral over [-pi, pi)) on an M-point equispaced grid.
/// Finite p: composite trapezoid of |T|^p. p = inf: grid max refined by
/// golden-section search around the best node.
double quasinorm(const TrigPoly& t, double p, int M);
double quasinorm(const TrigPoly& t, double p);

enum class Parity { Real, Even, Odd };

TrigPoly parity_project(const TrigPoly& t, Parity kind);

// In-place radix-2 FFT; sign +1 in the exponent when inverse is true.
void fft(std::vector<cd>& a, bool inverse);

}  // namespace bn
