#include "bn/trigpoly.hpp"

#include <algorithm>
#include <cmath>

namespace bn {

TrigPoly::TrigPoly(std::vector<cd> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) {
    throw std::invalid_argument("TrigPoly: coefficient sequence must have odd length");
  }
  n_ = static_cast<int>(coeffs_.size() / 2);
  detect_flags();
}

TrigPoly TrigPoly::zero(int n) {
  if (n < 0) throw std::invalid_argument("TrigPoly::zero: negative degree");
  return TrigPoly(std::vector<cd>(2 * static_cast<size_t>(n) + 1, cd(0.0)));
}

void TrigPoly::set_coeff(int k, cd v) {
  coeffs_[static_cast<size_t>(k + n_)] = v;
  detect_flags();
}

void TrigPoly::detect_flags() {
  double scale = 0.0;
  for (const cd& c : coeffs_) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(scale, 1e-300);
  real_ = even_ = odd_ = true;
  for (int k = 0; k <= n_; ++k) {
    const cd a = coeff(k), b = coeff(-k);
    if (std::abs(b - std::conj(a)) > tol) real_ = false;
    if (std::abs(b - a) > tol) even_ = false;
    if (std::abs(b + a) > tol) odd_ = false;
  }
}

cd TrigPoly::eval(double x) const {
  // Direct summation; used for point checks and local refinement.
  const cd w = std::polar(1.0, x);
  cd pos(0.0), neg(0.0);
  for (int k = n_; k >= 1; --k) {
    pos = (pos + coeff(k)) * w;
    neg = (neg + coeff(-k)) * std::conj(w);
  }
  return pos + neg + coeff(0);
}

TrigPoly make_poly(std::vector<cd> coeffs) { return TrigPoly(std::move(coeffs)); }

void fft(std::vector<cd>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 1.0 : -1.0) * kTwoPi / static_cast<double>(len);
    const cd wl = std::polar(1.0, ang);
    for (size_t i = 0; i < n; i += len) {
      cd w(1.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  // No 1/n scaling; callers synthesising polynomials want the bare sum.
}

std::vector<cd> evaluate_grid(const TrigPoly& t, int M) {
  const int n = t.degree();
  if (M < 2 * n + 2) throw std::invalid_argument("evaluate_grid: grid undersampled, need M >= 2n+2");
  if ((M & (M - 1)) == 0) {
    // T(x_j) = sum_k c_k (-1)^k w^{kj}, w = e^{2 pi i / M}.
    std::vector<cd> b(static_cast<size_t>(M), cd(0.0));
    for (int k = -n; k <= n; ++k) {
      const int idx = ((k % M) + M) % M;
      b[static_cast<size_t>(idx)] += t.coeff(k) * ((k & 1) ? -1.0 : 1.0);
    }
    fft(b, true);
    return b;
  }
  std::vector<cd> out(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) out[static_cast<size_t>(j)] = t.eval(-kPi + kTwoPi * j / M);
  return out;
}

TrigPoly weyl_derivative(const TrigPoly& t, double s) {
  if (!(s > 0.0)) throw std::domain_error("weyl_derivative: order must be positive");
  const int n = t.degree();
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1, cd(0.0));
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    const double sgn = (k > 0) ? 1.0 : -1.0;
    const cd mult = std::pow(std::abs(static_cast<double>(k)), s) * std::polar(1.0, kPi * s * sgn / 2.0);
    c[static_cast<size_t>(k + n)] = mult * t.coeff(k);
  }
  return TrigPoly(std::move(c));
}

int default_grid(int n, double p) {
  if (is_inf(p)) return next_pow2(std::max(8192, 64 * (n + 1)));
  const double floor_m = std::max(4096.0, std::ceil(32.0 * (n + 1) * std::max(1.0, p)));
  return next_pow2(static_cast<int>(floor_m));
}

namespace {

double golden_refine_absmax(const TrigPoly& t, double lo, double hi) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = std::abs(t.eval(x1)), f2 = std::abs(t.eval(x2));
  for (int it = 0; it < 80 && (b - a) > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(t.eval(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(t.eval(x1));
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double quasinorm(const TrigPoly& t, double p, int M) {
  if (!(p > 0.0)) throw std::domain_error("quasinorm: p must be positive");
  const std::vector<cd> v = evaluate_grid(t, M);
  if (is_inf(p)) {
    double best = 0.0;
    int jbest = 0;
    for (int j = 0; j < M; ++j) {
      const double a = std::abs(v[static_cast<size_t>(j)]);
      if (a > best) {
        best = a;
        jbest = j;
      }
    }
    const double h = kTwoPi / M;
    const double x0 = -kPi + h * jbest;
    return std::max(best, golden_refine_absmax(t, x0 - h, x0 + h));
  }
  double sum = 0.0;
  for (const cd& z : v) sum += std::pow(std::abs(z), p);
  return std::pow(sum * kTwoPi / M, 1.0 / p);
}

double quasinorm(const TrigPoly& t, double p) { return quasinorm(t, p, default_grid(t.degree(), p)); }

TrigPoly parity_project(const TrigPoly& t, Parity kind) {
  const int n = t.degree();
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1);
  for (int k = -n; k <= n; ++k) {
    cd v;
    switch (kind) {
      case Parity::Real:
        v = 0.5 * (t.coeff(k) + std::conj(t.coeff(-k)));
        break;
      case Parity::Even:
        v = 0.5 * (t.coeff(k) + t.coeff(-k));
        break;
      case Parity::Odd:
        v = 0.5 * (t.coeff(k) - t.coeff(-k));
        break;
    }
    c[static_cast<size_t>(k + n)] = v;
  }
  return TrigPoly(std::move(c));
}

}  // namespace bn
