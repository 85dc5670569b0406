#include "bn/hardy.hpp"

#include <algorithm>
#include <cmath>

namespace bn {

namespace {

double seq_abs_max(const DiscreteSeq& a) {
  double m = 0.0;
  for (const cd& v : a.values) m = std::max(m, std::abs(v));
  return m;
}

// Smallest j with nonvanishing moment about the given shift (k - shift)^j.
// Returns -1 if all moments up to jmax vanish (relative tolerance).
int first_nonvanishing_moment(const DiscreteSeq& a, double shift, int jmax, double* abs_out) {
  const double scale = std::max(seq_abs_max(a), 1e-300);
  for (int j = 0; j <= jmax; ++j) {
    std::complex<long double> mu(0.0L);
    for (int k = a.lo(); k <= a.hi(); ++k) {
      const cd v = a.at(k);
      mu += std::complex<long double>(v.real(), v.imag()) *
            std::pow(static_cast<long double>(k) - static_cast<long double>(shift), j);
    }
    const double m = static_cast<double>(std::abs(mu));
    const double ref = scale * std::pow(static_cast<double>(std::max(std::abs(a.lo()), std::abs(a.hi())) + 1), j);
    if (m > 1e-9 * std::max(ref, 1.0)) {
      if (abs_out) *abs_out = m;
      return j;
    }
  }
  if (abs_out) *abs_out = 0.0;
  return -1;
}

}  // namespace

cd hilbert_at(const DiscreteSeq& a, int m, OffsetKind kind) {
  cd sum(0.0);
  for (int k = a.lo(); k <= a.hi(); ++k) {
    if (kind == OffsetKind::Integer) {
      if (k == m) continue;
      sum += a.at(k) / static_cast<double>(m - k);
    } else {
      sum += a.at(k) / (static_cast<double>(m - k) + 0.5);
    }
  }
  return sum;
}

HilbertResult hilbert(const DiscreteSeq& a, OffsetKind kind, int window) {
  HilbertResult out;
  const int lo = a.lo() - window, hi = a.hi() + window;
  out.window.offset = lo;
  out.window.values.resize(static_cast<size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) {
    out.window.values[static_cast<size_t>(m - lo)] = hilbert_at(a, m, kind);
  }
  const double shift = (kind == OffsetKind::Half) ? 0.5 : 0.0;
  out.tail.first_moment_index = first_nonvanishing_moment(a, shift, 64, &out.tail.moment_abs);
  for (const cd& v : a.values) out.tail.abs_sum += std::abs(v);
  out.tail.support_radius = std::max(std::abs(a.lo()), std::abs(a.hi()));
  return out;
}

HpNorm hp_quasinorm(const DiscreteSeq& a, double p, OffsetKind kind, int window) {
  if (!(p > 0.0) || p > 1.0 + 1e-12) throw std::domain_error("hp_quasinorm: p must be in (0,1]");
  HpNorm out;
  double ell = 0.0;
  for (const cd& v : a.values) {
    const double m = std::abs(v);
    if (m > 0.0) ell += std::pow(m, p);
  }
  out.ell_p = std::pow(ell, 1.0 / p);

  const double shift = (kind == OffsetKind::Half) ? 0.5 : 0.0;
  double mu_abs = 0.0;
  const int j1 = first_nonvanishing_moment(a, shift, 64, &mu_abs);
  if (j1 >= 0) {
    // |H(a)_m| ~ |mu_{j1}| / |m|^{j1+1}; the p-series of the tail converges
    // iff p*(j1+1) > 1 (borderline declared divergent).
    const double alpha = p * (j1 + 1);
    if (alpha <= 1.0 + 1e-12) return out;  // finite=false, +inf flag
  }
  double hp = 0.0;
  const int lo = a.lo() - window, hi = a.hi() + window;
  for (int m = lo; m <= hi; ++m) {
    const double v = std::abs(hilbert_at(a, m, kind));
    if (v > 0.0) hp += std::pow(v, p);
  }
  if (j1 >= 0) {
    // Integral-remainder tail of the decay model on both sides.
    const double alpha = p * (j1 + 1);
    const double W = static_cast<double>(window);
    hp += 2.0 * std::pow(mu_abs, p) * std::pow(W, 1.0 - alpha) / (alpha - 1.0);
  }
  out.transform_p = std::pow(hp, 1.0 / p);
  out.finite = true;
  out.value = out.ell_p + out.transform_p;
  return out;
}

std::vector<cd> moments(const DiscreteSeq& a, int jmax) {
  std::vector<cd> out(static_cast<size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    std::complex<long double> mu(0.0L);
    for (int k = a.lo(); k <= a.hi(); ++k) {
      const cd v = a.at(k);
      mu += std::complex<long double>(v.real(), v.imag()) * std::pow(static_cast<long double>(k), j);
    }
    out[static_cast<size_t>(j)] = cd(static_cast<double>(mu.real()), static_cast<double>(mu.imag()));
  }
  return out;
}

AtomCertificate validate_atom(const DiscreteSeq& a, double lo, double hi, double p) {
  if (!(hi - lo >= 1.0)) throw std::domain_error("validate_atom: interval length must be >= 1");
  AtomCertificate cert;
  cert.p = p;
  cert.interval_lo = lo;
  cert.interval_hi = hi;
  cert.j0 = static_cast<int>(std::floor(1.0 / p - 1.0 + 1e-12));

  cert.support_ok = true;
  for (int k = a.lo(); k <= a.hi(); ++k) {
    if (std::abs(a.at(k)) > 0.0 && (k < lo - 1e-12 || k > hi + 1e-12)) cert.support_ok = false;
  }
  cert.sup_norm = seq_abs_max(a);
  cert.sup_bound = std::pow(hi - lo, -1.0 / p);
  cert.sup_ok = cert.sup_norm <= cert.sup_bound * (1.0 + 1e-9);

  const std::vector<cd> mu = moments(a, cert.j0);
  cert.moments_ok = true;
  for (int j = 0; j <= cert.j0; ++j) {
    const double res = std::abs(mu[static_cast<size_t>(j)]);
    cert.moment_residuals.push_back(res);
    const double ref =
        std::max(cert.sup_norm, 1e-300) *
        std::pow(static_cast<double>(std::max(std::abs(a.lo()), std::abs(a.hi())) + 1), j);
    if (res > 1e-9 * std::max(ref, 1e-12)) cert.moments_ok = false;
  }
  cert.valid = cert.support_ok && cert.sup_ok && cert.moments_ok;
  return cert;
}

namespace {
double sinc(double t) { return (std::abs(t) < 1e-8) ? 1.0 - t * t / 6.0 : std::sin(t) / t; }
}  // namespace

SincSynthesis synthesize_f_a(const DiscreteSeq& a) {
  SincSynthesis s;
  s.a = a;
  DiscreteSeq local = a;
  s.eval = [local](double x) {
    cd sum(0.0);
    for (int k = local.lo(); k <= local.hi(); ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      sum += sgn * local.at(k) * sinc(x - kPi * k);
    }
    return sum;
  };
  auto ev = s.eval;
  s.eval_abs = [ev](double x) { return std::abs(ev(x)); };
  return s;
}

double SincSynthesis::sampled_p_sum(double p) const {
  double sum = 0.0;
  for (const cd& v : a.values) {
    const double m = std::abs(v);
    if (m > 0.0) sum += std::pow(m, p);
  }
  return std::pow(sum, 1.0 / p);
}

double SincSynthesis::truncated_norm(double p, double R, int samples_per_unit) const {
  const int N = static_cast<int>(std::ceil(2.0 * R * samples_per_unit));
  const double h = 2.0 * R / N;
  double sum = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double x = -R + h * i;
    const double w = (i == 0 || i == N) ? 0.5 : 1.0;
    sum += w * std::pow(eval_abs(x), p);
  }
  return std::pow(sum * h, 1.0 / p);
}

double atom_fourier_moment(const DiscreteSeq& a, double lo, double hi, int s, double p) {
  const AtomCertificate cert = validate_atom(a, lo, hi, p);
  if (!cert.valid) throw std::domain_error("atom_fourier_moment: input is not a valid atom");
  const int M = static_cast<int>(std::lround((lo + hi) / 2.0));
  auto g = [&](double xi) {
    cd sum(0.0);
    for (int k = a.lo() - M; k <= a.hi() - M; ++k) {
      const double sgn = (k & 1) ? -1.0 : 1.0;
      sum += sgn * a.at(k + M) * std::polar(1.0, -k * kPi * xi);
    }
    return kPi * std::abs(sum);
  };
  // Composite Simpson on [-1, 1]; integrand is smooth apart from |xi|^s.
  const int N = 8192;
  const double h = 2.0 / N;
  double sum = 0.0;
  for (int i = 0; i <= N; ++i) {
    const double xi = -1.0 + h * i;
    const double w = (i == 0 || i == N) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * std::pow(std::abs(xi), s) * g(xi);
  }
  return sum * h / 3.0;
}

DiscreteSeq random_atom(double p, int max_len, std::mt19937_64& rng, double* interval_lo,
                        double* interval_hi) {
  const int j0 = static_cast<int>(std::floor(1.0 / p - 1.0 + 1e-12));
  std::uniform_int_distribution<int> len_dist(std::max(2, j0 + 2), std::max(max_len, j0 + 2));
  std::uniform_int_distribution<int> off_dist(-32, 32);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int len = len_dist(rng);
  const int off = off_dist(rng);

  // Draw a random vector, then project out the monomial moments 0..j0 by
  // Gram-Schmidt on the monomial columns.
  std::vector<std::vector<double>> basis;
  for (int j = 0; j <= j0; ++j) {
    std::vector<double> col(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) col[static_cast<size_t>(i)] = std::pow(static_cast<double>(off + i), j);
    for (const auto& b : basis) {
      double dot = 0.0, nrm = 0.0;
      for (int i = 0; i < len; ++i) {
        dot += col[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
        nrm += b[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      }
      for (int i = 0; i < len; ++i) col[static_cast<size_t>(i)] -= dot / nrm * b[static_cast<size_t>(i)];
    }
    basis.push_back(col);
  }
  std::vector<double> v(static_cast<size_t>(len));
  double vmax = 0.0;
  for (int attempt = 0; attempt < 64 && vmax < 1e-8; ++attempt) {
    for (double& x : v) x = gauss(rng);
    for (const auto& b : basis) {
      double dot = 0.0, nrm = 0.0;
      for (int i = 0; i < len; ++i) {
        dot += v[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
        nrm += b[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      }
      for (int i = 0; i < len; ++i) v[static_cast<size_t>(i)] -= dot / nrm * b[static_cast<size_t>(i)];
    }
    vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
  }
  const double bound = std::pow(static_cast<double>(len), -1.0 / p);
  const double scale = bound / (2.0 * vmax);
  DiscreteSeq a;
  a.offset = off;
  a.values.resize(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) a.values[static_cast<size_t>(i)] = cd(v[static_cast<size_t>(i)] * scale);
  if (interval_lo) *interval_lo = off;
  if (interval_hi) *interval_hi = off + len - 1;
  return a;
}

}  // namespace bn
