#include <doctest.h>

#include <cmath>

#include "bn/kernels.hpp"

using namespace bn;

TEST_CASE("dirichlet kernel coefficients and norms") {
  const TrigPoly d0 = dirichlet(0);
  CHECK(d0.degree() == 0);
  CHECK(d0.coeff(0).real() == doctest::Approx(1.0));

  const TrigPoly d2 = dirichlet(2);
  for (int k = -2; k <= 2; ++k) CHECK(d2.coeff(k).real() == doctest::Approx(1.0));
  CHECK(d2.eval(0.0).real() == doctest::Approx(5.0));

  const TrigPoly d7 = dirichlet(7);
  const double l2 = quasinorm(d7, 2.0);
  CHECK(l2 * l2 == doctest::Approx(kTwoPi * 15.0).epsilon(1e-12));

  CHECK_THROWS(dirichlet(-1));
}

TEST_CASE("jackson kernel coefficients") {
  const TrigPoly j1 = jackson(1, 5);
  for (int m = -5; m <= 5; ++m) CHECK(j1.coeff(m).real() == doctest::Approx(1.0));

  const TrigPoly j21 = jackson(2, 1);
  const double expect[] = {1.0, 2.0, 3.0, 2.0, 1.0};
  for (int m = -2; m <= 2; ++m) {
    CHECK(j21.coeff(m).real() == doctest::Approx(expect[m + 2]));
  }

  // J_{2,4} = D_4^2 pointwise.
  const TrigPoly j24 = jackson(2, 4);
  const TrigPoly d4 = dirichlet(4);
  for (int j = 0; j < 64; ++j) {
    const double x = -kPi + kTwoPi * j / 64.0;
    const cd d = d4.eval(x);
    CHECK(std::abs(j24.eval(x) - d * d) < 1e-9);
  }

  CHECK_THROWS(jackson(0, 4));
  CHECK_THROWS(jackson(2, 0));
}

TEST_CASE("jackson kernels are nonnegative for even r") {
  for (int N : {3, 8}) {
    const TrigPoly j = jackson(2, N);
    for (int m = -2 * N; m <= 2 * N; ++m) CHECK(j.coeff(m).real() >= 0.0);
    for (int i = 0; i < 256; ++i) {
      CHECK(j.eval(-kPi + kTwoPi * i / 256.0).real() >= -1e-9);
    }
  }
}

TEST_CASE("jackson plateau ratios") {
  for (int N : {4, 16, 64}) CHECK(jackson_plateau_ratio(1, N, 1.0) == doctest::Approx(1.0));

  // r = 2 coefficients are 2N+1-|m|, so the ratio on |m| <= N/2 is >= 1.
  CHECK(jackson_plateau_ratio(2, 16, 0.5) >= 1.0);
  CHECK(jackson_plateau_ratio(2, 16, 0.5) == doctest::Approx((2.0 * 16 + 1 - 8) / 16.0));

  double lo = kInf, hi = 0.0;
  for (int N : {8, 16, 32, 64}) {
    const double v = jackson_plateau_ratio(3, N, 1.0 / 6.0);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo <= 4.0);
}

TEST_CASE("jackson p-norm scaling band") {
  // ||J_{r,N}||_p / N^{r-1/p} in a fixed band whenever pr > 1.
  for (auto [r, p] : {std::pair<int, double>{2, 1.0}, {2, 0.75}, {3, 0.5}}) {
    double lo = kInf, hi = 0.0;
    for (int N : {8, 16, 32, 64, 128}) {
      const double v = quasinorm(jackson(r, N), p) / std::pow(N, r - 1.0 / p);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo <= 4.0);
  }
}

TEST_CASE("nikolskii_q structure") {
  // n = 0: both displayed sums are empty, leaving the constant 1/(2(n+1)).
  const TrigPoly q0 = nikolskii_q(0);
  CHECK(q0.coeff(0).real() == doctest::Approx(0.5));
  for (int k = 1; k <= q0.degree(); ++k) CHECK(std::abs(q0.coeff(k)) < 1e-15);

  const TrigPoly q3 = nikolskii_q(3);
  CHECK(q3.degree() == 7);
  CHECK(q3.coeff(0).real() == doctest::Approx(1.0 / 8.0));
  for (int k = 1; k <= 3; ++k) {
    CHECK(q3.coeff(k).real() == doctest::Approx(0.5 / (3 - k + 1)));
    CHECK(q3.coeff(k + 4).real() == doctest::Approx(-0.5 / k));
  }
}

TEST_CASE("nikolskii_q sup norm is uniformly bounded") {
  double worst = 0.0;
  for (int n = 1; n <= 256; n *= 2) worst = std::max(worst, quasinorm(nikolskii_q(n), kInf));
  CHECK(worst <= 6.2);  // recorded bound; observed sup ~3.2 at n = 256
}

TEST_CASE("nikolskii_q pairing identity is exact in coefficient space") {
  const int n = 12;
  std::vector<double> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = 1.0 / (1.0 + k * k);
  double expect = c[0] / (n + 1);
  for (int k = 1; k <= n; ++k) expect += 2.0 * c[static_cast<size_t>(k)] / (n - k + 1);
  expect *= kPi;
  CHECK(nikolskii_q_pairing(c) == doctest::Approx(expect).epsilon(1e-14));

  // Quadrature cross-check of the orthogonality argument.
  std::vector<cd> tc(2 * static_cast<size_t>(n) + 1);
  for (int k = -n; k <= n; ++k) tc[static_cast<size_t>(k + n)] = cd(c[static_cast<size_t>(std::abs(k))]);
  const TrigPoly t(std::move(tc));
  const TrigPoly q = nikolskii_q(n);
  const int M = 4096;
  double integral = 0.0;
  for (int j = 0; j < M; ++j) {
    const double x = -kPi + kTwoPi * j / M;
    integral += (t.eval(x) * q.eval(x)).real();
  }
  integral *= kTwoPi / M;
  CHECK(integral == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("hl_norm_proxy closed forms and kernel band") {
  CHECK(hl_norm_proxy({1.0}, 2.0) == doctest::Approx(1.0));

  const int n = 15;
  std::vector<double> ones(static_cast<size_t>(n) + 1, 1.0);
  CHECK(hl_norm_proxy(ones, 2.0) == doctest::Approx(std::sqrt(n + 1.0)));

  CHECK_THROWS(hl_norm_proxy({1.0, 2.0}, 1.0));

  // The monotone-coefficient equivalence is a p >= 1 statement; for p < 1 the
  // proxy provably overshoots (N^2 vs N^{r-1/p} on the Jackson kernels), so the
  // band is certified on p >= 1 only.
  for (double p : {1.0, 1.5, 2.0}) {
    double lo = kInf, hi = 0.0;
    for (int N : {8, 16, 32, 64, 128}) {
      const TrigPoly j = jackson(2, N);
      std::vector<double> a(static_cast<size_t>(2 * N) + 1);
      for (int k = 0; k <= 2 * N; ++k) a[static_cast<size_t>(k)] = j.coeff(k).real();
      const double v = quasinorm(j, p) / hl_norm_proxy(a, p);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo <= 4.0);
  }
}

TEST_CASE("Dirichlet derivative norms stay under the reference envelope") {
  double worst = 0.0;
  for (int n : {4, 16, 64, 256}) {
    for (int s : {1, 4, 16, 32}) {
      // Scale by n^{-s} up front: |k|^s coefficients reach 1e77 at n = 256,
      // s = 32, and |T|^4 would overflow in the quadrature otherwise.
      std::vector<cd> c(2 * static_cast<size_t>(n) + 1, cd(0.0));
      for (int k = 1; k <= n; ++k) {
        const cd m = std::pow(static_cast<double>(k) / n, s) *
                     std::polar(1.0, kPi * s / 2.0);
        c[static_cast<size_t>(n + k)] = m;
        c[static_cast<size_t>(n - k)] = std::conj(m);
      }
      const TrigPoly d(std::move(c));
      for (double r : {1.5, 2.0, 4.0, kInf}) {
        const double env = 1.0 + std::pow(static_cast<double>(n) / s,
                                          1.0 - (is_inf(r) ? 0.0 : 1.0 / r));
        worst = std::max(worst, quasinorm(d, r) / env);
      }
    }
  }
  CHECK(worst <= 10.0);  // recorded uniform constant; observed ~2.4
}
