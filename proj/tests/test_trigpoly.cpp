#include <doctest.h>

#include <cmath>
#include <random>

#include "bn/kernels.hpp"
#include "bn/trigpoly.hpp"

using namespace bn;

namespace {

TrigPoly random_real_poly(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cd> c(2 * static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    const cd v(gauss(rng), gauss(rng));
    c[static_cast<size_t>(n + k)] = v;
    c[static_cast<size_t>(n - k)] = std::conj(v);
  }
  c[static_cast<size_t>(n)] = cd(gauss(rng));
  return TrigPoly(std::move(c));
}

}  // namespace

TEST_CASE("make_poly detects symmetry flags") {
  const TrigPoly one({cd(1.0)});
  CHECK(one.degree() == 0);
  CHECK(one.is_real());
  CHECK(one.is_even());

  const TrigPoly cosx({cd(0.5), cd(0.0), cd(0.5)});
  CHECK(cosx.is_real());
  CHECK(cosx.is_even());
  CHECK(!cosx.is_odd());
  CHECK(cosx.eval(0.3).real() == doctest::Approx(std::cos(0.3)).epsilon(1e-13));

  const TrigPoly d2({cd(1.0), cd(1.0), cd(1.0), cd(1.0), cd(1.0)});
  CHECK(d2.eval(0.0).real() == doctest::Approx(5.0));

  CHECK_THROWS(TrigPoly({cd(1.0), cd(2.0)}));  // even length is malformed
}

TEST_CASE("evaluate_grid matches direct pointwise evaluation") {
  const TrigPoly e1({cd(0.0), cd(0.0), cd(1.0)});  // e^{ix}
  for (const cd& v : evaluate_grid(e1, 4)) CHECK(std::abs(v) == doctest::Approx(1.0));

  const TrigPoly d2 = dirichlet(2);
  const auto vals = evaluate_grid(d2, 16);
  // x_j = -pi + 2 pi j / 16; node nearest 0 is j = 8.
  CHECK(vals[8].real() == doctest::Approx(5.0).epsilon(1e-13));

  const TrigPoly cosx({cd(0.5), cd(0.0), cd(0.5)});
  const auto cv = evaluate_grid(cosx, 8);
  for (int j = 0; j < 8; ++j) {
    const double x = -kPi + kTwoPi * j / 8.0;
    CHECK(std::abs(cv[static_cast<size_t>(j)] - cd(std::cos(x))) < 1e-13);
  }
  CHECK_THROWS(evaluate_grid(d2, 4));  // undersampled
}

TEST_CASE("weyl_derivative on elementary polynomials") {
  const TrigPoly e1({cd(0.0), cd(0.0), cd(1.0)});
  const TrigPoly de1 = weyl_derivative(e1, 1.0);
  CHECK(std::abs(de1.coeff(1) - cd(0.0, 1.0)) < 1e-14);

  for (int k : {1, 3}) {
    std::vector<cd> c(2 * static_cast<size_t>(k) + 1, cd(0.0));
    c[0] = c[2 * static_cast<size_t>(k)] = cd(0.5);
    const TrigPoly d2 = weyl_derivative(TrigPoly(std::move(c)), 2.0);
    CHECK(d2.coeff(k).real() == doctest::Approx(-0.5 * k * k));
    CHECK(d2.coeff(-k).real() == doctest::Approx(-0.5 * k * k));
  }

  // Half derivative of cos x is cos(x + pi/4).
  const TrigPoly h = weyl_derivative(TrigPoly({cd(0.5), cd(0.0), cd(0.5)}), 0.5);
  for (double x : {0.0, 0.7, 2.9, -1.3}) {
    CHECK(h.eval(x).real() == doctest::Approx(std::cos(x + kPi / 4.0)).epsilon(1e-13));
    CHECK(std::abs(h.eval(x).imag()) < 1e-13);
  }
  CHECK_THROWS(weyl_derivative(e1, -1.0));
}

TEST_CASE("weyl_derivative composes additively") {
  std::mt19937_64 rng(7);
  const TrigPoly t = random_real_poly(10, rng);
  const TrigPoly a = weyl_derivative(weyl_derivative(t, 0.4), 1.6);
  const TrigPoly b = weyl_derivative(t, 2.0);
  for (int k = -10; k <= 10; ++k) CHECK(std::abs(a.coeff(k) - b.coeff(k)) < 1e-12);
}

TEST_CASE("quasinorm closed forms") {
  for (double p : {0.5, 1.0, 2.0, 7.0}) {
    const TrigPoly e3({cd(0.0), cd(0.0), cd(0.0), cd(0.0), cd(0.0), cd(0.0), cd(1.0)});
    CHECK(quasinorm(e3, p) == doctest::Approx(std::pow(kTwoPi, 1.0 / p)).epsilon(1e-12));
    CHECK(quasinorm(e3, kInf) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const TrigPoly d2 = dirichlet(2);
  CHECK(quasinorm(d2, 2.0) == doctest::Approx(std::sqrt(10.0 * kPi)).epsilon(1e-12));
  CHECK(quasinorm(d2, kInf) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK_THROWS(quasinorm(d2, 0.0));
}

TEST_CASE("quasinorm sup-norm grid bound is certified") {
  // max_true - max_grid <= pi n max_grid / M: halving the excess when M doubles.
  std::mt19937_64 rng(11);
  const int n = 24;
  const TrigPoly t = random_real_poly(n, rng);
  const double ref = quasinorm(t, kInf, 1 << 16);
  for (int M : {64, 128, 256}) {
    const double v = quasinorm(t, kInf, M);
    CHECK(v <= ref * (1.0 + 1e-12));
    CHECK(ref - v <= kPi * n * v / M);
  }
}

TEST_CASE("Parseval identity at trapezoid-exact grids") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const TrigPoly t = random_real_poly(n, rng);
    double s2 = 0.0;
    for (const cd& c : t.coeffs()) s2 += std::norm(c);
    for (int M : {4 * (2 * n + 1), 8 * (2 * n + 1)}) {
      const double qn = quasinorm(t, 2.0, M);
      CHECK(qn * qn == doctest::Approx(kTwoPi * s2).epsilon(1e-9));
    }
  }
}

TEST_CASE("normalized p-norms are nondecreasing in p") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly t = random_real_poly(6, rng);
    double prev = 0.0;
    for (double p : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double v = quasinorm(t, p) * std::pow(kTwoPi, -1.0 / p);
      CHECK(v >= prev * (1.0 - 1e-9));
      prev = v;
    }
    CHECK(quasinorm(t, kInf) >= prev * (1.0 - 1e-9));
  }
}

TEST_CASE("Bernstein inequality at p = q = infinity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const TrigPoly t = random_real_poly(n, rng);
    CHECK(quasinorm(weyl_derivative(t, 1.0), kInf) <= n * quasinorm(t, kInf) * (1.0 + 1e-9));
  }
}

TEST_CASE("parity_project splits exponentials and is idempotent") {
  const TrigPoly e1({cd(0.0), cd(0.0), cd(1.0)});
  const TrigPoly even = parity_project(e1, Parity::Even);
  const TrigPoly odd = parity_project(e1, Parity::Odd);
  CHECK(std::abs(even.coeff(1) - cd(0.5)) < 1e-14);   // cos x
  CHECK(std::abs(even.coeff(-1) - cd(0.5)) < 1e-14);
  CHECK(std::abs(odd.coeff(1) - cd(0.5)) < 1e-14);    // i sin x
  CHECK(std::abs(odd.coeff(-1) - cd(-0.5)) < 1e-14);
  for (int k = -1; k <= 1; ++k) {
    CHECK(std::abs(even.coeff(k) + odd.coeff(k) - e1.coeff(k)) < 1e-14);
  }

  const TrigPoly cosx({cd(0.5), cd(0.0), cd(0.5)});
  const TrigPoly again = parity_project(cosx, Parity::Even);
  for (int k = -1; k <= 1; ++k) CHECK(std::abs(again.coeff(k) - cosx.coeff(k)) < 1e-14);
}

TEST_CASE("parity projection is norm-nonexpanding for p >= 1") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const TrigPoly t = random_real_poly(7, rng);
    for (double p : {1.0, 2.0, kInf}) {
      for (Parity kind : {Parity::Even, Parity::Odd, Parity::Real}) {
        CHECK(quasinorm(parity_project(t, kind), p) <= quasinorm(t, p) * (1.0 + 1e-9));
      }
    }
  }
}

TEST_CASE("default_grid honors the oversampling floors") {
  CHECK(default_grid(1, 1.0) >= 4096);
  CHECK(default_grid(200, 2.0) >= static_cast<int>(std::ceil(32.0 * 201 * 2.0)));
  CHECK(default_grid(1, kInf) >= 8192);
  CHECK(default_grid(300, kInf) >= 64 * 301);
  // Power-of-two rounding keeps the FFT synthesis path exact.
  for (int g : {default_grid(37, 0.5), default_grid(200, kInf)}) CHECK((g & (g - 1)) == 0);
}
