#include <doctest.h>

#include <cmath>
#include <random>

#include "bn/hardy.hpp"

using namespace bn;

namespace {

DiscreteSeq delta0() { return DiscreteSeq{0, {cd(1.0)}}; }
DiscreteSeq delta01() { return DiscreteSeq{0, {cd(1.0), cd(-1.0)}}; }

DiscreteSeq random_seq(int lo, int len, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  DiscreteSeq a;
  a.offset = lo;
  a.values.resize(static_cast<size_t>(len));
  for (cd& v : a.values) v = cd(gauss(rng), gauss(rng));
  return a;
}

}  // namespace

TEST_CASE("hilbert transform closed forms") {
  const DiscreteSeq d0 = delta0();
  CHECK(std::abs(hilbert_at(d0, 0, OffsetKind::Integer)) < 1e-15);
  for (int m : {1, -1, 5, -7}) {
    CHECK(hilbert_at(d0, m, OffsetKind::Integer).real() == doctest::Approx(1.0 / m));
  }
  for (int m : {0, 1, -3}) {
    CHECK(hilbert_at(d0, m, OffsetKind::Half).real() == doctest::Approx(1.0 / (m + 0.5)));
  }

  const DiscreteSeq d01 = delta01();
  CHECK(hilbert_at(d01, 0, OffsetKind::Integer).real() == doctest::Approx(1.0));
  CHECK(hilbert_at(d01, 1, OffsetKind::Integer).real() == doctest::Approx(1.0));
  for (int m : {2, 5, -4}) {
    CHECK(hilbert_at(d01, m, OffsetKind::Integer).real() ==
          doctest::Approx(1.0 / m - 1.0 / (m - 1)));
  }
}

TEST_CASE("hilbert window matches pointwise sums and tail model decays") {
  std::mt19937_64 rng(61);
  const DiscreteSeq a = random_seq(-3, 8, rng);
  const HilbertResult h = hilbert(a, OffsetKind::Integer, 64);
  for (int m = h.window.lo(); m <= h.window.hi(); ++m) {
    CHECK(std::abs(h.window.at(m) - hilbert_at(a, m, OffsetKind::Integer)) < 1e-12);
  }
  CHECK(h.tail.first_moment_index == 0);  // random sums do not vanish
  CHECK(h.tail.abs_sum > 0.0);
}

TEST_CASE("hp_quasinorm divergence decisions") {
  CHECK(!hp_quasinorm(delta0(), 1.0).finite);
  const HpNorm fin = hp_quasinorm(delta01(), 1.0);
  CHECK(fin.finite);
  CHECK(fin.value > 0.0);
  CHECK(!hp_quasinorm(delta01(), 0.5).finite);
}

TEST_CASE("hp_quasinorm of delta0 - delta1 at p = 1 matches direct summation") {
  const DiscreteSeq a = delta01();
  const HpNorm h = hp_quasinorm(a, 1.0);
  double direct = 2.0;  // ||a||_1
  for (int m = -2000000; m <= 2000000; ++m) {
    if (m == 0 || m == 1) {
      direct += 1.0;
      continue;
    }
    direct += std::abs(1.0 / m - 1.0 / (m - 1.0));
  }
  CHECK(h.value == doctest::Approx(direct).epsilon(1e-5));
}

TEST_CASE("moments closed forms and recentring") {
  const auto m01 = moments(delta01(), 2);
  CHECK(std::abs(m01[0]) < 1e-15);
  CHECK(m01[1].real() == doctest::Approx(-1.0));

  std::mt19937_64 rng(67);
  const DiscreteSeq a = random_seq(-2, 6, rng);
  DiscreteSeq b = a;
  b.offset += 5;  // same values shifted by 5
  const auto ma = moments(a, 4);
  const auto mb = moments(b, 4);
  for (int j = 0; j <= 4; ++j) {
    cd expect(0.0);
    double binom = 1.0;  // C(j, i)
    for (int i = 0; i <= j; ++i) {
      expect += binom * std::pow(5.0, j - i) * ma[static_cast<size_t>(i)];
      binom = binom * (j - i) / (i + 1.0);
    }
    CHECK(std::abs(mb[static_cast<size_t>(j)] - expect) < 1e-8);
  }
}

TEST_CASE("validate_atom on hand-built examples") {
  DiscreteSeq two{0, {cd(0.5), cd(-0.5)}};
  const AtomCertificate c1 = validate_atom(two, 0.0, 1.0, 1.0);
  CHECK(c1.valid);
  CHECK(c1.j0 == 0);
  CHECK(c1.sup_norm == doctest::Approx(0.5));

  const AtomCertificate c2 = validate_atom(two, 0.0, 1.0, 0.5);
  CHECK(!c2.valid);  // first moment -1/2 does not vanish
  CHECK(c2.j0 == 1);

  // Four-point sequence with moments 0 and 1 vanishing: solve the 2x4 system.
  // a = t*(1,-3,3,-1) annihilates both moments (second difference structure).
  const double t = 1.0 / (3.0 * 16.0);  // sup = 3t <= |I|^{-2} = 1/16 with slack
  DiscreteSeq four{0, {cd(t), cd(-3.0 * t), cd(3.0 * t), cd(-t)}};
  const AtomCertificate c3 = validate_atom(four, 0.0, 4.0, 0.5);
  CHECK(c3.valid);

  CHECK_THROWS(validate_atom(two, 0.0, 0.5, 1.0));  // interval shorter than 1
}

TEST_CASE("random atoms validate and have uniformly bounded quasinorms") {
  std::mt19937_64 rng(71);
  for (double p : {1.0 / 3.0, 0.5, 1.0}) {
    double cp = 0.0, chc = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      double lo = 0.0, hi = 0.0;
      const DiscreteSeq a = random_atom(p, 32, rng, &lo, &hi);
      const AtomCertificate cert = validate_atom(a, lo, hi, p);
      CHECK(cert.valid);
      double lp = 0.0;
      for (const cd& v : a.values) lp += std::pow(std::abs(v), p);
      cp = std::max(cp, std::pow(lp, 1.0 / p));
      const HpNorm hhalf = hp_quasinorm(a, p, OffsetKind::Half, 2000);
      CHECK(hhalf.finite);
      chc = std::max(chc, hhalf.transform_p);
    }
    CHECK(cp <= 2.0);    // recorded C'_p
    CHECK(chc <= 40.0);  // recorded C_p
  }
}

TEST_CASE("integer and half-offset quasinorms are equivalent on atoms") {
  std::mt19937_64 rng(73);
  double lo_band = kInf, hi_band = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    double lo = 0.0, hi = 0.0;
    const DiscreteSeq a = random_atom(0.5, 24, rng, &lo, &hi);
    const HpNorm hint = hp_quasinorm(a, 0.5, OffsetKind::Integer, 2000);
    const HpNorm hhalf = hp_quasinorm(a, 0.5, OffsetKind::Half, 2000);
    REQUIRE(hint.finite);
    REQUIRE(hhalf.finite);
    const double b = hhalf.value / hint.value;
    lo_band = std::min(lo_band, b);
    hi_band = std::max(hi_band, b);
  }
  CHECK(lo_band > 0.05);
  CHECK(hi_band < 20.0);
}

TEST_CASE("window doubling barely moves the quasinorm") {
  std::mt19937_64 rng(79);
  double lo = 0.0, hi = 0.0;
  const DiscreteSeq a = random_atom(0.5, 16, rng, &lo, &hi);
  const HpNorm w1 = hp_quasinorm(a, 0.5, OffsetKind::Integer, 5000);
  const HpNorm w2 = hp_quasinorm(a, 0.5, OffsetKind::Integer, 10000);
  REQUIRE(w1.finite);
  REQUIRE(w2.finite);
  CHECK(std::abs(w1.value / w2.value - 1.0) <= 1e-5);
}

TEST_CASE("sinc synthesis interpolates and matches the shifted transform") {
  std::mt19937_64 rng(83);
  const DiscreteSeq a = random_seq(-4, 9, rng);
  const SincSynthesis f = synthesize_f_a(a);
  for (int m = -7; m <= 7; ++m) {
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(f.eval(kPi * m) - sgn * a.at(m)) < 1e-10);
  }
  for (int m = -8; m <= 8; ++m) {
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const cd lhs = f.eval(kPi * (m + 0.5));
    const cd rhs = sgn / kPi * hilbert_at(a, m, OffsetKind::Half);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("sampled p-sums equal coefficient sums and bound the integral norm") {
  std::mt19937_64 rng(89);
  const DiscreteSeq a = random_seq(0, 6, rng);
  const SincSynthesis f = synthesize_f_a(a);
  for (double p : {0.5, 1.0, 2.0}) {
    double lp = 0.0;
    for (const cd& v : a.values) lp += std::pow(std::abs(v), p);
    CHECK(f.sampled_p_sum(p) == doctest::Approx(std::pow(lp, 1.0 / p)).epsilon(1e-10));
    const double trunc = f.truncated_norm(p, 60.0);
    const double band = trunc / (std::pow(kTwoPi, 1.0 / p) * f.sampled_p_sum(p));
    CHECK(band > 0.02);
    CHECK(band < 5.0);
  }
}

TEST_CASE("atom fourier moment scaling") {
  // Two-point p = 1 atom: value * s bounded.
  DiscreteSeq two{0, {cd(0.5), cd(-0.5)}};
  double worst1 = 0.0;
  for (int s = 1; s <= 40; ++s) {
    worst1 = std::max(worst1, atom_fourier_moment(two, 0.0, 1.0, s, 1.0) * s);
  }
  CHECK(worst1 < 20.0);

  // p = 1/2 atom with two vanishing moments: value * s^2 bounded.
  std::mt19937_64 rng(97);
  double lo = 0.0, hi = 0.0;
  const DiscreteSeq a = random_atom(0.5, 8, rng, &lo, &hi);
  double worst2 = 0.0;
  for (int s = 1; s <= 40; ++s) {
    worst2 = std::max(worst2, atom_fourier_moment(a, lo, hi, s, 0.5) * s * s);
  }
  CHECK(worst2 < 50.0);
}
