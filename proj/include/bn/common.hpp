#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bn {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double x) { return x == kInf; }

// Smallest power of two >= n (n >= 1).
inline int next_pow2(int n) {
  int m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace bn
