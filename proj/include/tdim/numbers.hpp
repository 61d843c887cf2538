#pragma once

#include <cstdint>

namespace tdim {

/// Positive rational num/den. All comparisons are exact integer arithmetic.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
};

/// Smallest d >= 1 with 2^d + d > x. Requires x >= 1.
int f_of(Rational x);

/// Smallest d >= 1 with 2^d + d >= n. Requires n >= 2.
int g_of(std::int64_t n);

/// 2^(d-1) + d - 1, the smallest value f maps to d. Requires d >= 1.
std::int64_t ell(int d);

/// ceil(log2(c)) for c >= 1.
int ceil_log2(std::int64_t c);

} // namespace tdim
