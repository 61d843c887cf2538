#include "tdim/numbers.hpp"

#include <stdexcept>
#include <string>

namespace tdim {

namespace {

using wide = __int128;

wide two_pow_plus(int d) { return (wide{1} << d) + d; }

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d < 1)
    throw std::invalid_argument("rational denominator must be >= 1");
  if (n < 1)
    throw std::invalid_argument("rational numerator must be >= 1");
}

int f_of(Rational x) {
  if (x.num < x.den)
    throw std::invalid_argument("f is defined for x >= 1, got " + std::to_string(x.num) + "/" + std::to_string(x.den));
  int d = 1;
  while (wide{x.den} * two_pow_plus(d) <= wide{x.num})
    ++d;
  return d;
}

int g_of(std::int64_t n) {
  if (n < 2)
    throw std::invalid_argument("g is defined for n >= 2, got " + std::to_string(n));
  int d = 1;
  while (two_pow_plus(d) < wide{n})
    ++d;
  return d;
}

std::int64_t ell(int d) {
  if (d < 1 || d > 62)
    throw std::invalid_argument("ell requires 1 <= d <= 62, got " + std::to_string(d));
  return (std::int64_t{1} << (d - 1)) + d - 1;
}

int ceil_log2(std::int64_t c) {
  if (c < 1)
    throw std::invalid_argument("ceil_log2 requires c >= 1");
  int r = 0;
  while ((std::int64_t{1} << r) < c)
    ++r;
  return r;
}

} // namespace tdim
