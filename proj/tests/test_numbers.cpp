#include "doctest.h"
#include "oracle.hpp"
#include "tdim/numbers.hpp"

using namespace tdim;

TEST_CASE("f, g and ell on documented points") {
  CHECK(f_of(Rational(6)) == 3);
  CHECK(ell(3) == 6);
  CHECK(g_of(8) == 3);
  CHECK(g_of(6) == 2);
  CHECK(f_of(Rational(19, 2)) == 3);
  CHECK(f_of(Rational(1)) == 1);
  CHECK(f_of(Rational(2)) == 1);
  CHECK(f_of(Rational(3)) == 2);
  CHECK(g_of(2) == 1);
  CHECK(g_of(3) == 1);
}

TEST_CASE("f, g and ell agree with direct search") {
  for (long long num = 1; num <= 400; ++num)
    for (long long den = 1; den <= 7; ++den)
      if (num >= den)
        REQUIRE(f_of(Rational(num, den)) == oracle::f_of(num, den));
  for (long long n = 2; n <= 5000; ++n)
    REQUIRE(g_of(n) == oracle::g_of(n));
  for (int d = 1; d <= 40; ++d)
    REQUIRE(ell(d) == oracle::ell(d));
}

TEST_CASE("f maps exactly [ell_d, ell_{d+1}) to d") {
  for (int d = 1; d <= 30; ++d) {
    CHECK(f_of(Rational(ell(d))) == d);
    CHECK(f_of(Rational(ell(d + 1) - 1)) == d);
    if (d >= 2)
      CHECK(ell(d) - ell(d - 1) == (1LL << (d - 2)) + 1);
  }
}

TEST_CASE("rational comparisons are exact near boundaries") {
  // 2^40 + 40 is the first value mapped to 41.
  const long long edge = (1LL << 40) + 40;
  CHECK(f_of(Rational(edge - 1)) == 40);
  CHECK(f_of(Rational(edge)) == 41);
  CHECK(f_of(Rational(3 * edge - 1, 3)) == 40);
  CHECK(f_of(Rational(3 * edge, 3)) == 41);
}

TEST_CASE("ceil log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
}

TEST_CASE("out-of-domain inputs are rejected") {
  CHECK_THROWS(Rational(0));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(-3, 2));
  CHECK_THROWS(f_of(Rational(1, 2)));
  CHECK_THROWS(g_of(1));
  CHECK_THROWS(ell(0));
}
