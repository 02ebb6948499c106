#include <stdexcept>

#include "doctest.h"
#include "mislab/closed_forms.hpp"
#include "mislab/oracles.hpp"

using namespace mislab;

TEST_CASE("ell: base cases and brute-force values") {
  CHECK(ell(1) == 1);
  CHECK(ell(2) == 2);
  // Frozen from a partition search; re-derived below with the oracle.
  CHECK(ell(5) == 6);
  CHECK(ell(10) == 36);
  CHECK(oracle::ell(5) == 6);
  CHECK(oracle::ell(10) == 36);
  CHECK_THROWS_AS(ell(0), std::invalid_argument);
}

TEST_CASE("ell grows past 64 bits without loss") {
  // 3^80 = 147808829414345923316083210206383297601
  CHECK(to_string(ell(240)) == "147808829414345923316083210206383297601");
  CHECK(ell(241) == ell(240) / 3 * 4);
}

TEST_CASE("ell: strictly increasing and super-multiplicative") {
  for (std::size_t n = 1; n < 200; ++n) CHECK(ell(n) < ell(n + 1));
  for (std::size_t a = 1; a < 120; ++a) {
    for (std::size_t b = 1; a + b <= 120; ++b) REQUIRE(ell(a) * ell(b) <= ell(a + b));
  }
}

TEST_CASE("ell: cycle bound 2 ell(j-3) + ell(j-4) < ell(j)") {
  for (std::size_t j = 6; j <= 100; ++j) CHECK(2 * ell(j - 3) + ell(j - 4) < ell(j));
}

TEST_CASE("s_of: values and error") {
  CHECK(s_of(1) == 1);
  CHECK(s_of(2) == 2);
  CHECK(s_of(10) == 7);
  CHECK(s_of(3) == 3);
  CHECK(s_of(4) == 4);
  CHECK_THROWS_AS(s_of(0), std::invalid_argument);
}

TEST_CASE("s_of is a left inverse of ell") {
  for (std::size_t n = 1; n <= 200; ++n) CHECK(s_of(ell(n)) == n);
}

TEST_CASE("s_of equals min{n : ell(n) >= m} and is nondecreasing") {
  std::size_t n = 1;
  std::size_t prev = 0;
  for (std::size_t m = 1; m <= 10000; ++m) {
    while (ell(n) < m) ++n;
    REQUIRE(s_of(m) == n);
    REQUIRE(s_of(m) >= prev);
    prev = s_of(m);
  }
}

TEST_CASE("perrin") {
  CHECK(perrin(1) == 0);
  CHECK(perrin(4) == 2);
  CHECK(perrin(5) == 5);
  CHECK(perrin(10) == 17);
  CHECK_THROWS_AS(perrin(0), std::invalid_argument);
}

TEST_CASE("max_with_ones") {
  CHECK(max_with_ones(1) == 1);
  CHECK(max_with_ones(7) == 12);
  CHECK(max_with_ones(12) == 81);
  CHECK_THROWS_AS(max_with_ones(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(max_with_ones(n) == ell(n));
    CHECK(oracle::ell(n) == ell(n));
  }
}

TEST_CASE("parse_bignat") {
  CHECK(parse_bignat("0") == 0);
  CHECK(to_string(parse_bignat("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_bignat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_bignat("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bignat("12a"), std::invalid_argument);
}
