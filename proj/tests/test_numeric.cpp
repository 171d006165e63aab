#include <random>

#include "doctest.h"
#include "georec/rational.hpp"
#include "georec/series.hpp"

using namespace georec;

namespace {

using SeriesR = TruncatedSeries<Rational>;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

SeriesR random_series(std::mt19937_64& rng, long order) {
  SeriesR s(order, Rational(0));
  for (long m = 0; m <= order; ++m) s[m] = random_rational(rng);
  return s;
}

}  // namespace

TEST_CASE("binomial values and range handling") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 9) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence up to n = 30") {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("rational parsing and canonical printing") {
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-0.5") == make_rational(-1, 2));
  CHECK(to_string(parse_rational("10/30")) == "1/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2/3"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(make_rational(2, -4) == make_rational(-1, 2));
}

TEST_CASE("series multiplication on small fixed examples") {
  SeriesR a(2, Rational(0));  // 1 + w
  a[0] = 1;
  a[1] = 1;
  SeriesR b(2, Rational(0));  // 1 - w
  b[0] = 1;
  b[1] = -1;
  const SeriesR ab = series_mul(a, b);
  CHECK(ab[0] == 1);
  CHECK(ab[1] == 0);
  CHECK(ab[2] == -1);

  SeriesR c(2, Rational(0));  // 1 + w + w^2
  c[0] = 1;
  c[1] = 1;
  c[2] = 1;
  SeriesR one(2, Rational(0));
  one[0] = 1;
  CHECK(series_mul(c, one) == c);

  SeriesR w(1, Rational(0));
  w[1] = 1;
  const SeriesR ww = series_mul(w, w);  // w^2 truncated away
  CHECK(ww[0] == 0);
  CHECK(ww[1] == 0);

  SeriesR other(3, Rational(0));
  CHECK_THROWS_AS(series_mul(a, other), std::invalid_argument);
  CHECK_THROWS_AS(SeriesR(-1, Rational(0)), std::invalid_argument);
}

TEST_CASE("series ring laws on random coefficients") {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 40; ++round) {
    const long order = static_cast<long>(rng() % 8) + 1;
    const SeriesR a = random_series(rng, order);
    const SeriesR b = random_series(rng, order);
    const SeriesR c = random_series(rng, order);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("geometric_factor coefficients and inverse property") {
  const auto half = geometric_factor(make_rational(1, 2), 3);
  CHECK(half[0] == 1);
  CHECK(half[1] == make_rational(1, 2));
  CHECK(half[2] == make_rational(1, 4));
  CHECK(half[3] == make_rational(1, 8));

  const auto zero = geometric_factor(Rational(0), 2);
  CHECK(zero[0] == 1);
  CHECK(zero[1] == 0);
  CHECK(zero[2] == 0);

  const auto ones = geometric_factor(Rational(1), 2);
  CHECK(ones[0] == 1);
  CHECK(ones[1] == 1);
  CHECK(ones[2] == 1);

  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    const Rational a = random_rational(rng);
    const long order = static_cast<long>(rng() % 7) + 1;
    SeriesR linear(order, Rational(0));  // 1 - a w
    linear[0] = 1;
    linear[1] = Rational(-a);
    SeriesR one(order, Rational(0));
    one[0] = 1;
    CHECK(geometric_factor(a, order) * linear == one);
  }
}

// Euler-transform check on 1/(1 - a z): the n-th coefficient a^n equals
// (-1)^n [w^n] (1 - w)^n / (1 - (1 - a) w).
TEST_CASE("binomial transform identity for geometric series") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    const Rational a = random_rational(rng);
    for (long n = 1; n <= 8; ++n) {
      SeriesR one_minus_w(n, Rational(0));
      one_minus_w[0] = 1;
      one_minus_w[1] = -1;
      SeriesR power(n, Rational(0));
      power[0] = 1;
      for (long i = 0; i < n; ++i) power = power * one_minus_w;
      const SeriesR rhs = power * geometric_factor(Rational(1 - a), n);
      Rational expect = pow_rational(a, static_cast<unsigned long>(n));
      Rational got = rhs[n];
      if (n % 2 != 0) got = -got;
      CHECK(got == expect);
    }
  }
}
