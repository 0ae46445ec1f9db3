#include "doctest.h"
#include "x0calc/error.hpp"
#include "x0calc/symbolic.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <random>

using namespace x0calc;
using Dec = boost::multiprecision::cpp_dec_float_50;

namespace {

// Frozen from an mpmath evaluation of zeta(-1)/2 + zeta'(-1) at 30 digits.
constexpr double kKappa = -0.20708781036711759588;

// zeta(s) by Euler-Maclaurin with cutoff n and Bernoulli corrections.
Dec zeta_em(const Dec& s, int n = 40) {
  static const double b2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
                               -3617.0 / 510, 43867.0 / 798, -174611.0 / 330, 854513.0 / 138};
  Dec sum = 0;
  for (int k = 1; k < n; ++k) sum += boost::multiprecision::pow(Dec(k), -s);
  const Dec N = n;
  sum += boost::multiprecision::pow(N, 1 - s) / (s - 1) + boost::multiprecision::pow(N, -s) / 2;
  Dec rising = s;  // s (s+1) ... (s + 2k - 2)
  Dec fact = 2;
  for (int k = 1; k <= 11; ++k) {
    sum += Dec(b2k[k - 1]) / fact * rising * boost::multiprecision::pow(N, -s - 2 * k + 1);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

}  // namespace

TEST_CASE("KAPPA: finite differences of an Euler-Maclaurin zeta") {
  const Dec h("1e-8");
  const Dec s0 = -1;
  // Fourth-order central difference.
  const Dec d = (-zeta_em(s0 + 2 * h) + 8 * zeta_em(s0 + h) - 8 * zeta_em(s0 - h) + zeta_em(s0 - 2 * h)) / (12 * h);
  const Dec z = zeta_em(s0);
  CHECK(std::abs(z.convert_to<double>() + 1.0 / 12) < 1e-30);
  const double kappa = (z / 2 + d).convert_to<double>();
  CHECK(std::abs(kappa - kKappa) < 1e-15);
  CHECK(std::abs(SymbolicReal::kappa().evaluate(20).value - kappa) < 1e-15);
}

TEST_CASE("evaluate") {
  const EvalResult k = kappa_value(30);
  CHECK(std::abs(k.value - kKappa) < 1e-16);
  CHECK(k.error_bound < 1e-30);
  CHECK(k.decimal.rfind("-0.20708781036711759588", 0) == 0);

  const SymbolicReal x = SymbolicReal::kappa(Rational(288, 19)) + SymbolicReal::log(37, Rational(-1, 3));
  CHECK(std::abs(x.evaluate(15).value - (288.0 / 19 * kKappa - std::log(37.0) / 3)) < 1e-13);
  CHECK(SymbolicReal(Rational(1, 3)).evaluate(10).decimal == "0.3333333333");
  CHECK_THROWS_AS(x.evaluate(41), Error);
  CHECK_THROWS_AS(x.evaluate(0), Error);
}

TEST_CASE("text and JSON round trips") {
  const SymbolicReal x = SymbolicReal::kappa(Rational(288, 19)) + SymbolicReal::log(37, Rational(-1, 3));
  CHECK(x.to_string() == "288/19*KAPPA - 1/3*LOG(37)");
  CHECK(SymbolicReal::parse(x.to_string()) == x);
  CHECK(x.to_json().dump() == "{\"KAPPA\":\"288/19\",\"LOG(37)\":\"-1/3\"}");
  CHECK(SymbolicReal::from_json(nlohmann::json::parse(x.to_json().dump())) == x);
  CHECK(SymbolicReal::log(2, 12).to_string() == "12*LOG(2)");
  CHECK(SymbolicReal::log(5).to_string() == "LOG(5)");
  CHECK(SymbolicReal().to_string() == "0");
  CHECK(SymbolicReal(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(SymbolicReal::parse("1/2 + KAPPA - LOG(2)") ==
        SymbolicReal(Rational(1, 2)) + SymbolicReal::kappa() - SymbolicReal::log(2));
  CHECK_THROWS_AS(SymbolicReal::parse("LOG(4)"), Error);
  CHECK_THROWS_AS(SymbolicReal::parse("KAPPA +"), Error);
  CHECK(Symbol::parse("LOG(37)") == Symbol::log(37));
}

TEST_CASE("linear algebra is exact") {
  const SymbolicReal a = SymbolicReal::log(2, Rational(1, 3));
  CHECK((a - a).is_zero());
  CHECK((a * Rational(3)).coefficient(Symbol::log(2)) == 1);
  CHECK(mul(SymbolicReal(Rational(2)), a) == a * Rational(2));
  CHECK_THROWS_AS(mul(a, a), Error);
  CHECK(SymbolicReal(Rational(5, 7)).as_rational() == Rational(5, 7));
  CHECK(!a.as_rational());
}

TEST_CASE("property: parse . to_string is the identity on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30), pick(0, 4);
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 37};
  for (int trial = 0; trial < 300; ++trial) {
    SymbolicReal x;
    for (int k = 0; k < 3; ++k) {
      const Rational q(num(rng), den(rng));
      switch (pick(rng)) {
        case 0: x += SymbolicReal(q); break;
        case 1: x += SymbolicReal::kappa(q); break;
        default: x += SymbolicReal::log(primes[pick(rng)], q); break;
      }
    }
    CHECK(SymbolicReal::parse(x.to_string()) == x);
    CHECK(SymbolicReal::from_json(nlohmann::json::parse(x.to_json().dump())) == x);
  }
}
