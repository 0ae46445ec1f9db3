#include "doctest.h"
#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"
#include "x0calc/modular_forms.hpp"

#include <numeric>

using namespace x0calc;

namespace {

// prod_{n >= 1} (1 - q^n)^24 by naive repeated multiplication, coefficients of q^0..q^(M-1).
std::vector<BigInt> naive_delta_series(std::size_t M) {
  std::vector<BigInt> s(M, BigInt(0));
  s[0] = 1;
  for (std::size_t n = 1; n < M; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = M - 1; i >= n; --i) s[i] -= s[i - n];
  return s;
}

}  // namespace

TEST_CASE("Ramanujan tau") {
  const QExpansion d = eta_expand(delta_quotient(), 120);
  CHECK(d.weight == 12);
  CHECK(d.level == 1);
  const long long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  for (int n = 1; n <= 10; ++n) CHECK(d.a(n) == tau[n - 1]);
  const auto naive = naive_delta_series(120);
  for (std::size_t n = 1; n <= 120; ++n) CHECK(d.a(n) == naive[n - 1]);
  CHECK(d.a(100) == BigInt("37534859200"));
}

TEST_CASE("tau is multiplicative and satisfies the prime-power recursion") {
  const QExpansion d = eta_expand(delta_quotient(), 600);
  for (std::size_t m = 1; m <= 24; ++m)
    for (std::size_t n = 1; n <= 24; ++n)
      if (std::gcd(m, n) == 1) CHECK(d.a(m * n) == d.a(m) * d.a(n));
  // tau(p^2) = tau(p)^2 - p^11.
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    CHECK(d.a(p * p) == d.a(p) * d.a(p) - boost::multiprecision::pow(BigInt(p), 11));
  }
}

TEST_CASE("level-11 eta product") {
  const EtaQuotient e = level11_quotient();
  CHECK(e.to_string() == "eta(1)^2*eta(11)^2");
  CHECK(e.weight() == 2);
  CHECK(e.leading_power() == 1);
  CHECK(e.level() == 11);
  const QExpansion f = eta_expand(e, 200);
  const long long head[] = {1, -2, -1, 2, 1, 2, -2, 0, -2, -2};
  for (int n = 1; n <= 10; ++n) CHECK(f.a(n) == head[n - 1]);
  for (std::int64_t l : {2, 3, 5, 7, 13}) {
    const QExpansion t = hecke_q(l, f);
    REQUIRE(t.precision() == 200 / static_cast<std::size_t>(l));
    for (std::size_t n = 1; n <= t.precision(); ++n) CHECK(t.a(n) == f.a(l) * f.a(n));
  }
  CHECK_THROWS_AS(hecke_q(11, f), Error);
  CHECK_THROWS_AS(hecke_q(4, f), Error);
  CHECK_THROWS_AS(hecke_q(7, eta_expand(e, 5)), Error);
}

TEST_CASE("eta quotient parsing and rejection") {
  CHECK(EtaQuotient::parse("eta(1)^2*eta(11)^2").to_string() == "eta(1)^2*eta(11)^2");
  CHECK(EtaQuotient::parse("eta(2)^(-1)*eta(1)^3").factors.size() == 2);
  CHECK(EtaQuotient::parse("eta(4)^-1").factors[0].second == -1);
  CHECK(EtaQuotient::parse("eta(5)").to_string() == "eta(5)");
  CHECK_THROWS_AS(EtaQuotient::parse("eta(0)^2"), Error);
  CHECK_THROWS_AS(EtaQuotient::parse("eta(1)^2 *"), Error);

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { eta_expand(EtaQuotient::parse("eta(1)"), 10); }) == ErrorCode::FractionalLeadingPower);
  CHECK(code_of([] { eta_expand(EtaQuotient::parse("eta(1)^3*eta(7)^3"), 10); }) == ErrorCode::WeightRejected);
  CHECK(code_of([] { eta_expand(delta_quotient(), 0); }) == ErrorCode::PrecisionTooSmall);

  // Negative exponent: eta(2)^16 / eta(1)^8 = sum_n (sum_{d | n, n/d odd} d^3) q^n.
  const QExpansion g = eta_expand(EtaQuotient::parse("eta(1)^-8*eta(2)^16"), 6);
  CHECK(g.a(1) == 1);
  CHECK(g.a(2) == 8);
  CHECK(g.a(3) == 28);
}

TEST_CASE("Heegner points") {
  const HeegnerDivisor h = heegner_points(37, -4);
  CHECK(h.roots == std::vector<std::int64_t>{12, 62});
  CHECK(h.weight_per_point == Rational(1, 2));
  CHECK(h.degree() == 0);
  CHECK(heegner_points(37, -3).count() == 2);
  CHECK(heegner_points(143, -4).count() == 0);
  CHECK(heegner_points(143, -3).count() == 0);
  CHECK(heegner_points(1, -4).count() == 1);
  CHECK_THROWS_AS(heegner_points(15, -4), Error);
  CHECK_THROWS_AS(heegner_points(49, -4), Error);
  CHECK_THROWS_AS(heegner_points(37, -7), Error);
  for (std::int64_t N = 1; N <= 200; ++N) {
    if (!is_squarefree(N) || std::gcd(N, std::int64_t{6}) != 1) continue;
    CHECK(static_cast<std::int64_t>(heegner_points(N, -4).count()) == invariants(N).nu2);
    CHECK(static_cast<std::int64_t>(heegner_points(N, -3).count()) == invariants(N).nu3);
  }
}

TEST_CASE("canonical divisor decomposition") {
  const CanonicalDecomposition c = canonical_decomposition(37);
  CHECK(c.mult_infty == 2);
  CHECK(c.degree() == 2);
  const CanonicalDecomposition d = canonical_decomposition(143);
  CHECK(d.h_i.count() == 0);
  CHECK(d.h_j.count() == 0);
  CHECK(d.degree() == 2 * invariants(143).genus - 2);
  CHECK(c.to_json()["N"] == 37);
}
