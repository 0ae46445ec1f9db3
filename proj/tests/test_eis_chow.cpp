#include "doctest.h"
#include "x0calc/eis_chow.hpp"
#include "x0calc/error.hpp"

using namespace x0calc;

namespace {

const DinfGConvention kBoth[] = {DinfGConvention::IntersectionLemma, DinfGConvention::Orthogonal};

}  // namespace

TEST_CASE("basis layout") {
  const EisBasis b = eis_basis(35);
  CHECK(b.dim() == 4);
  CHECK(b.label(0) == "F");
  CHECK(b.label(1) == "DINF");
  CHECK(b.label(2) == "G(5)");
  CHECK(b.label(3) == "G(7)");
  CHECK(b.g_index(7) == 3);
  CHECK_THROWS_AS(b.g_index(3), Error);
  CHECK(eis_basis(1).dim() == 2);
}

TEST_CASE("Gram matrix of level 37 by hand") {
  const GramMatrix g = gram(37);
  CHECK(g.at(0, 0).is_zero());
  CHECK(g.at(0, 1) == SymbolicReal(Rational(1, 2)));
  CHECK(g.at(1, 1) == SymbolicReal::kappa(Rational(72, 19)));
  CHECK(g.at(1, 2) == SymbolicReal::log(37));
  CHECK(g.at(2, 2) == SymbolicReal::log(37, -12));
  CHECK(g.at(0, 2).is_zero());
  CHECK(g.is_symmetric());
  REQUIRE(g.diagnostics.size() == 1);
  CHECK(g.diagnostics[0].rfind("DinfGPairingNonzero", 0) == 0);

  const GramMatrix o = gram(37, DinfGConvention::Orthogonal);
  CHECK(o.at(1, 2).is_zero());
  CHECK(o.diagnostics.empty());
}

TEST_CASE("level one") {
  const GramMatrix g = gram(1);
  CHECK(g.at(1, 1) == SymbolicReal::kappa(144));
  // Genus 0: omega = -2 DINF, and no fibers.
  CHECK(omega_eis_sq(1) == SymbolicReal::kappa(576));
}

TEST_CASE("omega_Eis^2 closed forms") {
  for (auto c : kBoth) {
    CHECK(omega_eis_sq(37, c) == SymbolicReal::kappa(Rational(288, 19)) + SymbolicReal::log(37, Rational(-1, 3)));
    CHECK(omega_eis_sq(35, c) == SymbolicReal::kappa(48) - SymbolicReal::log(5) - SymbolicReal::log(7));
    CHECK(w_square(37, c) == SymbolicReal::log(37, Rational(-1, 3)));
  }
  const EvalResult v = omega_eis_sq(37).evaluate(12);
  CHECK(std::abs(v.value - -4.342654535042629250593) < 1e-12);
}

TEST_CASE("W-hat coordinates") {
  const EisVector w = w_vector(37);
  CHECK(w.coords[2] == SymbolicReal(Rational(-1, 6)));
  CHECK(w.coords[0] == SymbolicReal::log(37, Rational(1, 3)));
  CHECK(pair(w, EisVector::unit(w.basis, EisBasis::kDinf)).is_zero());
  CHECK(w_vector(37, DinfGConvention::Orthogonal).coords[0].is_zero());
}

TEST_CASE("fiber classes reproduce the intersection lemma") {
  for (std::int64_t N : {37, 35, 66, 143}) {
    const auto data = invariants(N);
    const auto denoms = fiber_denominators(data);
    for (std::size_t k = 0; k < data.primes.size(); ++k) {
      const std::int64_t p = data.primes[k];
      const FiberClasses fc = fiber_classes(N, p);
      const EisVector dinf = EisVector::unit(eis_basis(N), EisBasis::kDinf);
      CAPTURE(N);
      CAPTURE(p);
      CHECK(pair(fc.x_inf, fc.x_zero) == SymbolicReal::log(p, denoms[k]));
      CHECK(pair(dinf, fc.x_inf) == SymbolicReal::log(p));
      CHECK(pair(dinf, fc.x_zero).is_zero());
      // div(p) = X_inf + X_0 - 2 log p F pairs to zero with everything.
      const EisVector div = fc.x_inf + fc.x_zero + EisVector::unit(eis_basis(N), EisBasis::kF, SymbolicReal::log(p, -2));
      for (std::size_t i = 0; i < div.basis.dim(); ++i) CHECK(pair(div, EisVector::unit(div.basis, i)).is_zero());
    }
  }
}

TEST_CASE("omega_Eis^2 matches the Gram pairing and is convention independent") {
  for (std::int64_t N = 1; N <= 300; ++N) {
    if (!is_squarefree(N)) continue;
    CAPTURE(N);
    const auto data = invariants(N);
    const EisVector om = omega_eis_vector(N);
    const SymbolicReal v = omega_eis_sq(N);
    CHECK(pair(om, om) == v);
    CHECK(omega_eis_sq(N, DinfGConvention::Orthogonal) == v);
    // Cross term <(2g-2) DINF, W> vanishes.
    const EisVector w = w_vector(N);
    CHECK(pair(Rational(2 * data.genus - 2) * EisVector::unit(w.basis, EisBasis::kDinf), w).is_zero());
  }
}

TEST_CASE("JSON forms") {
  const auto j = gram(37).to_json(10);
  CHECK(j["basis"].dump() == "[\"F\",\"DINF\",\"G(37)\"]");
  CHECK(j["entries"][1][1] == "72/19*KAPPA");
  CHECK(j["convention"] == "intersection-lemma");
  CHECK(w_vector(37).to_json().dump() == "{\"F\":\"1/3*LOG(37)\",\"DINF\":\"0\",\"G(37)\":\"-1/6\"}");
}
