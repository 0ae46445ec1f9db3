#include "doctest.h"
#include "x0calc/error.hpp"
#include "x0calc/hecke_eis.hpp"

using namespace x0calc;

namespace {

const std::int64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

// A^T G - G A computed entry by entry on total operators.
bool symmetric_product(const EisOperator& a, const GramMatrix& g) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SymbolicReal lhs, rhs;
      for (std::size_t k = 0; k < n; ++k) {
        lhs += mul(a.at(k, i), g.at(k, j));
        rhs += mul(g.at(i, k), a.at(k, j));
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("T_2 on level 37 by hand") {
  const EisOperator t = t_hat(2, 37);
  CHECK(t.at(0, 0) == SymbolicReal(3));
  CHECK(t.at(1, 1) == SymbolicReal(3));
  CHECK(t.at(2, 2) == SymbolicReal(3));
  CHECK(t.at(0, 1) == SymbolicReal::log(2, Rational(6, 19)));
  const GramMatrix g = gram(37);
  // <T D, F> = <D, T F> = 3/2.
  const EisVector d = EisVector::unit(g.basis, EisBasis::kDinf), f = EisVector::unit(g.basis, EisBasis::kF);
  CHECK(pair(g, t.apply(d), f) == SymbolicReal(Rational(3, 2)));
  CHECK(pair(g, d, t.apply(f)) == SymbolicReal(Rational(3, 2)));
  CHECK(is_self_adjoint(t, g));
  CHECK(t.to_json()["matrix"][0][1] == "6/19*LOG(2)");
}

TEST_CASE("shift constants") {
  CHECK(hecke_shift(2, 1) == SymbolicReal::log(2, 12));
  CHECK(hecke_shift(5, 37) == SymbolicReal::log(5, Rational(48, 38)));
  CHECK_THROWS_AS(t_hat(37, 37), Error);
  CHECK_THROWS_AS(t_hat(4, 37), Error);
}

TEST_CASE("a non self-adjoint operator is detected") {
  const EisBasis b = eis_basis(1);
  std::vector<std::vector<SymbolicReal>> m(2, std::vector<SymbolicReal>(2));
  m[1][0] = 1;  // F -> DINF
  const EisOperator nil(b, m, {true, true});
  CHECK_FALSE(is_self_adjoint(nil, gram(1)));
  CHECK(is_self_adjoint(EisOperator::identity(b), gram(1)));
}

TEST_CASE("Atkin-Lehner involutions") {
  const EisOperator w35 = w_hat(35, 35), w5 = w_hat(5, 35);
  CHECK_FALSE(w35.column_defined(EisBasis::kDinf));
  CHECK(w35.at(2, 2) == SymbolicReal(-1));
  CHECK(w35.at(3, 3) == SymbolicReal(-1));
  CHECK(w5.at(3, 3) == SymbolicReal(1));
  CHECK(w35.compose(w35) == EisOperator::identity(w35.basis()).compose(w35.compose(w35)));
  const EisVector g5 = EisVector::unit(w35.basis(), 2);
  CHECK(w35.apply(w35.apply(g5)) == g5);
  CHECK_THROWS_AS(w35.apply(EisVector::unit(w35.basis(), EisBasis::kDinf)), Error);
  CHECK_THROWS_AS(w_hat(3, 35), Error);
  CHECK_THROWS_AS(w_hat(1, 35), Error);
  for (auto c : {DinfGConvention::IntersectionLemma, DinfGConvention::Orthogonal}) {
    CHECK(is_self_adjoint(w35, gram(35, c)));
    CHECK(is_self_adjoint(w5, gram(35, c)));
  }
  CHECK(commutator_is_zero(w5, w_hat(7, 35)));
  CHECK(commutator_is_zero(w5, t_hat(2, 35)));
}

TEST_CASE("self-adjointness and commutativity for squarefree N <= 60") {
  for (std::int64_t N = 1; N <= 60; ++N) {
    if (!is_squarefree(N)) continue;
    for (auto c : {DinfGConvention::IntersectionLemma, DinfGConvention::Orthogonal}) {
      const GramMatrix g = gram(N, c);
      std::vector<EisOperator> ops;
      for (std::int64_t l : kPrimes)
        if (N % l != 0) ops.push_back(t_hat(l, N));
      for (const auto& a : ops) {
        CAPTURE(N);
        CHECK(is_self_adjoint(a, g));
        CHECK(symmetric_product(a, g));
        for (const auto& b : ops) CHECK(commutator_is_zero(a, b));
      }
    }
  }
}
