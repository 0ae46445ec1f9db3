#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "x0calc/gamma0.hpp"
#include "x0calc/symbolic.hpp"

namespace x0calc {

/// Ordered basis [F, DINF, G(p_1), ..., G(p_k)] of the Eisenstein subspace of
/// the arithmetic Chow group of X_0(N), with p_1 < ... < p_k the primes of N.
///   F      the class (0, 1)
///   DINF   the compactified cusp divisor (D_inf, g_inf)
///   G(p)   X_p^inf - X_p^0, difference of the two components of the fiber at p
struct EisBasis {
  std::int64_t N = 1;
  std::vector<std::int64_t> primes;

  static constexpr std::size_t kF = 0;
  static constexpr std::size_t kDinf = 1;

  std::size_t dim() const { return 2 + primes.size(); }
  std::size_t g_index(std::int64_t p) const;  // throws NotADivisor
  std::string label(std::size_t i) const;

  friend bool operator==(const EisBasis&, const EisBasis&) = default;
};

EisBasis eis_basis(std::int64_t N);

/// Value of the pairing <DINF, G(p)>. The intersection lemma ingredients
/// <D_inf, X_p^inf> = log p and <D_inf, X_p^0> = 0 force LOG(p); the orthogonal
/// sum notation for the Eisenstein space would give 0. Both are supported so
/// that results insensitive to the entry can be checked under each.
enum class DinfGConvention { IntersectionLemma, Orthogonal };

std::string convention_name(DinfGConvention c);

/// Coordinates on an EisBasis. The F coordinate may be a symbolic real (a
/// rational combination of logarithms); F pairs only with DINF, against a
/// rational entry, so pairings remain exact.
struct EisVector {
  EisBasis basis;
  std::vector<SymbolicReal> coords;

  static EisVector zero(const EisBasis& basis);
  static EisVector unit(const EisBasis& basis, std::size_t index, const SymbolicReal& coef = 1);

  EisVector& operator+=(const EisVector& other);
  friend EisVector operator+(EisVector a, const EisVector& b) { return a += b; }
  friend EisVector operator*(const Rational& q, EisVector v) {
    for (auto& c : v.coords) c *= q;
    return v;
  }
  friend bool operator==(const EisVector&, const EisVector&) = default;

  nlohmann::ordered_json to_json() const;
};

struct GramMatrix {
  EisBasis basis;
  DinfGConvention convention = DinfGConvention::IntersectionLemma;
  std::vector<std::vector<SymbolicReal>> entries;
  std::vector<std::string> diagnostics;

  const SymbolicReal& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
  bool is_symmetric() const;
  nlohmann::ordered_json to_json(int digits = 0) const;
};

/// Intersection pairing restricted to the Eisenstein space:
///   <F,F> = 0, <F,DINF> = 1/2, <F,G(p)> = 0, <DINF,DINF> = (144/psi) KAPPA,
///   <DINF,G(p)> = LOG(p) (or 0), <G(p),G(p)> = -4 (g - 2 g_{N/p} + 1) LOG(p),
///   <G(p),G(q)> = 0 for p != q.
/// A vanishing g - 2 g_{N/p} + 1 is recorded as a diagnostic, not an error.
GramMatrix gram(std::int64_t N, DinfGConvention convention = DinfGConvention::IntersectionLemma);

/// x^T G y. Throws BasisMismatch.
SymbolicReal pair(const GramMatrix& gram, const EisVector& x, const EisVector& y);
SymbolicReal pair(const EisVector& x, const EisVector& y);

/// g - 2 g_{N/p} + 1 for each p | N, in basis order.
std::vector<std::int64_t> fiber_denominators(const Gamma0Data& data);

/// The vertical correction W-hat: G(p) coefficients -(g-1) / (2 (g - 2 g_{N/p} + 1)),
/// F coefficient fixed by <W, DINF> = 0. Throws DegenerateGenus.
EisVector w_vector(std::int64_t N, DinfGConvention convention = DinfGConvention::IntersectionLemma);

/// -(g-1)^2 sum_p LOG(p) / (g - 2 g_{N/p} + 1), checked against pair(W, W).
SymbolicReal w_square(std::int64_t N, DinfGConvention convention = DinfGConvention::IntersectionLemma);

/// omega_Eis = (2g - 2) DINF + W.
EisVector omega_eis_vector(std::int64_t N, DinfGConvention convention = DinfGConvention::IntersectionLemma);

/// (g-1)^2 (576/psi) KAPPA - (g-1)^2 sum_p LOG(p) / (g - 2 g_{N/p} + 1),
/// checked against the Gram-matrix value of omega_Eis^2. Throws DegenerateGenus.
SymbolicReal omega_eis_sq(std::int64_t N, DinfGConvention convention = DinfGConvention::IntersectionLemma);

/// The fiber components X_p^inf, X_p^0 (with zero Green function) in Eis
/// coordinates, using div p = (X_p^inf + X_p^0, -2 log p) ~ 0.
struct FiberClasses {
  EisVector x_inf;
  EisVector x_zero;
};
FiberClasses fiber_classes(std::int64_t N, std::int64_t p);

}  // namespace x0calc
