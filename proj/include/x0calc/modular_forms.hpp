#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "x0calc/symbolic.hpp"

namespace x0calc {

/// Cuspidal q-expansion a_1 q + a_2 q^2 + ... + a_M q^M (a_0 = 0).
struct QExpansion {
  int weight = 2;
  std::int64_t level = 1;
  std::vector<BigInt> coeffs;  // coeffs[n-1] = a_n

  std::size_t precision() const { return coeffs.size(); }
  const BigInt& a(std::size_t n) const { return coeffs.at(n - 1); }

  nlohmann::ordered_json to_json() const;
  friend bool operator==(const QExpansion&, const QExpansion&) = default;
};

/// prod_d eta(d z)^{r_d}.
struct EtaQuotient {
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (d, r_d)

  /// "eta(1)^2*eta(11)^2"; an exponent of 1 is written as "eta(d)".
  std::string to_string() const;
  static EtaQuotient parse(std::string_view text);

  Rational weight() const;         // (1/2) sum r_d
  Rational leading_power() const;  // (1/24) sum d r_d
  std::int64_t level() const;      // lcm of the d
};

/// Discriminant function Delta = eta(z)^24.
EtaQuotient delta_quotient();
/// eta(z)^2 eta(11 z)^2, the weight-2 newform of level 11.
EtaQuotient level11_quotient();

/// Exact expansion up to q^M. Throws FractionalLeadingPower if the leading
/// exponent is not a positive integer, WeightRejected unless the weight is a
/// positive even integer.
QExpansion eta_expand(const EtaQuotient& eta, std::size_t M);

/// (T_l f)_n = a_{ln} + l^{k-1} a_{n/l}, valid for n <= M / l.
/// Throws BadHeckePrime (l not prime or l | level), PrecisionTooSmall.
QExpansion hecke_q(std::int64_t l, const QExpansion& f);

/// Heegner points of discriminant -3 or -4 on X_0(N), represented by the
/// residues b mod 2N with b^2 = disc (mod 4N). The divisor is
/// sum_P w ([P] - [inf]) with w = 1/2 (disc -4) or 1/3 (disc -3).
struct HeegnerDivisor {
  std::int64_t N = 1;
  int disc = -4;
  std::vector<std::int64_t> roots;
  Rational weight_per_point;

  std::size_t count() const { return roots.size(); }
  Rational infinity_coefficient() const { return -weight_per_point * static_cast<long long>(roots.size()); }
  Rational degree() const { return weight_per_point * static_cast<long long>(roots.size()) + infinity_coefficient(); }

  nlohmann::ordered_json to_json() const;
};

/// Throws LevelNotCoprimeTo6, NonSquarefree, InvalidArgument (disc).
HeegnerDivisor heegner_points(std::int64_t N, int disc);

/// omega_Q = (2g - 2) [inf] - H_i - 2 H_j.
struct CanonicalDecomposition {
  std::int64_t N = 1;
  std::int64_t mult_infty = 0;
  HeegnerDivisor h_i;
  HeegnerDivisor h_j;

  Rational degree() const { return Rational(mult_infty) - h_i.degree() - 2 * h_j.degree(); }
  nlohmann::ordered_json to_json() const;
};

CanonicalDecomposition canonical_decomposition(std::int64_t N);

}  // namespace x0calc
