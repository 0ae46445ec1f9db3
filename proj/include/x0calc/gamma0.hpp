#pragma once

#include <cstdint>
#include <vector>

namespace x0calc {

// Small-integer arithmetic shared by the level computations.
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
bool is_squarefree(std::int64_t n);

/// Kronecker symbol (d/n) for a fundamental discriminant d and n >= 1.
int kronecker(std::int64_t d, std::int64_t n);

/// Invariants of the congruence subgroup Gamma_0(N) for squarefree N.
///
/// psi is the index [Gamma_0(1) : Gamma_0(N)], nu2 and nu3 count elliptic
/// points of order 2 and 3, nu_inf the cusps. All values are exact and satisfy
/// 12 (genus - 1) + 3 nu2 + 4 nu3 + 6 nu_inf = psi.
struct Gamma0Data {
  std::int64_t N = 1;
  std::vector<std::int64_t> primes;
  std::int64_t psi = 1;
  std::int64_t nu2 = 1;
  std::int64_t nu3 = 1;
  std::int64_t nu_inf = 1;
  std::int64_t genus = 0;
};

/// Throws Error{NonSquarefree} if p^2 | N, Error{InvalidArgument} if N < 1.
Gamma0Data invariants(std::int64_t N);

/// Genus of X_0(N/p), the curve isomorphic to each component of the fiber at p.
std::int64_t genus_quotient(std::int64_t N, std::int64_t p);

}  // namespace x0calc
