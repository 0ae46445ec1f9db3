#include "x0calc/gamma0.hpp"

#include <string>

#include "x0calc/error.hpp"

namespace x0calc {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  std::int64_t result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace

int kronecker(std::int64_t d, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "kronecker: n must be positive");
  int result = 1;
  std::int64_t m = n;
  while (m % 2 == 0) {
    m /= 2;
    if (d % 2 == 0) return 0;
    const std::int64_t r = mod(d, 8);
    if (r == 3 || r == 5) result = -result;
  }
  for (std::int64_t p : prime_factors(m)) {
    std::int64_t k = m;
    int s = legendre(d, p);
    while (k % p == 0) {
      k /= p;
      result *= s;
    }
  }
  return result;
}

Gamma0Data invariants(std::int64_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive, got " + std::to_string(N));
  if (!is_squarefree(N)) throw Error(ErrorCode::NonSquarefree, "level " + std::to_string(N) + " is not squarefree");

  Gamma0Data d;
  d.N = N;
  d.primes = prime_factors(N);
  for (std::int64_t p : d.primes) {
    d.psi *= p + 1;
    // (-4/2) = 0 and (-3/3) = 0, (-3/2) = -1 via the Kronecker symbol.
    d.nu2 *= 1 + kronecker(-4, p);
    d.nu3 *= 1 + kronecker(-3, p);
    d.nu_inf *= 2;
  }
  const std::int64_t twelve_g = 12 + d.psi - 3 * d.nu2 - 4 * d.nu3 - 6 * d.nu_inf;
  if (twelve_g % 12 != 0)
    throw Error(ErrorCode::InvariantViolation, "non-integral genus for N=" + std::to_string(N));
  d.genus = twelve_g / 12;
  return d;
}

std::int64_t genus_quotient(std::int64_t N, std::int64_t p) {
  if (!is_squarefree(N)) throw Error(ErrorCode::NonSquarefree, "level " + std::to_string(N) + " is not squarefree");
  if (!is_prime(p) || N % p != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(p) + " is not a prime divisor of " + std::to_string(N));
  return invariants(N / p).genus;
}

}  // namespace x0calc
