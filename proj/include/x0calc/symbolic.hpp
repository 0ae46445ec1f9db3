#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace x0calc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Basis symbol of the real numbers an intersection number can be built from.
///   ONE    the rational unit
///   KAPPA  (1/2) zeta(-1) + zeta'(-1)
///   LOG(p) log p for a prime p
class Symbol {
 public:
  enum class Kind { One, Kappa, Log };

  static Symbol one() { return Symbol(Kind::One, 0); }
  static Symbol kappa() { return Symbol(Kind::Kappa, 0); }
  static Symbol log(std::int64_t p);  // throws NotPrime

  /// Inverse of name(): "ONE", "KAPPA" or "LOG(p)".
  static Symbol parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::int64_t prime() const { return prime_; }
  std::string name() const;

  auto operator<=>(const Symbol&) const = default;

 private:
  Symbol(Kind kind, std::int64_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::int64_t prime_;
};

struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::string decimal;  // rounded to the requested number of digits
};

/// Exact rational linear combination of basis symbols, kept in canonical form
/// (no zero coefficients), so equality is map equality.
class SymbolicReal {
 public:
  using Terms = std::map<Symbol, Rational>;

  SymbolicReal() = default;
  SymbolicReal(const Rational& q) { add_term(Symbol::one(), q); }  // NOLINT: rationals embed
  SymbolicReal(long long n) : SymbolicReal(Rational(n)) {}         // NOLINT

  static SymbolicReal term(const Symbol& s, const Rational& coef = 1);
  static SymbolicReal kappa(const Rational& coef = 1) { return term(Symbol::kappa(), coef); }
  static SymbolicReal log(std::int64_t p, const Rational& coef = 1) { return term(Symbol::log(p), coef); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(const Symbol& s) const;
  bool is_zero() const { return terms_.empty(); }
  /// The value if it is a rational multiple of ONE.
  std::optional<Rational> as_rational() const;

  SymbolicReal& operator+=(const SymbolicReal& other);
  SymbolicReal& operator-=(const SymbolicReal& other);
  SymbolicReal& operator*=(const Rational& q);
  SymbolicReal& operator/=(const Rational& q);

  friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal& b) { return a += b; }
  friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal& b) { return a -= b; }
  friend SymbolicReal operator-(SymbolicReal a) { return a *= Rational(-1); }
  friend SymbolicReal operator*(const Rational& q, SymbolicReal a) { return a *= q; }
  friend SymbolicReal operator*(SymbolicReal a, const Rational& q) { return a *= q; }
  friend SymbolicReal operator/(SymbolicReal a, const Rational& q) { return a /= q; }
  friend bool operator==(const SymbolicReal&, const SymbolicReal&) = default;

  /// Canonical text, e.g. "288/19*KAPPA - 1/3*LOG(37)"; "0" for zero.
  std::string to_string() const;
  static SymbolicReal parse(std::string_view text);

  /// {"KAPPA": "288/19", "LOG(37)": "-1/3"}; keys in canonical symbol order.
  nlohmann::ordered_json to_json() const;
  static SymbolicReal from_json(const nlohmann::json& j);

  /// Numeric value with |value - true| <= 10^-digits. Supports digits <= 40.
  EvalResult evaluate(int digits) const;

 private:
  void add_term(const Symbol& s, const Rational& q);
  Terms terms_;
};

/// Product of two symbolic reals when at least one of them is rational.
/// Throws NonBilinearProduct otherwise.
SymbolicReal mul(const SymbolicReal& a, const SymbolicReal& b);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// KAPPA = (1/2) zeta(-1) + zeta'(-1) = 1/24 - log A, A the Glaisher-Kinkelin
/// constant, with an error bound; digits <= 40.
EvalResult kappa_value(int digits);

}  // namespace x0calc
