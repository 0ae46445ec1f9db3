#include "x0calc/modular_forms.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"

namespace x0calc {

namespace {

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

nlohmann::ordered_json QExpansion::to_json() const {
  nlohmann::ordered_json j;
  j["weight"] = weight;
  j["level"] = level;
  auto an = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) an.push_back(big_to_json(c));
  j["an"] = an;
  return j;
}

std::string EtaQuotient::to_string() const {
  std::string out;
  for (const auto& [d, r] : factors) {
    if (!out.empty()) out += "*";
    out += "eta(" + std::to_string(d) + ")";
    if (r != 1) out += "^" + std::to_string(r);
  }
  return out;
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  EtaQuotient q;
  std::size_t pos = 0;
  auto fail = [&]() -> EtaQuotient { throw Error(ErrorCode::ParseError, "bad eta quotient '" + std::string(text) + "'"); };
  auto read_int = [&](std::int64_t& out) {
    std::size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits) return false;
    out = std::stoll(t.substr(start, pos - start));
    return true;
  };
  while (pos < t.size()) {
    if (t.compare(pos, 4, "eta(") != 0) return fail();
    pos += 4;
    std::int64_t d = 0, r = 1;
    if (!read_int(d) || d < 1 || pos >= t.size() || t[pos] != ')') return fail();
    ++pos;
    if (pos < t.size() && t[pos] == '^') {
      ++pos;
      const bool paren = pos < t.size() && t[pos] == '(';
      if (paren) ++pos;
      if (!read_int(r)) return fail();
      if (paren) {
        if (pos >= t.size() || t[pos] != ')') return fail();
        ++pos;
      }
    }
    q.factors.emplace_back(d, r);
    if (pos < t.size()) {
      if (t[pos] != '*') return fail();
      ++pos;
      if (pos == t.size()) return fail();
    }
  }
  if (q.factors.empty()) return fail();
  return q;
}

Rational EtaQuotient::weight() const {
  std::int64_t s = 0;
  for (const auto& f : factors) s += f.second;
  return Rational(s, 2);
}

Rational EtaQuotient::leading_power() const {
  std::int64_t s = 0;
  for (const auto& [d, r] : factors) s += d * r;
  return Rational(s, 24);
}

std::int64_t EtaQuotient::level() const {
  std::int64_t l = 1;
  for (const auto& f : factors) l = std::lcm(l, f.first);
  return l;
}

EtaQuotient delta_quotient() { return EtaQuotient{{{1, 24}}}; }
EtaQuotient level11_quotient() { return EtaQuotient{{{1, 2}, {11, 2}}}; }

QExpansion eta_expand(const EtaQuotient& eta, std::size_t M) {
  if (M < 1) throw Error(ErrorCode::PrecisionTooSmall, "expansion length must be positive");
  if (eta.factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty eta quotient");
  const Rational lead = eta.leading_power();
  if (boost::multiprecision::denominator(lead) != 1 || lead <= 0)
    throw Error(ErrorCode::FractionalLeadingPower,
                eta.to_string() + " has leading power q^(" + rational_to_string(lead) + ")");
  const Rational w = eta.weight();
  if (boost::multiprecision::denominator(w) != 1 || w <= 0 || boost::multiprecision::numerator(w) % 2 != 0)
    throw Error(ErrorCode::WeightRejected, eta.to_string() + " has weight " + rational_to_string(w));

  const auto L = static_cast<std::size_t>(boost::multiprecision::numerator(lead).convert_to<std::int64_t>());
  QExpansion out;
  out.weight = static_cast<int>(boost::multiprecision::numerator(w).convert_to<std::int64_t>());
  out.level = eta.level();
  out.coeffs.assign(M, BigInt(0));
  if (L > M) return out;

  // series[i] = coefficient of q^i in prod_d prod_n (1 - q^{dn})^{r_d}, i <= M - L.
  // Each prod_n (1 - q^{dn}) is the sparse series sum_k (-1)^k q^{d k(3k-1)/2}.
  const std::size_t top = M - L;
  std::vector<BigInt> series(top + 1, BigInt(0));
  series[0] = 1;
  for (const auto& [d, r] : eta.factors) {
    std::vector<std::pair<std::size_t, int>> pent;  // (exponent, sign), exponent >= 1
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t a = d * (k * (3 * k - 1) / 2), b = d * (k * (3 * k + 1) / 2);
      if (a > static_cast<std::int64_t>(top)) break;
      const int sign = k % 2 == 0 ? 1 : -1;
      pent.emplace_back(static_cast<std::size_t>(a), sign);
      if (b <= static_cast<std::int64_t>(top)) pent.emplace_back(static_cast<std::size_t>(b), sign);
    }
    for (std::int64_t rep = 0; rep < (r < 0 ? -r : r); ++rep) {
      if (r > 0) {
        for (std::size_t i = top; i >= 1; --i)
          for (const auto& [e, sg] : pent) {
            if (e > i) break;
            if (sg > 0) series[i] += series[i - e]; else series[i] -= series[i - e];
          }
      } else {
        for (std::size_t i = 1; i <= top; ++i)
          for (const auto& [e, sg] : pent) {
            if (e > i) break;
            if (sg > 0) series[i] -= series[i - e]; else series[i] += series[i - e];
          }
      }
    }
  }
  for (std::size_t n = L; n <= M; ++n) out.coeffs[n - 1] = series[n - L];
  return out;
}

QExpansion hecke_q(std::int64_t l, const QExpansion& f) {
  if (!is_prime(l) || f.level % l == 0)
    throw Error(ErrorCode::BadHeckePrime, "T_" + std::to_string(l) + " needs a prime not dividing the level " +
                                              std::to_string(f.level));
  const std::size_t P = f.precision() / static_cast<std::size_t>(l);
  if (P < 1)
    throw Error(ErrorCode::PrecisionTooSmall, "precision " + std::to_string(f.precision()) + " is below l=" +
                                                  std::to_string(l));
  const BigInt lk = boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(f.weight - 1));
  QExpansion out{f.weight, f.level, std::vector<BigInt>(P)};
  for (std::size_t n = 1; n <= P; ++n) {
    out.coeffs[n - 1] = f.a(n * static_cast<std::size_t>(l));
    if (n % static_cast<std::size_t>(l) == 0) out.coeffs[n - 1] += lk * f.a(n / static_cast<std::size_t>(l));
  }
  return out;
}

nlohmann::ordered_json HeegnerDivisor::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = N;
  j["disc"] = disc;
  j["roots"] = roots;
  j["count"] = roots.size();
  j["weight_per_point"] = rational_to_string(weight_per_point);
  j["infinity_coefficient"] = rational_to_string(infinity_coefficient());
  j["degree"] = rational_to_string(degree());
  return j;
}

HeegnerDivisor heegner_points(std::int64_t N, int disc) {
  if (disc != -3 && disc != -4)
    throw Error(ErrorCode::InvalidArgument, "only discriminants -3 and -4 are supported, got " + std::to_string(disc));
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  if (std::gcd(N, std::int64_t{6}) != 1)
    throw Error(ErrorCode::LevelNotCoprimeTo6, "level " + std::to_string(N) + " is not coprime to 6");
  if (!is_squarefree(N)) throw Error(ErrorCode::NonSquarefree, "level " + std::to_string(N) + " is not squarefree");

  HeegnerDivisor h;
  h.N = N;
  h.disc = disc;
  h.weight_per_point = disc == -4 ? Rational(1, 2) : Rational(1, 3);
  const std::int64_t m = 4 * N;
  const std::int64_t target = ((disc % m) + m) % m;
  for (std::int64_t b = 0; b < 2 * N; ++b)
    if ((b * b) % m == target) h.roots.push_back(b);
  return h;
}

nlohmann::ordered_json CanonicalDecomposition::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = N;
  j["mult_infty"] = mult_infty;
  j["h_i"] = h_i.to_json();
  j["h_j"] = h_j.to_json();
  j["degree"] = rational_to_string(degree());
  return j;
}

CanonicalDecomposition canonical_decomposition(std::int64_t N) {
  CanonicalDecomposition c;
  c.N = N;
  c.h_i = heegner_points(N, -4);
  c.h_j = heegner_points(N, -3);
  c.mult_infty = 2 * invariants(N).genus - 2;
  return c;
}

}  // namespace x0calc
