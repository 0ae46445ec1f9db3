#include "x0calc/symbolic.hpp"

#include <cctype>
#include <cmath>
#include <ios>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"

namespace x0calc {

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

constexpr int kMaxDigits = 40;
// Rounding error of a single cpp_dec_float_50 elementary operation, with margin.
constexpr double kUlp = 1e-46;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Dec to_dec(const Rational& q) {
  return Dec(boost::multiprecision::numerator(q)) / Dec(boost::multiprecision::denominator(q));
}

// eta'(2) = sum_{k>=0} (-1)^k a_k with a_k = -log(k+1)/(k+1)^2, summed with the
// Cohen-Villegas-Zagier acceleration. The a_k are moments of a signed measure
// on [0,1] of total variation below 1, so the error is at most 2 (3+sqrt 8)^-n.
Dec eta_prime_two(int n) {
  const Dec root = Dec(3) + boost::multiprecision::sqrt(Dec(8));
  Dec d = boost::multiprecision::pow(root, n);
  d = (d + 1 / d) / 2;
  Dec b = -1, c = -d, s = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const Dec kp1 = k + 1;
    s += c * (-boost::multiprecision::log(kp1) / (kp1 * kp1));
    b = Dec(k + n) * Dec(k - n) * b / ((Dec(k) + Dec(0.5)) * kp1);
  }
  return s / d;
}

int cvz_terms_for(double tolerance) {
  // 2 (3+sqrt 8)^-n <= tolerance
  const double rate = std::log(3.0 + std::sqrt(8.0));
  return static_cast<int>(std::ceil(std::log(2.0 / tolerance) / rate)) + 1;
}

struct KappaDec {
  Dec value;
  double error_bound;
};

KappaDec kappa_dec(double tolerance) {
  namespace bmc = boost::math::constants;
  const int n = cvz_terms_for(tolerance);
  const Dec pi = bmc::pi<Dec>();
  const Dec eta_p = eta_prime_two(n);
  // zeta(s) = eta(s) / (1 - 2^{1-s}) and eta(2) = pi^2/12.
  const Dec zeta_p2 = 2 * eta_p - pi * pi / 6 * boost::multiprecision::log(Dec(2));
  // zeta'(2) = (pi^2/6)(gamma + log 2 pi - 12 log A).
  const Dec log_a = (bmc::euler<Dec>() + boost::multiprecision::log(2 * pi)) / 12 - zeta_p2 / (2 * pi * pi);
  const double series_err = 2.0 * std::pow(3.0 + std::sqrt(8.0), -n);
  // Error of eta' enters log A with factor 2/(2 pi^2) < 1.
  return {Dec(1) / 24 - log_a, series_err + 64 * kUlp};
}

}  // namespace

Symbol Symbol::log(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "LOG(" + std::to_string(p) + "): argument is not prime");
  return Symbol(Kind::Log, p);
}

Symbol Symbol::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t == "ONE") return one();
  if (t == "KAPPA") return kappa();
  if (t.size() > 5 && t.rfind("LOG(", 0) == 0 && t.back() == ')') {
    const std::string inner = t.substr(4, t.size() - 5);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad symbol '" + t + "'");
    return log(std::stoll(inner));
  }
  throw Error(ErrorCode::ParseError, "unknown symbol '" + t + "'");
}

std::string Symbol::name() const {
  switch (kind_) {
    case Kind::One: return "ONE";
    case Kind::Kappa: return "KAPPA";
    case Kind::Log: return "LOG(" + std::to_string(prime_) + ")";
  }
  return "?";
}

Rational parse_rational(std::string_view text) {
  const std::string t = trim(text);
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad rational '" + t + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t));
  const BigInt den = parse_int(trim(t.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
  return Rational(parse_int(trim(t.substr(0, slash))), den);
}

std::string rational_to_string(const Rational& q) { return q.str(); }

SymbolicReal SymbolicReal::term(const Symbol& s, const Rational& coef) {
  SymbolicReal r;
  r.add_term(s, coef);
  return r;
}

void SymbolicReal::add_term(const Symbol& s, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

Rational SymbolicReal::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> SymbolicReal::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Symbol::one()) return terms_.begin()->second;
  return std::nullopt;
}

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& other) {
  for (const auto& [s, q] : other.terms_) add_term(s, q);
  return *this;
}

SymbolicReal& SymbolicReal::operator-=(const SymbolicReal& other) {
  for (const auto& [s, q] : other.terms_) add_term(s, -q);
  return *this;
}

SymbolicReal& SymbolicReal::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= q;
  return *this;
}

SymbolicReal& SymbolicReal::operator/=(const Rational& q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "division of a symbolic real by zero");
  for (auto& [s, c] : terms_) c /= q;
  return *this;
}

std::string SymbolicReal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (s == Symbol::one()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += s.name();
    } else {
      out += rational_to_string(mag) + "*" + s.name();
    }
  }
  return out;
}

SymbolicReal SymbolicReal::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty symbolic expression");
  // Split into signed terms at top-level '+'/'-' that are not part of a coefficient.
  std::vector<std::pair<int, std::string>> pieces;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&](int next_sign) {
    const std::string body = trim(cur);
    if (body.empty()) throw Error(ErrorCode::ParseError, "dangling sign in '" + t + "'");
    pieces.emplace_back(sign, body);
    cur.clear();
    sign = next_sign;
  };
  for (std::size_t i = 0; i < t.size(); ++i) {
    const char ch = t[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == '+' || ch == '-') && depth == 0) {
      const std::string sofar = trim(cur);
      if (sofar.empty()) {
        if (ch == '-') sign = -sign;
        continue;
      }
      const char last = sofar.back();
      if (last != '*' && last != '/') {
        flush(ch == '-' ? -1 : 1);
        continue;
      }
    }
    cur += ch;
  }
  flush(1);

  SymbolicReal out;
  for (const auto& [sgn, body] : pieces) {
    const auto star = body.find('*');
    Rational coef = 1;
    std::string sym;
    if (star != std::string::npos) {
      coef = parse_rational(body.substr(0, star));
      sym = trim(body.substr(star + 1));
    } else if (std::isalpha(static_cast<unsigned char>(body[0]))) {
      sym = body;
    } else {
      out.add_term(Symbol::one(), sgn * parse_rational(body));
      continue;
    }
    out.add_term(Symbol::parse(sym), sgn * coef);
  }
  return out;
}

nlohmann::ordered_json SymbolicReal::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [s, q] : terms_) j[s.name()] = rational_to_string(q);
  return j;
}

SymbolicReal SymbolicReal::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "symbolic JSON must be an object");
  SymbolicReal out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw Error(ErrorCode::ParseError, "coefficient of " + key + " must be a string");
    out.add_term(Symbol::parse(key), parse_rational(value.get<std::string>()));
  }
  return out;
}

EvalResult kappa_value(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw Error(ErrorCode::PrecisionUnreachable, "KAPPA: supported precision is 1.." + std::to_string(kMaxDigits) + " digits");
  const auto k = kappa_dec(std::pow(10.0, -digits - 3));
  return {k.value.convert_to<double>(), k.error_bound, k.value.str(digits, std::ios_base::fixed)};
}

EvalResult SymbolicReal::evaluate(int digits) const {
  if (digits < 1 || digits > kMaxDigits)
    throw Error(ErrorCode::PrecisionUnreachable, "supported precision is 1.." + std::to_string(kMaxDigits) + " digits");
  const double target = std::pow(10.0, -digits);

  double weight = 0.0;  // sum of |coefficients| of transcendental terms
  for (const auto& [s, q] : terms_)
    if (s != Symbol::one()) weight += std::fabs(q.convert_to<double>());

  Dec sum = 0;
  double err = 0.0;
  std::optional<KappaDec> kappa;
  for (const auto& [s, q] : terms_) {
    const Dec c = to_dec(q);
    const double cabs = std::fabs(q.convert_to<double>());
    switch (s.kind()) {
      case Symbol::Kind::One:
        sum += c;
        err += kUlp * (1 + cabs);
        break;
      case Symbol::Kind::Kappa:
        if (!kappa) kappa = kappa_dec(target / (4 * (1 + weight)));
        sum += c * kappa->value;
        err += cabs * kappa->error_bound + kUlp * (1 + cabs);
        break;
      case Symbol::Kind::Log:
        sum += c * boost::multiprecision::log(Dec(s.prime()));
        err += kUlp * (1 + cabs) * 8;
        break;
    }
  }
  if (!(err <= target))
    throw Error(ErrorCode::PrecisionUnreachable,
                "cannot certify " + std::to_string(digits) + " digits for " + to_string());
  return {sum.convert_to<double>(), err, sum.str(digits, std::ios_base::fixed)};
}

SymbolicReal mul(const SymbolicReal& a, const SymbolicReal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (auto qa = a.as_rational()) return *qa * b;
  if (auto qb = b.as_rational()) return a * *qb;
  throw Error(ErrorCode::NonBilinearProduct, "product of two transcendental symbolic reals: (" + a.to_string() +
                                                 ") * (" + b.to_string() + ")");
}

}  // namespace x0calc
