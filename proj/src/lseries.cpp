#include "x0calc/lseries.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"
#include "x0calc/quadrature.hpp"

namespace x0calc {

namespace {

constexpr double kPi = std::numbers::pi;
// Split point used by the functional-equation test; any value != 1 works.
constexpr double kTestSplit = 1.25;
// Majorant terms below this are dropped from tail bounds.
constexpr double kNegligible = 1e-300;

std::string idx(std::size_t n) { return std::to_string(n); }

void require_prime_level(const EigenformData& f) {
  if (!is_prime(f.level) || f.level % 2 == 0 || f.level % 3 == 0)
    throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(f.level) + " must be a prime coprime to 6");
}

// Suffix sums of a majorant: tail[M] bounds sum_{n > M} |term_n|. The majorant
// is evaluated until it drops below kNegligible, past which terms decay
// geometrically and their total is absorbed in the final slack.
struct Tail {
  std::vector<double> suffix;  // suffix[M] = sum_{n > M} majorant(n)

  double at(std::size_t M) const { return M < suffix.size() ? suffix[M] : 0.0; }
  std::size_t smallest_meeting(double tol) const {
    for (std::size_t M = 0; M < suffix.size(); ++M)
      if (suffix[M] <= tol) return std::max<std::size_t>(M, 1);
    return suffix.size();
  }
};

template <class Majorant>
Tail build_tail(Majorant&& majorant, std::size_t at_least) {
  std::vector<double> terms;
  for (std::size_t n = 1;; ++n) {
    const double m = majorant(n);
    if (!(m > kNegligible) && n > at_least) break;
    terms.push_back(std::isfinite(m) ? m : 0.0);
    if (n > 10'000'000) break;
  }
  Tail t;
  t.suffix.assign(terms.size() + 1, 0.0);
  for (std::size_t n = terms.size(); n >= 1; --n) t.suffix[n - 1] = t.suffix[n] + terms[n - 1];
  return t;
}

std::size_t choose_terms(const EigenformData& f, const Tail& tail, const SeriesOptions& opts, const char* what) {
  const std::size_t M = opts.terms ? opts.terms : tail.smallest_meeting(opts.tolerance);
  if (M > f.an.size())
    throw Error(ErrorCode::InsufficientCoefficients,
                std::string(what) + " needs M=" + idx(M) + " coefficients, " + f.label + " provides " + idx(f.an.size()));
  return M;
}

double coefficient(const EigenformData& f, int twist, std::size_t n) {
  const double a = static_cast<double>(f.an[n - 1]);
  return twist == 0 ? a : a * chi(twist, static_cast<std::int64_t>(n));
}

// |a_n| <= d(n) sqrt n <= 2 n.
double coefficient_bound(std::size_t n) { return 2.0 * static_cast<double>(n); }

void check_functional_equation(const EigenformData& f, int twist) {
  const double residual = symmetry_residual(f, twist, 0.1);
  const SeriesValue scale = completed_l(f, twist, 1.1, 1.0);
  if (!(residual <= 1e-6 * std::max(1.0, std::fabs(scale.value))))
    throw Error(ErrorCode::SignConventionMismatch,
                f.label + ": Lambda(1+t) != eps Lambda(1-t) (residual " + std::to_string(residual) + ", twist " +
                    std::to_string(twist) + "); al_sign or coefficients are inconsistent");
}

}  // namespace

std::string source_name(EigenformData::Source s) {
  return s == EigenformData::Source::Ingested ? "ingested" : "eta-generated";
}

std::string EigenformData::to_jsonl() const {
  nlohmann::ordered_json j;
  j["label"] = label;
  j["level"] = level;
  j["weight"] = weight;
  j["al_sign"] = al_sign;
  j["an"] = an;
  return j.dump();
}

void validate(const EigenformData& f) {
  auto violation = [&](std::size_t n, const std::string& why) {
    throw Error(ErrorCode::InvariantViolation, f.label + ": invariant violated at n=" + idx(n) + ": " + why);
  };
  if (f.weight != 2) violation(0, "weight must be 2");
  if (f.al_sign != 1 && f.al_sign != -1) violation(0, "al_sign must be +1 or -1");
  require_prime_level(f);
  if (f.an.empty()) violation(1, "no coefficients");
  if (f.an[0] != 1) violation(1, "a_1 must be 1 (normalized newform)");
  const std::size_t M = f.an.size();
  for (std::size_t n = 2; n <= M; ++n) {
    const auto ps = prime_factors(static_cast<std::int64_t>(n));
    const auto p = static_cast<std::size_t>(ps.front());
    std::size_t pk = 1;
    std::size_t rest = n;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    const auto a = [&](std::size_t m) { return f.an[m - 1]; };
    if (rest != 1) {
      if (a(n) != a(pk) * a(rest)) violation(n, "a_mn != a_m a_n for coprime m=" + idx(pk) + ", n=" + idx(rest));
      continue;
    }
    if (pk == p) {
      if (static_cast<double>(a(p) * a(p)) > 4.0 * static_cast<double>(p)) violation(n, "|a_p| exceeds 2 sqrt p");
      continue;
    }
    const std::int64_t expected = static_cast<std::int64_t>(f.level) % static_cast<std::int64_t>(p) == 0
                                      ? a(p) * a(pk / p)
                                      : a(p) * a(pk / p) - static_cast<std::int64_t>(p) * a(pk / p / p);
    if (a(n) != expected) violation(n, "Hecke recursion at p=" + idx(p));
  }
}

EigenformData parse_eigenform(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
  };
  auto need_int = [&](const char* key) {
    const auto& v = need(key);
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
  };
  EigenformData f;
  const auto& label = need("label");
  if (!label.is_string()) throw Error(ErrorCode::ParseError, "field 'label' must be a string");
  f.label = label.get<std::string>();
  f.level = need_int("level");
  f.weight = static_cast<int>(need_int("weight"));
  f.al_sign = static_cast<int>(need_int("al_sign"));
  const auto& an = need("an");
  if (!an.is_array()) throw Error(ErrorCode::ParseError, "field 'an' must be an array");
  f.an.reserve(an.size());
  for (std::size_t i = 0; i < an.size(); ++i) {
    if (!an[i].is_number_integer()) throw Error(ErrorCode::ParseError, "an[" + idx(i) + "] is not an integer");
    f.an.push_back(an[i].get<std::int64_t>());
  }
  f.source = EigenformData::Source::Ingested;
  validate(f);
  return f;
}

std::vector<EigenformData> ingest(std::istream& in) {
  std::vector<EigenformData> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_eigenform(line));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + idx(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<EigenformData> ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open eigenform file '" + path + "'");
  return ingest(in);
}

EigenformData from_qexpansion(const std::string& label, const QExpansion& q, int al_sign) {
  EigenformData f;
  f.label = label;
  f.level = q.level;
  f.weight = q.weight;
  f.al_sign = al_sign;
  f.source = EigenformData::Source::EtaGenerated;
  for (const auto& c : q.coeffs) f.an.push_back(c.convert_to<std::int64_t>());
  validate(f);
  return f;
}

int chi(int disc, std::int64_t n) {
  if (disc == -4) {
    static constexpr int table[4] = {0, 1, 0, -1};
    return table[((n % 4) + 4) % 4];
  }
  if (disc == -3) {
    static constexpr int table[3] = {0, 1, -1};
    return table[((n % 3) + 3) % 3];
  }
  throw Error(ErrorCode::InvalidArgument, "only discriminants -3 and -4 are supported, got " + std::to_string(disc));
}

TwistData twist_data(const EigenformData& f, int twist) {
  if (twist == 0) return {f.level, f.root_number(), 0};
  const std::int64_t d = twist;
  // For gcd(D, N) = 1: eps(f x chi) = eps(f) chi(-N) = -eps(f) chi(N).
  return {f.level * d * d, -f.root_number() * chi(twist, f.level), twist};
}

SeriesValue completed_l(const EigenformData& f, int twist, double s, double split, const SeriesOptions& opts) {
  if (!(s > 0.0 && s < 2.0)) throw Error(ErrorCode::InvalidArgument, "completed_l needs 0 < s < 2");
  if (!(split > 0.0)) throw Error(ErrorCode::InvalidArgument, "split must be positive");
  const TwistData t = twist_data(f, twist);
  const double Q = static_cast<double>(t.conductor);
  const double sq = std::sqrt(Q);
  const double c1 = 2 * kPi * split / sq, c2 = 2 * kPi / (split * sq);
  const double pre1 = std::pow(Q, s / 2), pre2 = std::pow(Q, 1 - s / 2);

  auto kernel1 = [&](std::size_t n) {
    const double x = 2 * kPi * static_cast<double>(n);
    return pre1 * std::pow(x, -s) * boost::math::tgamma(s, c1 * static_cast<double>(n));
  };
  auto kernel2 = [&](std::size_t n) {
    const double x = 2 * kPi * static_cast<double>(n);
    return pre2 * std::pow(x, s - 2) * boost::math::tgamma(2 - s, c2 * static_cast<double>(n));
  };
  const Tail tail = build_tail(
      [&](std::size_t n) { return coefficient_bound(n) * (std::fabs(kernel1(n)) + std::fabs(kernel2(n))); }, 1);
  const std::size_t M = choose_terms(f, tail, opts, "completed L-function");

  double sum = 0.0, mag = 0.0;
  for (std::size_t n = 1; n <= M; ++n) {
    const double b = coefficient(f, twist, n);
    if (b == 0.0) continue;
    const double term = b * kernel1(n) + t.root_number * b * kernel2(n);
    sum += term;
    mag += std::fabs(term);
  }
  return {sum, tail.at(M) + 1e-15 * mag * std::sqrt(static_cast<double>(M)), M};
}

double symmetry_residual(const EigenformData& f, int twist, double t, const SeriesOptions& opts) {
  const int eps = twist_data(f, twist).root_number;
  const SeriesValue plus = completed_l(f, twist, 1 + t, kTestSplit, opts);
  const SeriesValue minus = completed_l(f, twist, 1 - t, kTestSplit, opts);
  return std::fabs(plus.value - eps * minus.value);
}

SeriesValue l_value(const EigenformData& f, int twist, const SeriesOptions& opts) {
  require_prime_level(f);
  check_functional_equation(f, twist);
  const TwistData t = twist_data(f, twist);
  const double Q = static_cast<double>(t.conductor);
  const double c = 2 * kPi / std::sqrt(Q);
  // L(1) = (1 + eps) sum b_n/n e^{-c n}.
  const Tail tail = build_tail([&](std::size_t n) { return 2.0 * coefficient_bound(n) / n * std::exp(-c * n); }, 1);
  const std::size_t M = choose_terms(f, tail, opts, "L-value");
  if (t.root_number == -1) return {0.0, 0.0, M};
  double sum = 0.0, mag = 0.0;
  for (std::size_t n = 1; n <= M; ++n) {
    const double term = coefficient(f, twist, n) / n * std::exp(-c * n);
    sum += term;
    mag += std::fabs(term);
  }
  return {2.0 * sum, tail.at(M) + 2e-15 * mag * std::sqrt(static_cast<double>(M)), M};
}

SeriesValue l_derivative(const EigenformData& f, const SeriesOptions& opts) {
  require_prime_level(f);
  if (f.root_number() != -1)
    throw Error(ErrorCode::WrongSign, f.label + ": functional-equation sign is +1, L'(f,1) series needs -1");
  check_functional_equation(f, 0);
  const double c = 2 * kPi / std::sqrt(static_cast<double>(f.level));
  const Tail tail = build_tail(
      [&](std::size_t n) { return 2.0 * coefficient_bound(n) / n * boost::math::expint(1, c * n); }, 1);
  const std::size_t M = choose_terms(f, tail, opts, "L'-value");
  double sum = 0.0, mag = 0.0;
  for (std::size_t n = 1; n <= M; ++n) {
    const double term = static_cast<double>(f.an[n - 1]) / n * boost::math::expint(1, c * n);
    sum += term;
    mag += std::fabs(term);
  }
  return {2.0 * sum, tail.at(M) + 2e-15 * mag * std::sqrt(static_cast<double>(M)), M};
}

namespace {

// Integral of |f(w)|^2 + (1/N) sum_{r mod N} |S_r(w)|^2 over the part of the
// standard fundamental domain with Im w < 1, where
// S_r(w) = sum_{n = r mod N} a_n e^{2 pi i n w / N}; (1/N) sum_r |S_r|^2 equals
// (1/N^2) sum_j |f((w + j)/N)|^2 by discrete Parseval.
double petersson_lower(const EigenformData& f, int order, std::size_t M) {
  const auto N = static_cast<std::size_t>(f.level);
  const GaussRule ru = gauss_legendre(order, -0.5, 0.5);
  const GaussRule rv = gauss_legendre(order, 0.0, 1.0);
  std::vector<std::complex<double>> partial(N);
  double total = 0.0;
  for (int iu = 0; iu < order; ++iu) {
    const double u = ru.nodes[iu];
    const double v0 = std::sqrt(1.0 - u * u);
    for (int iv = 0; iv < order; ++iv) {
      const double v = v0 + (1.0 - v0) * rv.nodes[iv];
      const double w = ru.weights[iu] * (1.0 - v0) * rv.weights[iv];

      const std::complex<double> q = std::polar(std::exp(-2 * kPi * v), 2 * kPi * u);
      std::complex<double> qn = 1.0, fw = 0.0;
      for (std::size_t n = 1; n <= M; ++n) {
        qn *= q;
        if (std::abs(qn) < 1e-300) break;
        fw += static_cast<double>(f.an[n - 1]) * qn;
      }

      const double Nd = static_cast<double>(N);
      const std::complex<double> qN = std::polar(std::exp(-2 * kPi * v / Nd), 2 * kPi * u / Nd);
      std::fill(partial.begin(), partial.end(), std::complex<double>(0.0));
      qn = 1.0;
      for (std::size_t n = 1; n <= M; ++n) {
        qn *= qN;
        partial[n % N] += static_cast<double>(f.an[n - 1]) * qn;
      }
      double coset = 0.0;
      for (const auto& s : partial) coset += std::norm(s);
      total += w * (std::norm(fw) + coset / Nd);
    }
  }
  return total;
}

}  // namespace

PeterssonResult petersson(const EigenformData& f, int quad_order, std::size_t terms) {
  require_prime_level(f);
  if (quad_order < 4) throw Error(ErrorCode::InvalidArgument, "quadrature order must be at least 4");
  const double Nd = static_cast<double>(f.level);
  // Coset points have Im((w + j)/N) >= sqrt(3)/(2N).
  const double rho = std::exp(-kPi * std::sqrt(3.0) / Nd);
  const Tail tail = build_tail([&](std::size_t n) { return coefficient_bound(n) * std::pow(rho, n); }, 1);
  SeriesOptions opts;
  opts.terms = terms;
  opts.tolerance = 1e-14;
  const std::size_t M = choose_terms(f, tail, opts, "Petersson norm");

  // Parts with Im w >= 1, by Parseval: sum a_n^2 (e^{-4 pi n} + e^{-4 pi n / N}) / (4 pi n).
  double upper = 0.0;
  for (std::size_t n = 1; n <= M; ++n) {
    const double a2 = static_cast<double>(f.an[n - 1]) * static_cast<double>(f.an[n - 1]);
    upper += a2 * (std::exp(-4 * kPi * n) + std::exp(-4 * kPi * n / Nd)) / (4 * kPi * n);
  }
  const double fine = petersson_lower(f, quad_order, M);
  const double coarse = petersson_lower(f, quad_order / 2, M);
  const double value = upper + fine;
  const double quad_err = std::fabs(fine - coarse);
  if (!(quad_err <= 1e-6 * std::fabs(value)) && value != 0.0)
    throw Error(ErrorCode::QuadratureNotConverged,
                f.label + ": Petersson quadrature moved by " + std::to_string(quad_err) + " between orders " +
                    std::to_string(quad_order / 2) + " and " + std::to_string(quad_order));
  // |f| <= B on the domain, truncation changes |f|^2 by at most (2B + tail) tail per unit area.
  const double bound_f = tail.at(0);
  const double trunc = tail.at(M);
  return {value, quad_err + 2.0 * (2.0 * bound_f + trunc) * trunc, quad_order, M};
}

nlohmann::ordered_json OmegaF::to_json() const {
  nlohmann::ordered_json j;
  j["h_i"] = h_i;
  j["h_j"] = h_j;
  j["omega_f_sq"] = omega_f_sq;
  j["l1"] = values.l1;
  j["l1_prime"] = values.l1prime;
  j["l_chi_m4"] = values.l_chi_m4;
  j["l_chi_m3"] = values.l_chi_m3;
  j["petersson"] = values.petersson;
  j["err_bound"] = values.err_bound;
  return j;
}

OmegaF omega_f_sq(const EigenformData& f, const OmegaOptions& opts) {
  require_prime_level(f);
  if (f.root_number() != -1)
    throw Error(ErrorCode::WrongSign, f.label + ": functional-equation sign is +1; the height formulas need -1");
  OmegaF out;
  const SeriesValue l1 = l_value(f, 0, opts.series);
  const SeriesValue lp = l_derivative(f, opts.series);
  const SeriesValue l4 = l_value(f, -4, opts.series);
  const SeriesValue l3 = l_value(f, -3, opts.series);
  const PeterssonResult pet = petersson(f, opts.quad_order, opts.petersson_terms);
  out.values = {l1.value, lp.value, l4.value, l3.value, pet.value,
                std::max({l1.error_bound, lp.error_bound, l4.error_bound, l3.error_bound, pet.error_bound})};

  const double pi2 = kPi * kPi;
  auto clamp = [&](double h, const char* name) {
    if (h < -opts.height_tolerance)
      throw Error(ErrorCode::NegativeHeightBeyondTolerance,
                  f.label + ": " + name + " = " + std::to_string(h) + " is negative beyond tolerance");
    return h < 0.0 ? 0.0 : h;
  };
  out.h_i = clamp(l4.value * lp.value / (2 * pi2 * pet.value), "h_i");
  out.h_j = clamp(std::sqrt(3.0) * l3.value * lp.value / (4 * pi2 * pet.value), "h_j");
  const double r = std::sqrt(out.h_i) + 2 * std::sqrt(out.h_j);
  out.omega_f_sq = r == 0.0 ? 0.0 : -r * r;
  return out;
}

}  // namespace x0calc
