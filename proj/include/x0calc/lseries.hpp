#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "x0calc/modular_forms.hpp"

namespace x0calc {

/// Weight-2 normalized newform of prime level N with gcd(N, 6) = 1.
struct EigenformData {
  enum class Source { Ingested, EtaGenerated };

  std::string label;
  std::int64_t level = 0;
  int weight = 2;
  int al_sign = 1;  // eigenvalue of w_N on f
  std::vector<std::int64_t> an;  // an[n-1] = a_n
  Source source = Source::Ingested;

  /// Sign of Lambda(s) = eps Lambda(2 - s); for weight 2 prime level, eps = -al_sign.
  int root_number() const { return -al_sign; }

  /// One line of the eigenform file format.
  std::string to_jsonl() const;
};

std::string source_name(EigenformData::Source s);

/// Validates a_1 = 1, multiplicativity, the Hecke recursion at good primes,
/// a_{p^k} = a_p^k at p | N and the Ramanujan bound |a_p| <= 2 sqrt p.
/// Throws InvariantViolation naming the first failing index.
void validate(const EigenformData& f);

/// Parses one JSON object {"label", "level", "weight", "al_sign", "an"}.
EigenformData parse_eigenform(const std::string& line);
/// JSON lines, one form per non-empty line. Throws ParseError with the line number.
std::vector<EigenformData> ingest(std::istream& in);
std::vector<EigenformData> ingest_file(const std::string& path);

/// Wraps an exact expansion (e.g. from eta_expand) as eigenform data.
EigenformData from_qexpansion(const std::string& label, const QExpansion& f, int al_sign);

/// Quadratic character of Q(sqrt disc), disc in {-3, -4}: the Kronecker symbol (disc / n).
int chi(int disc, std::int64_t n);

struct SeriesOptions {
  std::size_t terms = 0;     // 0: smallest count meeting `tolerance`
  double tolerance = 1e-13;  // target tail bound when terms == 0
};

struct SeriesValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms = 0;
};

/// Conductor, coefficients and root number of f or its twist by chi_disc (twist 0: none).
struct TwistData {
  std::int64_t conductor = 0;
  int root_number = 1;
  int twist = 0;
};
TwistData twist_data(const EigenformData& f, int twist);

/// Completed L-function Lambda(s) = Q^{s/2} (2 pi)^{-s} Gamma(s) L(s) by the
/// incomplete-gamma expansion split at y = split / sqrt Q. split = 1 is
/// symmetric in s <-> 2 - s; other splits make the functional equation a test.
SeriesValue completed_l(const EigenformData& f, int twist, double s, double split, const SeriesOptions& opts = {});

/// |Lambda(1 + t) - eps Lambda(1 - t)| with a non-symmetric split.
double symmetry_residual(const EigenformData& f, int twist, double t, const SeriesOptions& opts = {});

/// L(f, 1) or L(f x chi_disc, 1). Throws InsufficientCoefficients,
/// SignConventionMismatch if the functional equation does not hold for the data.
SeriesValue l_value(const EigenformData& f, int twist = 0, const SeriesOptions& opts = {});

/// L'(f, 1) = 2 sum a_n/n E_1(2 pi n / sqrt N). Throws WrongSign if eps = +1.
SeriesValue l_derivative(const EigenformData& f, const SeriesOptions& opts = {});

/// (f, f) = integral over Gamma_0(N)\H of |f|^2 dx dy (no volume normalization).
/// The domain is the union of F_1 and S T^j F_1, j < N. The parts with Im >= 1
/// are summed exactly by Parseval; the rest uses a quad_order x quad_order
/// Gauss rule. Throws QuadratureNotConverged if halving the order moves the
/// value by more than 1e-6 relative.
struct PeterssonResult {
  double value = 0.0;
  double error_bound = 0.0;
  int quad_order = 0;
  std::size_t terms = 0;
};
PeterssonResult petersson(const EigenformData& f, int quad_order = 48, std::size_t terms = 0);

struct LValues {
  double l1 = 0.0;
  double l1prime = 0.0;
  double l_chi_m4 = 0.0;
  double l_chi_m3 = 0.0;
  double petersson = 0.0;
  double err_bound = 0.0;
};

struct OmegaF {
  double h_i = 0.0;
  double h_j = 0.0;
  double omega_f_sq = 0.0;
  LValues values;

  nlohmann::ordered_json to_json() const;
};

struct OmegaOptions {
  SeriesOptions series;
  int quad_order = 48;
  std::size_t petersson_terms = 0;
  double height_tolerance = 1e-10;
};

/// Heights of the f-isotypical Heegner divisors
///   h_i = L(f, chi_-4, 1) L'(f, 1) / (2 pi^2 (f,f)),
///   h_j = sqrt 3 L(f, chi_-3, 1) L'(f, 1) / (4 pi^2 (f,f)),
/// and omega_f^2 = -(sqrt h_i + 2 sqrt h_j)^2. Heights in [-tol, 0) are clamped
/// to 0; below -tol throws NegativeHeightBeyondTolerance.
OmegaF omega_f_sq(const EigenformData& f, const OmegaOptions& opts = {});

}  // namespace x0calc
