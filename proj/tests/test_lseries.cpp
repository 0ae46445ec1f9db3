#include "doctest.h"
#include "x0calc/error.hpp"
#include "x0calc/lseries.hpp"

#include <cmath>
#include <functional>
#include <sstream>

using namespace x0calc;

namespace {

// Frozen from mpmath (lfun of the Weierstrass models, 30 digits).
constexpr double kL1Prime37 = 0.305999773834052301820;
constexpr double kLChiM4_37 = 2.451389381986790060854;
constexpr double kLChiM3_37 = 2.830620639157327163499;
constexpr double kL1_11 = 0.253841860855910684337;
// (f, f) = 2 omega_re omega_im / (4 pi^2) with modular degree 2 for 37a.
constexpr double kPetersson37 = 0.371754147510696050275;
constexpr double kOmegaF37 = -0.920005348319439124;

EigenformData load(const std::string& name) {
  auto forms = ingest_file(std::string(X0CALC_TEST_DATA) + "/" + name);
  REQUIRE(forms.size() == 1);
  return forms[0];
}

EigenformData level11() { return from_qexpansion("11a", eta_expand(level11_quotient(), 600), -1); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("ingestion and validation") {
  const EigenformData f = load("37a.jsonl");
  CHECK(f.label == "37a");
  CHECK(f.level == 37);
  CHECK(f.al_sign == 1);
  CHECK(f.root_number() == -1);
  CHECK(f.an.size() == 3000);
  CHECK(f.an[36] == -1);
  validate(f);
  CHECK(parse_eigenform(f.to_jsonl()).an == f.an);

  EigenformData bad = f;
  bad.an[5] += 1;  // a_6 != a_2 a_3
  CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvariantViolation);
  bad = f;
  bad.an[0] = 2;
  CHECK(code_of([&] { validate(bad); }) == ErrorCode::InvariantViolation);

  std::istringstream two("\n" + f.to_jsonl() + "\n{\"label\": 3}\n");
  try {
    ingest(two);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { ingest_file("/nonexistent/file.jsonl"); }) == ErrorCode::ParseError);
}

TEST_CASE("quadratic characters") {
  CHECK(chi(-4, 1) == 1);
  CHECK(chi(-4, 3) == -1);
  CHECK(chi(-4, 2) == 0);
  CHECK(chi(-3, 1) == 1);
  CHECK(chi(-3, 2) == -1);
  CHECK(chi(-3, 3) == 0);
  CHECK(chi(-3, 37) == 1);
  CHECK(chi(-4, 37) == 1);
}

TEST_CASE("functional equation") {
  const EigenformData f37 = load("37a.jsonl"), f11 = level11();
  for (double t : {0.05, 0.1, 0.3}) {
    CHECK(symmetry_residual(f37, 0, t) < 1e-10);
    CHECK(symmetry_residual(f37, -4, t) < 1e-10);
    CHECK(symmetry_residual(f37, -3, t) < 1e-10);
    CHECK(symmetry_residual(f11, 0, t) < 1e-10);
  }
  // With the wrong sign the residual is large.
  EigenformData flipped = f37;
  flipped.al_sign = -1;
  CHECK(symmetry_residual(flipped, 0, 0.1) > 1e-4);
  CHECK(code_of([&] { l_value(flipped); }) == ErrorCode::SignConventionMismatch);
}

TEST_CASE("special values against frozen oracles") {
  const EigenformData f37 = load("37a.jsonl");
  CHECK(l_value(f37).value == 0.0);
  CHECK(std::abs(l_derivative(f37).value - kL1Prime37) < 1e-11);
  CHECK(std::abs(l_value(f37, -4).value - kLChiM4_37) < 1e-11);
  CHECK(std::abs(l_value(f37, -3).value - kLChiM3_37) < 1e-11);
  const EigenformData f11 = level11();
  CHECK(std::abs(l_value(f11).value - kL1_11) < 1e-11);
  CHECK(code_of([&] { l_derivative(f11); }) == ErrorCode::WrongSign);

  EigenformData shortf = f37;
  shortf.an.resize(20);
  const ErrorCode c = code_of([&] { l_derivative(shortf); });
  CHECK(c == ErrorCode::InsufficientCoefficients);
}

TEST_CASE("stability under doubled series length") {
  const EigenformData f37 = load("37a.jsonl");
  const SeriesValue a = l_derivative(f37);
  SeriesOptions twice;
  twice.terms = 2 * a.terms;
  CHECK(std::abs(l_derivative(f37, twice).value - a.value) < 1e-12);
  CHECK(a.error_bound < 1e-12);
}

TEST_CASE("Petersson norm") {
  const EigenformData f37 = load("37a.jsonl");
  const PeterssonResult p = petersson(f37);
  CHECK(std::abs(p.value - kPetersson37) < 1e-10);
  CHECK(std::abs(petersson(f37, 96).value - p.value) < 1e-10);

  EigenformData zero = f37;
  std::fill(zero.an.begin(), zero.an.end(), 0);
  CHECK(petersson(zero).value == 0.0);
}

TEST_CASE("omega_f^2") {
  const OmegaF w = omega_f_sq(load("37a.jsonl"));
  CHECK(std::abs(w.omega_f_sq - kOmegaF37) < 1e-9);
  CHECK(std::abs(w.h_i - w.h_j) < 1e-10);
  CHECK(w.to_json()["omega_f_sq"].get<double>() == w.omega_f_sq);

  // 83a: both twisted central values vanish, so both heights do.
  const OmegaF z = omega_f_sq(load("83a.jsonl"));
  CHECK(z.omega_f_sq == 0.0);
  CHECK(std::abs(z.values.l_chi_m4) < 1e-10);

  CHECK(code_of([] { omega_f_sq(level11()); }) == ErrorCode::WrongSign);
}
