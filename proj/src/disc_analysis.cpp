#include "x0calc/disc_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "x0calc/error.hpp"
#include "x0calc/quadrature.hpp"

namespace x0calc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Complex ipow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Finite-difference derivative weights at x[1] from three nodes x[0..2],
// evaluated at position `at` (0, 1 or 2).
void three_point(const double x[3], int at, double d1[3], double d2[3]) {
  const double t = x[at];
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    const double den = (x[k] - x[a]) * (x[k] - x[b]);
    d1[k] = ((t - x[a]) + (t - x[b])) / den;
    d2[k] = 2.0 / den;
  }
}

}  // namespace

// ---------------------------------------------------------------- grid

DiscGrid DiscGrid::gauss(int radial, int angular) {
  if (radial < 2 || angular < 4) {
    throw Error(ErrorCode::InvalidArgument,
                "disc grid needs at least 2 radial and 4 angular nodes, got " + std::to_string(radial) + "x" +
                    std::to_string(angular));
  }
  const GaussRule rule = gauss_legendre(radial, 0.0, 1.0);
  DiscGrid g;
  g.radii = rule.nodes;
  g.radial_weights = rule.weights;
  g.angular = angular;
  g.exact_degree = rule.exact_degree();
  for (double w : g.radial_weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::InvariantViolation, "non-positive radial weight");
  }
  for (int k = 0; k <= g.exact_degree; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.radii.size(); ++i) s += g.radial_weights[i] * std::pow(g.radii[i], k);
    if (std::abs(s - 1.0 / (k + 1)) > 1e-12) {
      throw Error(ErrorCode::InvariantViolation, "radial rule not exact for r^" + std::to_string(k));
    }
  }
  return g;
}

double DiscGrid::angle(int j) const { return offset + 2.0 * kPi * j / angular; }
double DiscGrid::angular_weight() const { return 2.0 * kPi / angular; }
Complex DiscGrid::node(std::size_t i, int j) const { return std::polar(radii[i], angle(j)); }

DiscGrid DiscGrid::image(int n) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
  if (angular % n != 0) {
    throw Error(ErrorCode::GridIncompatibleWithDegree,
                "angular count " + std::to_string(angular) + " is not divisible by degree " + std::to_string(n));
  }
  DiscGrid g;
  g.angular = angular / n;
  g.offset = n * offset;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    g.radii.push_back(std::pow(radii[i], n));
    g.radial_weights.push_back(radial_weights[i] * n * std::pow(radii[i], n - 1));
  }
  g.exact_degree = (exact_degree + 1) / n - 1;
  return g;
}

DiscGrid DiscGrid::preimage(int n) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
  DiscGrid g;
  g.angular = angular;
  g.offset = offset / n;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = std::pow(radii[i], 1.0 / n);
    g.radii.push_back(r);
    g.radial_weights.push_back(radial_weights[i] * r / (n * radii[i]));
  }
  // The transformed rule is not polynomially exact unless n = 1.
  g.exact_degree = n == 1 ? exact_degree : -1;
  return g;
}

// ---------------------------------------------------------------- functions

DiscFunction::DiscFunction(DiscGrid grid, std::vector<Complex> values, std::optional<ClosedForm> form)
    : grid_(std::move(grid)), values_(std::move(values)), form_(std::move(form)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(grid_.size()) + " values, got " +
                                                std::to_string(values_.size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvariantViolation, "non-finite value on the disc grid");
    }
  }
}

DiscFunction DiscFunction::from_closed_form(const DiscGrid& grid, ClosedForm form) {
  std::vector<Complex> values(grid.size());
  for (std::size_t i = 0; i < grid.radial(); ++i) {
    for (int j = 0; j < grid.angular; ++j) values[i * grid.angular + j] = form.eval(grid.node(i, j)).value;
  }
  return DiscFunction(grid, std::move(values), std::move(form));
}

DiscFunction DiscFunction::from_values(const DiscGrid& grid, std::vector<Complex> values) {
  return DiscFunction(grid, std::move(values), std::nullopt);
}

DiscFunction DiscFunction::resample(const DiscGrid& grid) const {
  if (grid == grid_) return *this;
  if (!form_) throw Error(ErrorCode::ClosedFormRequired, "resampling a value-only function needs a closed form");
  return from_closed_form(grid, *form_);
}

Jet DiscFunction::jet(std::size_t i, int j) const {
  const Complex z = grid_.node(i, j);
  if (form_) return form_->eval(z);

  const std::size_t nr = grid_.radial();
  const int na = grid_.angular;
  const std::size_t i0 = i == 0 ? 0 : (i + 1 == nr ? nr - 3 : i - 1);
  const int at = static_cast<int>(i - i0);
  const double xs[3] = {grid_.radii[i0], grid_.radii[i0 + 1], grid_.radii[i0 + 2]};
  double d1[3], d2[3];
  three_point(xs, at, d1, d2);
  Complex fr = 0.0, frr = 0.0;
  for (int k = 0; k < 3; ++k) {
    fr += d1[k] * value(i0 + k, j);
    frr += d2[k] * value(i0 + k, j);
  }
  const double h = grid_.angular_weight();
  const Complex fp = value(i, (j + 1) % na), fm = value(i, (j + na - 1) % na), f0 = value(i, j);
  const Complex ft = (fp - fm) / (2.0 * h);
  const Complex ftt = (fp - 2.0 * f0 + fm) / (h * h);

  const double r = grid_.radii[i], th = grid_.angle(j);
  const Complex e = std::polar(1.0, th);
  Jet out;
  out.value = f0;
  out.dz = std::conj(e) * 0.5 * (fr - kI * ft / r);
  out.dzbar = e * 0.5 * (fr + kI * ft / r);
  out.dzdzbar = 0.25 * (frr + fr / r + ftt / (r * r));
  return out;
}

DiscFunction& DiscFunction::operator+=(const DiscFunction& other) {
  if (!(other.grid_ == grid_)) throw Error(ErrorCode::InvalidArgument, "adding functions on different grids");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  if (form_ && other.form_) {
    auto a = form_->eval, b = other.form_->eval;
    form_ = ClosedForm{[a, b](Complex z) {
                         const Jet x = a(z), y = b(z);
                         return Jet{x.value + y.value, x.dz + y.dz, x.dzbar + y.dzbar, x.dzdzbar + y.dzdzbar};
                       },
                       form_->has_second && other.form_->has_second, "(" + form_->name + ")+(" + other.form_->name + ")"};
  } else {
    form_.reset();
  }
  return *this;
}

DiscFunction& DiscFunction::operator*=(Complex c) {
  for (Complex& v : values_) v *= c;
  if (form_) {
    auto a = form_->eval;
    form_ = ClosedForm{[a, c](Complex z) {
                         const Jet x = a(z);
                         return Jet{c * x.value, c * x.dz, c * x.dzbar, c * x.dzdzbar};
                       },
                       form_->has_second, "c*(" + form_->name + ")"};
  }
  return *this;
}

namespace disc {

ClosedForm constant(Complex c) {
  return {[c](Complex) { return Jet{c, 0.0, 0.0, 0.0}; }, true, "const"};
}

ClosedForm z_power(int n) {
  return {[n](Complex z) {
            return Jet{ipow(z, n), n == 0 ? Complex(0.0) : double(n) * ipow(z, n - 1), 0.0, 0.0};
          },
          true, "z^" + std::to_string(n)};
}

ClosedForm abs_sq() {
  return {[](Complex z) { return Jet{std::norm(z), std::conj(z), z, 1.0}; }, true, "|z|^2"};
}

ClosedForm one_minus_abs_sq() {
  return {[](Complex z) { return Jet{1.0 - std::norm(z), -std::conj(z), -z, -1.0}; }, true, "1-|z|^2"};
}

ClosedForm abs_pow(double k) {
  return {[k](Complex z) {
            const double r2 = std::norm(z);
            const double m = std::pow(r2, 0.5 * k - 1.0);
            return Jet{std::pow(r2, 0.5 * k), 0.5 * k * m * std::conj(z), 0.5 * k * m * z, 0.25 * k * k * m};
          },
          true, "|z|^" + fmt(k)};
}

ClosedForm neg_log_abs_sq() {
  return {[](Complex z) { return Jet{-std::log(std::norm(z)), -1.0 / z, -1.0 / std::conj(z), 0.0}; }, true,
          "-log|z|^2"};
}

ClosedForm real_part() {
  return {[](Complex z) { return Jet{z.real(), 0.5, 0.5, 0.0}; }, true, "Re z"};
}

ClosedForm polynomial(std::vector<std::tuple<int, int, Complex>> terms) {
  std::ostringstream name;
  for (const auto& [a, b, c] : terms) name << "+(" << c.real() << "," << c.imag() << ")z^" << a << "zb^" << b;
  return {[terms](Complex z) {
            const Complex zb = std::conj(z);
            Jet out{0.0, 0.0, 0.0, 0.0};
            for (const auto& [a, b, c] : terms) {
              out.value += c * ipow(z, a) * ipow(zb, b);
              if (a > 0) out.dz += c * double(a) * ipow(z, a - 1) * ipow(zb, b);
              if (b > 0) out.dzbar += c * double(b) * ipow(z, a) * ipow(zb, b - 1);
              if (a > 0 && b > 0) out.dzdzbar += c * double(a * b) * ipow(z, a - 1) * ipow(zb, b - 1);
            }
            return out;
          },
          true, name.str()};
}

ClosedForm product(const ClosedForm& a, const ClosedForm& b) {
  auto fa = a.eval, fb = b.eval;
  return {[fa, fb](Complex z) {
            const Jet x = fa(z), y = fb(z);
            return Jet{x.value * y.value, x.dz * y.value + x.value * y.dz, x.dzbar * y.value + x.value * y.dzbar,
                       x.dzdzbar * y.value + x.dz * y.dzbar + x.dzbar * y.dz + x.value * y.dzdzbar};
          },
          a.has_second && b.has_second, "(" + a.name + ")*(" + b.name + ")"};
}

}  // namespace disc

// ---------------------------------------------------------------- integrals

namespace {

// 2 sum w_i r_i dtheta h(i, j): the integral of h against i dz ^ dzbar. The
// `stride` subsamples angles for value-only refinement estimates.
template <class H>
Complex integrate(const DiscGrid& g, H&& h, int stride = 1) {
  Complex total = 0.0;
  const double dth = g.angular_weight() * stride;
  for (std::size_t i = 0; i < g.radial(); ++i) {
    Complex ring = 0.0;
    for (int j = 0; j < g.angular; j += stride) ring += h(i, j);
    total += g.radial_weights[i] * g.radii[i] * ring;
  }
  return 2.0 * dth * total;
}

double seminorm_on(const DiscFunction& f, int stride = 1) {
  return integrate(f.grid(), [&](std::size_t i, int j) { return Complex(std::norm(f.jet(i, j).dz)); }, stride).real();
}

DiscGrid coarse_of(const DiscGrid& g) {
  return DiscGrid::gauss(std::max<int>(2, static_cast<int>(g.radial()) / 2), std::max(4, g.angular / 2));
}

void require_boundary_vanishing(const DiscFunction& f, double tol) {
  const DiscGrid& g = f.grid();
  double worst = 0.0;
  if (f.closed_form()) {
    for (int j = 0; j < g.angular; ++j) worst = std::max(worst, std::abs(f.closed_form()->eval(std::polar(1.0, g.angle(j))).value));
  } else {
    // Linear extrapolation from the two outermost rings to r = 1.
    const std::size_t n = g.radial();
    const double r1 = g.radii[n - 2], r2 = g.radii[n - 1];
    for (int j = 0; j < g.angular; ++j) {
      const Complex a = f.value(n - 2, j), b = f.value(n - 1, j);
      worst = std::max(worst, std::abs(b + (b - a) * (1.0 - r2) / (r2 - r1)));
    }
  }
  if (worst > tol) {
    throw Error(ErrorCode::BoundaryNonVanishing, "|f| reaches " + fmt(worst) + " on the unit circle (tolerance " +
                                                     fmt(tol) + ")");
  }
}

CheckResult make_check(std::string name, double lhs, double rhs, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  c.tolerance = tol;
  c.passed = c.residual <= tol;
  return c;
}

}  // namespace

Estimate seminorm1(const DiscFunction& f, double tolerance) {
  Estimate e;
  e.value = seminorm_on(f);
  if (f.closed_form()) {
    e.error_estimate = std::abs(e.value - seminorm_on(f.resample(coarse_of(f.grid()))));
  } else {
    e.error_estimate = f.grid().angular % 2 == 0 ? std::abs(e.value - seminorm_on(f, 2)) : 0.0;
  }
  if (e.error_estimate > tolerance) {
    throw Error(ErrorCode::GridTooCoarse, "seminorm refinement estimate " + fmt(e.error_estimate) +
                                              " exceeds tolerance " + fmt(tolerance));
  }
  return e;
}

Complex dirichlet_pairing(const DiscFunction& f, const DiscFunction& g) {
  DiscFunction gg = [&] {
    if (g.grid() == f.grid()) return g;
    if (!g.closed_form()) {
      throw Error(ErrorCode::GridIncompatibleWithDegree, "value-only functions must share a grid to be paired");
    }
    return g.resample(f.grid());
  }();
  return integrate(f.grid(), [&](std::size_t i, int j) { return f.jet(i, j).dz * std::conj(gg.jet(i, j).dz); });
}

DiscFunction pullback_pow(const DiscFunction& f, int n, const std::optional<DiscGrid>& target) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
  if (f.closed_form()) {
    auto fe = f.closed_form()->eval;
    ClosedForm form{[fe, n](Complex z) {
                      const Complex w = ipow(z, n);
                      const Jet x = fe(w);
                      const Complex dphi = double(n) * ipow(z, n - 1);
                      return Jet{x.value, x.dz * dphi, x.dzbar * std::conj(dphi), x.dzdzbar * std::norm(dphi)};
                    },
                    f.closed_form()->has_second, "pullback^" + std::to_string(n) + "(" + f.closed_form()->name + ")"};
    return DiscFunction::from_closed_form(target.value_or(f.grid()), std::move(form));
  }
  const DiscGrid pre = f.grid().preimage(n);
  if (target && !(*target == pre)) {
    throw Error(ErrorCode::GridIncompatibleWithDegree, "value-only pull-back lands on the preimage grid only");
  }
  const int na = f.grid().angular;
  std::vector<Complex> values(pre.size());
  for (std::size_t i = 0; i < pre.radial(); ++i) {
    for (int j = 0; j < na; ++j) values[i * na + j] = f.value(i, static_cast<int>((static_cast<long long>(n) * j) % na));
  }
  return DiscFunction::from_values(pre, std::move(values));
}

DiscFunction pushforward_pow(const DiscFunction& g, int n, const std::optional<DiscGrid>& target) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
  if (g.closed_form()) {
    auto ge = g.closed_form()->eval;
    ClosedForm form{[ge, n](Complex w) {
                      const Complex root = std::pow(w, 1.0 / n);  // principal branch
                      Jet out{0.0, 0.0, 0.0, 0.0};
                      for (int k = 0; k < n; ++k) {
                        const Complex zk = root * std::polar(1.0, 2.0 * kPi * k / n);
                        const Complex dz = zk / (double(n) * w);
                        const Jet x = ge(zk);
                        out.value += x.value;
                        out.dz += x.dz * dz;
                        out.dzbar += x.dzbar * std::conj(dz);
                        out.dzdzbar += x.dzdzbar * std::norm(dz);
                      }
                      return out;
                    },
                    g.closed_form()->has_second, "pushforward^" + std::to_string(n) + "(" + g.closed_form()->name + ")"};
    return DiscFunction::from_closed_form(target.value_or(g.grid()), std::move(form));
  }
  const DiscGrid img = g.grid().image(n);
  if (target && !(*target == img)) {
    throw Error(ErrorCode::GridIncompatibleWithDegree, "value-only push-forward lands on the image grid only");
  }
  std::vector<Complex> values(img.size());
  for (std::size_t i = 0; i < img.radial(); ++i) {
    for (int j = 0; j < img.angular; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k) s += g.value(i, j + k * img.angular);
      values[i * img.angular + j] = s;
    }
  }
  return DiscFunction::from_values(img, std::move(values));
}

nlohmann::ordered_json CheckResult::to_json() const {
  return {{"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"residual", residual}, {"tolerance", tolerance}, {"passed", passed}};
}

CheckResult check_dbar_equality(const DiscFunction& f, double tolerance) {
  require_boundary_vanishing(f, tolerance);
  double lhs = 0.0, rhs = 0.0;
  const DiscGrid& g = f.grid();
  const Complex sum = integrate(g, [&](std::size_t i, int j) {
    const Jet x = f.jet(i, j);
    return Complex(std::norm(x.dz), std::norm(x.dzbar));
  });
  lhs = sum.real();
  rhs = sum.imag();
  return make_check("dbar_equality", lhs, rhs, tolerance);
}

CheckResult check_hardy(const DiscFunction& f, double delta, double tolerance) {
  if (!(delta > 0.0 && delta < 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 2), got " + fmt(delta));
  }
  require_boundary_vanishing(f, tolerance);
  if (!f.closed_form()) {
    throw Error(ErrorCode::ClosedFormRequired, "the substituted Hardy quadrature samples f off the grid");
  }
  auto fe = f.closed_form()->eval;
  // lhs = 2 int int |f|^2 r^{delta-1} dr dtheta = (2/delta) int int |f(u^{1/delta} e^{i theta})|^2 du dtheta.
  auto weighted = [&](const DiscGrid& g) {
    double total = 0.0;
    for (std::size_t i = 0; i < g.radial(); ++i) {
      const double r = std::pow(g.radii[i], 1.0 / delta);
      double ring = 0.0;
      for (int j = 0; j < g.angular; ++j) ring += std::norm(fe(std::polar(r, g.angle(j))).value);
      total += g.radial_weights[i] * ring;
    }
    return 2.0 / delta * g.angular_weight() * total;
  };
  const double lhs = weighted(f.grid());
  const double coarse = weighted(coarse_of(f.grid()));
  if (std::abs(lhs - coarse) > tolerance * std::max(1.0, std::abs(lhs))) {
    throw Error(ErrorCode::QuadratureNotConverged,
                "Hardy lhs changed by " + fmt(std::abs(lhs - coarse)) + " under grid halving");
  }
  const double c = 4.0 / delta;
  const double rhs = c * c * seminorm1(f, tolerance * std::max(1.0, c * c)).value;
  CheckResult out = make_check("hardy", lhs, rhs, tolerance);
  out.residual = std::max(0.0, lhs - rhs);
  out.passed = lhs <= rhs + tolerance;
  return out;
}

CheckResult check_adjoint(const DiscFunction& f, const DiscFunction& g, int n, double tolerance) {
  const DiscFunction pf = pullback_pow(f, n, f.closed_form() ? std::optional<DiscGrid>(g.grid()) : std::nullopt);
  const DiscFunction pg = pushforward_pow(g, n, g.closed_form() ? std::optional<DiscGrid>(f.grid()) : std::nullopt);
  const Complex lhs = dirichlet_pairing(pf, g);
  const Complex rhs = dirichlet_pairing(f, pg);
  CheckResult out = make_check("adjoint", lhs.real(), rhs.real(), tolerance);
  out.residual = std::abs(lhs - rhs);
  out.passed = out.residual <= tolerance;
  return out;
}

CheckResult check_ibp(const DiscFunction& f, const DiscFunction& g, double tolerance) {
  require_boundary_vanishing(f, tolerance);
  if (!g.closed_form() || !g.closed_form()->has_second) {
    throw Error(ErrorCode::ClosedFormRequired, "dd^c g needs closed-form second derivatives");
  }
  const DiscFunction gg = g.resample(f.grid());
  // 2 pi int f dd^c conj(g) = 2 int f conj(g_{z zbar}) dx dy = int f conj(g_{z zbar}) i dz^dzbar.
  const Complex lhs = integrate(f.grid(), [&](std::size_t i, int j) {
    return f.value(i, j) * std::conj(gg.jet(i, j).dzdzbar);
  });
  const Complex rhs = -dirichlet_pairing(f, gg);
  CheckResult out = make_check("ibp", lhs.real(), rhs.real(), tolerance);
  out.residual = std::abs(lhs - rhs);
  out.passed = out.residual <= tolerance;
  return out;
}

// ---------------------------------------------------------------- suite

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  return {{"grid", {{"radial", radial}, {"angular", angular}}},
          {"tolerance", tolerance},
          {"checks", arr},
          {"all_passed", all_passed()}};
}

namespace {

// A check whose two sides are separately compared against a closed-form value.
CheckResult against(std::string name, double computed, double expected, double tol) {
  return make_check(std::move(name), computed, expected, tol);
}

CheckResult renamed(CheckResult c, std::string name) {
  c.name = std::move(name);
  return c;
}

}  // namespace

VerificationReport verify_analysis(int radial, int angular, double tol) {
  VerificationReport rep;
  rep.radial = radial;
  rep.angular = angular;
  rep.tolerance = tol;
  const DiscGrid grid = DiscGrid::gauss(radial, angular);
  auto on = [&](ClosedForm c) { return DiscFunction::from_closed_form(grid, std::move(c)); };
  auto& out = rep.checks;

  const DiscFunction bump = on(disc::one_minus_abs_sq());
  const DiscFunction zf = on(disc::z_power(1));
  out.push_back(against("seminorm1(1-|z|^2) = pi", seminorm1(bump, tol).value, kPi, tol));
  out.push_back(against("seminorm1(z) = 2pi", seminorm1(zf, tol).value, 2 * kPi, tol));
  out.push_back(against("seminorm1(const) = 0", seminorm1(on(disc::constant(3.0)), tol).value, 0.0, tol));

  {
    const DiscFunction push = pushforward_pow(on(disc::abs_sq()), 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.radial(); ++i)
      for (int j = 0; j < grid.angular; ++j) worst = std::max(worst, std::abs(push.value(i, j) - 2.0 * grid.radii[i]));
    out.push_back(against("pushforward(|z|^2, 2) = 2|w|", worst, 0.0, tol));
  }
  for (int n : {2, 3, 5}) {
    const DiscFunction push = pushforward_pow(on(disc::neg_log_abs_sq()), n);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.radial(); ++i)
      for (int j = 0; j < grid.angular; ++j)
        worst = std::max(worst, std::abs(push.value(i, j) + 2.0 * std::log(grid.radii[i])));
    out.push_back(against("pushforward(-log|z|^2, " + std::to_string(n) + ") = -log|w|^2", worst, 0.0, tol));
  }

  {
    const CheckResult adj = check_adjoint(on(disc::abs_sq()), on(disc::abs_sq()), 2, tol);
    out.push_back(renamed(adj, "adjoint(|w|^2, |z|^2, 2)"));
    out.push_back(against("adjoint lhs = 4pi/3", adj.lhs, 4 * kPi / 3, tol));
    out.push_back(against("adjoint rhs = 4pi/3", adj.rhs, 4 * kPi / 3, tol));
  }
  for (int n : {2, 3}) {
    const CheckResult adj = check_adjoint(bump, pullback_pow(bump, n), n, tol);
    out.push_back(renamed(adj, "adjoint(f, pullback f, " + std::to_string(n) + ")"));
    out.push_back(against("(pullback f, pullback f)_1 = " + std::to_string(n) + " pi", adj.lhs, n * kPi, tol));
    out.push_back(against("seminorm1(pullback^" + std::to_string(n) + " f) = n seminorm1(f)",
                          seminorm1(pullback_pow(bump, n), tol).value, n * seminorm1(bump, tol).value, tol));
  }

  for (double delta : {0.1, 0.25, 0.5, 1.0, 1.5}) {
    const CheckResult h = check_hardy(bump, delta, tol);
    const double closed = 4 * kPi * (1 / delta - 2 / (delta + 2) + 1 / (delta + 4));
    std::ostringstream ds;
    ds << delta;
    const std::string d = ds.str();
    out.push_back(renamed(h, "hardy(1-|z|^2, delta=" + d + ")"));
    out.push_back(against("hardy lhs closed form, delta=" + d, h.lhs, closed, tol));
    out.push_back(against("hardy rhs = (4/delta)^2 pi, delta=" + d, h.rhs, 16 / (delta * delta) * kPi,
                          tol * 16 / (delta * delta)));
  }

  // Boundary-vanishing family (1-|z|^2) p(z, zbar).
  const std::vector<std::pair<std::string, ClosedForm>> family = {
      {"1-|z|^2", disc::one_minus_abs_sq()},
      {"z(1-|z|^2)", disc::product(disc::z_power(1), disc::one_minus_abs_sq())},
      {"zbar^2(1-|z|^2)", disc::product(disc::polynomial({{0, 2, 1.0}}), disc::one_minus_abs_sq())},
      {"(1-|z|^2)^2(z+2i zbar^2)",
       disc::product(disc::product(disc::one_minus_abs_sq(), disc::one_minus_abs_sq()),
                     disc::polynomial({{1, 0, 1.0}, {0, 2, Complex(0, 2)}}))},
      {"(1-|z|^2)(3 - z^3 zbar + i z^2)",
       disc::product(disc::one_minus_abs_sq(), disc::polynomial({{0, 0, 3.0}, {3, 1, -1.0}, {2, 0, Complex(0, 1)}}))},
  };
  for (const auto& [name, form] : family) {
    out.push_back(renamed(check_dbar_equality(on(form), tol), "dbar_equality(" + name + ")"));
  }
  {
    const CheckResult d = check_dbar_equality(on(family[1].second), tol);
    out.push_back(against("dbar lhs z(1-|z|^2) = 2pi/3", d.lhs, 2 * kPi / 3, tol));
    out.push_back(against("dbar rhs z(1-|z|^2) = 2pi/3", d.rhs, 2 * kPi / 3, tol));
  }

  {
    const CheckResult ibp = check_ibp(bump, on(disc::abs_sq()), tol);
    out.push_back(renamed(ibp, "ibp(1-|z|^2, |z|^2)"));
    out.push_back(against("ibp lhs = pi", ibp.lhs, kPi, tol));
    const CheckResult harm = check_ibp(bump, on(disc::real_part()), tol);
    out.push_back(renamed(harm, "ibp(1-|z|^2, Re z)"));
    out.push_back(against("ibp harmonic rhs = 0", harm.rhs, 0.0, tol));
    out.push_back(renamed(check_ibp(on(family[3].second), on(disc::polynomial({{2, 1, 1.0}, {0, 3, 2.0}})), tol),
                          "ibp((1-|z|^2)^2(z+2i zbar^2), z^2 zbar + 2 zbar^3)"));
  }
  return rep;
}

}  // namespace x0calc
