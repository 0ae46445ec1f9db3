#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace x0calc {

using Complex = std::complex<double>;

/// Polar product grid on the open unit disc: Gauss-Legendre radii in (0, 1)
/// and `angular` equispaced angles theta_j = offset + 2 pi j / angular.
/// Integrals of h against i dz ^ dzbar = 2 r dr dtheta are
///   2 sum_i sum_j w_i r_i (2 pi / angular) h(r_i e^{i theta_j}).
struct DiscGrid {
  std::vector<double> radii;
  std::vector<double> radial_weights;  // for int_0^1 dr
  int angular = 512;
  double offset = 0.0;
  int exact_degree = 0;  // radial rule is exact for r^k, k <= exact_degree

  /// Gauss radial rule; validates exactness on monomials at construction.
  static DiscGrid gauss(int radial = 256, int angular = 512);

  std::size_t radial() const { return radii.size(); }
  std::size_t size() const { return radii.size() * static_cast<std::size_t>(angular); }
  double angle(int j) const;
  double angular_weight() const;
  Complex node(std::size_t i, int j) const;

  /// Grid of w = z^n images: radii r^n, weights n r^{n-1} w, angular / n angles.
  /// Throws GridIncompatibleWithDegree unless n divides `angular`.
  DiscGrid image(int n) const;
  /// Grid of z with z^n a node: radii r^{1/n}, same angular count, offset / n.
  DiscGrid preimage(int n) const;

  friend bool operator==(const DiscGrid&, const DiscGrid&) = default;
};

/// Value and first/second Wirtinger derivatives at a point.
struct Jet {
  Complex value;
  Complex dz;
  Complex dzbar;
  Complex dzdzbar;  // d^2 / dz dzbar, a quarter of the Laplacian
};

struct ClosedForm {
  std::function<Jet(Complex)> eval;
  bool has_second = true;
  std::string name;
};

/// Function on the disc given by its values at the nodes of a grid, with an
/// optional closed form that generated them. Derivatives come from the closed
/// form when present and from finite differences on the grid otherwise.
class DiscFunction {
 public:
  static DiscFunction from_closed_form(const DiscGrid& grid, ClosedForm form);
  static DiscFunction from_values(const DiscGrid& grid, std::vector<Complex> values);

  const DiscGrid& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }
  const std::optional<ClosedForm>& closed_form() const { return form_; }
  Complex value(std::size_t i, int j) const { return values_[i * grid_.angular + j]; }

  /// Derivatives at node (i, j).
  Jet jet(std::size_t i, int j) const;
  /// Same function sampled on another grid; requires a closed form.
  DiscFunction resample(const DiscGrid& grid) const;

  DiscFunction& operator+=(const DiscFunction& other);
  DiscFunction& operator*=(Complex c);
  friend DiscFunction operator+(DiscFunction a, const DiscFunction& b) { return a += b; }
  friend DiscFunction operator*(Complex c, DiscFunction a) { return a *= c; }

 private:
  DiscFunction(DiscGrid grid, std::vector<Complex> values, std::optional<ClosedForm> form);
  DiscGrid grid_;
  std::vector<Complex> values_;
  std::optional<ClosedForm> form_;
};

namespace disc {

// Closed-form test functions.
ClosedForm constant(Complex c);
ClosedForm z_power(int n);          // z^n
ClosedForm abs_sq();                // |z|^2
ClosedForm one_minus_abs_sq();      // 1 - |z|^2
ClosedForm abs_pow(double k);       // |z|^k
ClosedForm neg_log_abs_sq();        // -log |z|^2
ClosedForm real_part();             // Re z
/// sum c_ab z^a zbar^b.
ClosedForm polynomial(std::vector<std::tuple<int, int, Complex>> terms);
ClosedForm product(const ClosedForm& a, const ClosedForm& b);

}  // namespace disc

struct Estimate {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// ||f||_1^2 = i int_D df ^ conj(df) = 2 int |df/dz|^2 dx dy. The estimate is
/// the change against a grid with half the radial and angular nodes.
/// Throws GridTooCoarse if it exceeds `tolerance`.
Estimate seminorm1(const DiscFunction& f, double tolerance = 1e-6);

/// (f, g)_1 = i int df ^ conj(dg) on f's grid (g resampled if needed).
Complex dirichlet_pairing(const DiscFunction& f, const DiscFunction& g);

/// z -> f(z^n). Closed-form functions are sampled on `target` (default: f's
/// grid); value-only functions land on f.grid().preimage(n).
DiscFunction pullback_pow(const DiscFunction& f, int n, const std::optional<DiscGrid>& target = std::nullopt);

/// w -> sum_{rho^n = 1} g(rho w^{1/n}), principal branch. Closed-form functions
/// are sampled on `target` (default: g's grid); value-only functions land on
/// g.grid().image(n) and only sum node values.
DiscFunction pushforward_pow(const DiscFunction& g, int n, const std::optional<DiscGrid>& target = std::nullopt);

struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  nlohmann::ordered_json to_json() const;
};

/// i int |df/dz|^2 dz^dzbar against i int |df/dzbar|^2 dz^dzbar for f = 0 on
/// the boundary. Throws BoundaryNonVanishing.
CheckResult check_dbar_equality(const DiscFunction& f, double tolerance = 1e-6);

/// lhs = i int |f|^2 / |z|^{2 - delta} dz^dzbar (substitution r = u^{1/delta}),
/// rhs = (4/delta)^2 i int |df/dz|^2 dz^dzbar; passes when lhs <= rhs + tol.
/// Throws BoundaryNonVanishing, QuadratureNotConverged.
CheckResult check_hardy(const DiscFunction& f, double delta, double tolerance = 1e-6);

/// (phi^* f, g)_1 on the source disc against (f, phi_* g)_1, phi(z) = z^n.
/// f lives on the target disc, g on the source disc.
CheckResult check_adjoint(const DiscFunction& f, const DiscFunction& g, int n, double tolerance = 1e-6);

/// 2 pi int f dd^c conj(g) against -(f, g)_1, dd^c = (i / 2 pi) d dbar.
/// Throws BoundaryNonVanishing, ClosedFormRequired (second derivatives of g).
CheckResult check_ibp(const DiscFunction& f, const DiscFunction& g, double tolerance = 1e-6);

/// The certified suite on the given grid: every check compares closed-form
/// functions against closed-form values of both sides.
struct VerificationReport {
  std::vector<CheckResult> checks;
  int radial = 0;
  int angular = 0;
  double tolerance = 0.0;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
};

VerificationReport verify_analysis(int radial = 256, int angular = 512, double tolerance = 1e-6);

}  // namespace x0calc
