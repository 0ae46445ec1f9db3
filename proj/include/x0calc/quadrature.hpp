#pragma once

#include <vector>

namespace x0calc {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  /// Exact for polynomials up to this degree.
  int exact_degree() const { return 2 * static_cast<int>(nodes.size()) - 1; }
};

/// n-point Gauss-Legendre rule on [a, b], nodes ascending.
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

}  // namespace x0calc
