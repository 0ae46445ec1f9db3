#include "x0calc/hecke_eis.hpp"

#include <algorithm>
#include <numeric>

#include "x0calc/error.hpp"

namespace x0calc {

EisOperator::EisOperator(EisBasis basis, std::vector<std::vector<SymbolicReal>> matrix, std::vector<bool> defined)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), defined_(std::move(defined)) {
  const std::size_t n = basis_.dim();
  if (matrix_.size() != n || defined_.size() != n)
    throw Error(ErrorCode::BasisMismatch, "operator matrix does not match the basis dimension");
  for (const auto& row : matrix_)
    if (row.size() != n) throw Error(ErrorCode::BasisMismatch, "operator matrix is not square");
}

EisOperator EisOperator::identity(const EisBasis& basis) {
  const std::size_t n = basis.dim();
  std::vector<std::vector<SymbolicReal>> m(n, std::vector<SymbolicReal>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return EisOperator(basis, std::move(m), std::vector<bool>(n, true));
}

bool EisOperator::total() const {
  return std::all_of(defined_.begin(), defined_.end(), [](bool b) { return b; });
}

EisVector EisOperator::apply(const EisVector& v) const {
  if (!(v.basis == basis_)) throw Error(ErrorCode::BasisMismatch, "operator and vector on different bases");
  EisVector out = EisVector::zero(basis_);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v.coords[j].is_zero()) continue;
    if (!defined_[j])
      throw Error(ErrorCode::OutsideDomain, "vector has nonzero " + basis_.label(j) + " coordinate outside the domain");
    for (std::size_t i = 0; i < dim(); ++i) out.coords[i] += mul(matrix_[i][j], v.coords[j]);
  }
  return out;
}

EisOperator EisOperator::compose(const EisOperator& other) const {
  if (!(other.basis_ == basis_)) throw Error(ErrorCode::BasisMismatch, "composing operators on different bases");
  const std::size_t n = dim();
  std::vector<std::vector<SymbolicReal>> m(n, std::vector<SymbolicReal>(n));
  std::vector<bool> defined(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (!other.defined_[j]) continue;
    bool inside = true;
    for (std::size_t k = 0; k < n; ++k)
      if (!defined_[k] && !other.matrix_[k][j].is_zero()) inside = false;
    if (!inside) continue;
    defined[j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (defined_[k]) m[i][j] += mul(matrix_[i][k], other.matrix_[k][j]);
  }
  return EisOperator(basis_, std::move(m), std::move(defined));
}

nlohmann::ordered_json EisOperator::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = basis_.N;
  j["basis"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < dim(); ++i) j["basis"].push_back(basis_.label(i));
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    auto r = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < dim(); ++c) {
      if (defined_[c])
        r.push_back(matrix_[i][c].to_string());
      else
        r.push_back(nullptr);
    }
    rows.push_back(r);
  }
  j["matrix"] = rows;
  return j;
}

SymbolicReal hecke_shift(std::int64_t l, std::int64_t N) {
  const Gamma0Data data = invariants(N);
  if (!is_prime(l) || N % l == 0)
    throw Error(ErrorCode::BadHeckePrime, "T_" + std::to_string(l) + " needs a prime not dividing " + std::to_string(N));
  return SymbolicReal::log(l, Rational(12 * (l - 1), data.psi));
}

EisOperator t_hat(std::int64_t l, std::int64_t N) {
  const SymbolicReal shift = hecke_shift(l, N);
  const EisBasis basis = eis_basis(N);
  const std::size_t n = basis.dim();
  std::vector<std::vector<SymbolicReal>> m(n, std::vector<SymbolicReal>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = l + 1;
  m[EisBasis::kF][EisBasis::kDinf] = shift;
  return EisOperator(basis, std::move(m), std::vector<bool>(n, true));
}

EisOperator w_hat(std::int64_t d, std::int64_t N) {
  const EisBasis basis = eis_basis(N);
  if (d <= 1 || N % d != 0 || std::gcd(d, N / d) != 1)
    throw Error(ErrorCode::BadInvolutionParam,
                "w_d needs d > 1, d | N and gcd(d, N/d) = 1; got d=" + std::to_string(d) + ", N=" + std::to_string(N));
  const std::size_t n = basis.dim();
  std::vector<std::vector<SymbolicReal>> m(n, std::vector<SymbolicReal>(n));
  std::vector<bool> defined(n, true);
  defined[EisBasis::kDinf] = false;
  m[EisBasis::kF][EisBasis::kF] = 1;
  for (std::size_t k = 0; k < basis.primes.size(); ++k) m[2 + k][2 + k] = d % basis.primes[k] == 0 ? -1 : 1;
  return EisOperator(basis, std::move(m), std::move(defined));
}

bool is_self_adjoint(const EisOperator& op, const GramMatrix& gram) {
  if (!(op.basis() == gram.basis)) throw Error(ErrorCode::BasisMismatch, "operator and Gram matrix on different bases");
  const std::size_t n = op.dim();
  // (A^T G)_{ij} = <A e_i, e_j>, (G A)_{ij} = <e_i, A e_j>.
  for (std::size_t i = 0; i < n; ++i) {
    if (!op.column_defined(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!op.column_defined(j)) continue;
      SymbolicReal lhs, rhs;
      for (std::size_t k = 0; k < n; ++k) {
        lhs += mul(op.at(k, i), gram.at(k, j));
        rhs += mul(gram.at(i, k), op.at(k, j));
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool commutator_is_zero(const EisOperator& a, const EisOperator& b) {
  if (!(a.basis() == b.basis())) throw Error(ErrorCode::BasisMismatch, "commutator of operators on different bases");
  const EisOperator ab = a.compose(b);
  const EisOperator ba = b.compose(a);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (!ab.column_defined(j) || !ba.column_defined(j)) continue;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!(ab.at(i, j) == ba.at(i, j))) return false;
  }
  return true;
}

}  // namespace x0calc
