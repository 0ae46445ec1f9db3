#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "x0calc/eis_chow.hpp"

namespace x0calc {

/// Endomorphism of the Eisenstein space, column j holding the image of basis
/// element j. Partial operators (Atkin-Lehner) leave some columns undefined.
class EisOperator {
 public:
  EisOperator(EisBasis basis, std::vector<std::vector<SymbolicReal>> matrix, std::vector<bool> defined);

  static EisOperator identity(const EisBasis& basis);

  const EisBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  const SymbolicReal& at(std::size_t row, std::size_t col) const { return matrix_.at(row).at(col); }
  bool column_defined(std::size_t col) const { return defined_.at(col); }
  bool total() const;

  /// Throws OutsideDomain if v has a nonzero coordinate on an undefined column.
  EisVector apply(const EisVector& v) const;

  /// this o other, defined on the columns where other is defined and lands
  /// inside the domain of this.
  EisOperator compose(const EisOperator& other) const;

  nlohmann::ordered_json to_json() const;

  friend bool operator==(const EisOperator&, const EisOperator&) = default;

 private:
  EisBasis basis_;
  std::vector<std::vector<SymbolicReal>> matrix_;
  std::vector<bool> defined_;
};

/// Hecke constant c_{N,l} = 12 (l - 1) / psi(N) * LOG(l).
SymbolicReal hecke_shift(std::int64_t l, std::int64_t N);

/// T_l for a prime l not dividing N: scalar l+1 on F and every G(p), and
/// DINF -> (l+1) DINF + c_{N,l} F. Throws BadHeckePrime.
EisOperator t_hat(std::int64_t l, std::int64_t N);

/// Atkin-Lehner involution w_d (d | N, gcd(d, N/d) = 1, d > 1) on its domain
/// F + span{G(p)}: identity on F, G(p) -> -G(p) when p | d and G(p) otherwise.
/// The DINF column is undefined. Only the case d = N is proved in general; the
/// sign rule for other d is its multiplicative extension.
EisOperator w_hat(std::int64_t d, std::int64_t N);

/// A^T G = G A on the defined columns. Throws BasisMismatch.
bool is_self_adjoint(const EisOperator& op, const GramMatrix& gram);

/// AB - BA = 0 on the columns where both products are defined.
bool commutator_is_zero(const EisOperator& a, const EisOperator& b);

}  // namespace x0calc
