#include "x0calc/eis_chow.hpp"

#include <algorithm>

#include "x0calc/error.hpp"

namespace x0calc {

std::size_t EisBasis::g_index(std::int64_t p) const {
  auto it = std::find(primes.begin(), primes.end(), p);
  if (it == primes.end())
    throw Error(ErrorCode::NotADivisor, std::to_string(p) + " does not divide " + std::to_string(N));
  return 2 + static_cast<std::size_t>(it - primes.begin());
}

std::string EisBasis::label(std::size_t i) const {
  if (i == kF) return "F";
  if (i == kDinf) return "DINF";
  return "G(" + std::to_string(primes.at(i - 2)) + ")";
}

EisBasis eis_basis(std::int64_t N) {
  const Gamma0Data d = invariants(N);
  return EisBasis{N, d.primes};
}

std::string convention_name(DinfGConvention c) {
  return c == DinfGConvention::IntersectionLemma ? "intersection-lemma" : "orthogonal";
}

EisVector EisVector::zero(const EisBasis& basis) {
  return EisVector{basis, std::vector<SymbolicReal>(basis.dim())};
}

EisVector EisVector::unit(const EisBasis& basis, std::size_t index, const SymbolicReal& coef) {
  EisVector v = zero(basis);
  v.coords.at(index) = coef;
  return v;
}

EisVector& EisVector::operator+=(const EisVector& other) {
  if (!(basis == other.basis)) throw Error(ErrorCode::BasisMismatch, "adding vectors on different bases");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

nlohmann::ordered_json EisVector::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < coords.size(); ++i) j[basis.label(i)] = coords[i].to_string();
  return j;
}

bool GramMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(entries[i][j] == entries[j][i])) return false;
  return true;
}

nlohmann::ordered_json GramMatrix::to_json(int digits) const {
  nlohmann::ordered_json j;
  j["N"] = basis.N;
  j["basis"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < basis.dim(); ++i) j["basis"].push_back(basis.label(i));
  j["convention"] = convention_name(convention);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : entries) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  j["entries"] = rows;
  if (digits > 0) {
    auto nrows = nlohmann::ordered_json::array();
    for (const auto& row : entries) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& e : row) r.push_back(e.evaluate(digits).value);
      nrows.push_back(r);
    }
    j["numeric"] = nrows;
    j["precision"] = digits;
  }
  j["symmetric"] = is_symmetric();
  j["diagnostics"] = diagnostics;
  return j;
}

std::vector<std::int64_t> fiber_denominators(const Gamma0Data& data) {
  std::vector<std::int64_t> out;
  out.reserve(data.primes.size());
  for (std::int64_t p : data.primes) out.push_back(data.genus - 2 * invariants(data.N / p).genus + 1);
  return out;
}

GramMatrix gram(std::int64_t N, DinfGConvention convention) {
  const Gamma0Data data = invariants(N);
  const EisBasis basis{N, data.primes};
  const std::size_t n = basis.dim();
  const auto denoms = fiber_denominators(data);

  GramMatrix g;
  g.basis = basis;
  g.convention = convention;
  g.entries.assign(n, std::vector<SymbolicReal>(n));
  auto set = [&](std::size_t i, std::size_t j, const SymbolicReal& v) {
    g.entries[i][j] = v;
    g.entries[j][i] = v;
  };
  set(EisBasis::kF, EisBasis::kDinf, Rational(1, 2));
  set(EisBasis::kDinf, EisBasis::kDinf, SymbolicReal::kappa(Rational(144, data.psi)));
  for (std::size_t k = 0; k < data.primes.size(); ++k) {
    const std::int64_t p = data.primes[k];
    if (convention == DinfGConvention::IntersectionLemma) set(EisBasis::kDinf, 2 + k, SymbolicReal::log(p));
    set(2 + k, 2 + k, SymbolicReal::log(p, Rational(-4 * denoms[k])));
    if (denoms[k] == 0) g.diagnostics.push_back("DegenerateGenus: g - 2 g_{N/p} + 1 = 0 at p=" + std::to_string(p));
  }
  if (convention == DinfGConvention::IntersectionLemma && !data.primes.empty())
    g.diagnostics.push_back(
        "DinfGPairingNonzero: <DINF, G(p)> = LOG(p) from <D_inf, X_p^inf> = log p and <D_inf, X_p^0> = 0; "
        "the orthogonal-sum presentation of Eis would make it 0");
  return g;
}

SymbolicReal pair(const GramMatrix& g, const EisVector& x, const EisVector& y) {
  if (!(x.basis == g.basis) || !(y.basis == g.basis))
    throw Error(ErrorCode::BasisMismatch, "pairing vectors on level " + std::to_string(x.basis.N) + " and " +
                                              std::to_string(y.basis.N) + " with Gram matrix of level " +
                                              std::to_string(g.basis.N));
  SymbolicReal out;
  const std::size_t n = g.basis.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coords[j].is_zero() || g.entries[i][j].is_zero()) continue;
      out += mul(mul(x.coords[i], g.entries[i][j]), y.coords[j]);
    }
  }
  return out;
}

SymbolicReal pair(const EisVector& x, const EisVector& y) {
  if (!(x.basis == y.basis)) throw Error(ErrorCode::BasisMismatch, "pairing vectors on different bases");
  return pair(gram(x.basis.N), x, y);
}

namespace {

void require_nondegenerate(const Gamma0Data& data, const std::vector<std::int64_t>& denoms) {
  for (std::size_t k = 0; k < denoms.size(); ++k)
    if (denoms[k] == 0)
      throw Error(ErrorCode::DegenerateGenus, "g - 2 g_{N/p} + 1 = 0 for N=" + std::to_string(data.N) +
                                                  ", p=" + std::to_string(data.primes[k]));
}

}  // namespace

EisVector w_vector(std::int64_t N, DinfGConvention convention) {
  const Gamma0Data data = invariants(N);
  const auto denoms = fiber_denominators(data);
  require_nondegenerate(data, denoms);
  const EisBasis basis{N, data.primes};
  const GramMatrix g = gram(N, convention);

  EisVector w = EisVector::zero(basis);
  for (std::size_t k = 0; k < data.primes.size(); ++k)
    w.coords[2 + k] = Rational(-(data.genus - 1), 2 * denoms[k]);
  // <W, DINF> = c/2 + sum_p a_p <G(p), DINF> = 0.
  const SymbolicReal rest = pair(g, w, EisVector::unit(basis, EisBasis::kDinf));
  w.coords[EisBasis::kF] = Rational(-2) * rest;
  return w;
}

SymbolicReal w_square(std::int64_t N, DinfGConvention convention) {
  const Gamma0Data data = invariants(N);
  const auto denoms = fiber_denominators(data);
  require_nondegenerate(data, denoms);
  const Rational gm1 = data.genus - 1;

  SymbolicReal closed;
  for (std::size_t k = 0; k < data.primes.size(); ++k)
    closed += SymbolicReal::log(data.primes[k], -gm1 * gm1 / denoms[k]);

  const EisVector w = w_vector(N, convention);
  const SymbolicReal from_gram = pair(gram(N, convention), w, w);
  if (!(closed == from_gram))
    throw Error(ErrorCode::InvariantViolation, "W^2 closed form " + closed.to_string() +
                                                   " differs from Gram pairing " + from_gram.to_string());
  return closed;
}

EisVector omega_eis_vector(std::int64_t N, DinfGConvention convention) {
  const Gamma0Data data = invariants(N);
  EisVector v = w_vector(N, convention);
  v.coords[EisBasis::kDinf] += Rational(2 * data.genus - 2);
  return v;
}

SymbolicReal omega_eis_sq(std::int64_t N, DinfGConvention convention) {
  const Gamma0Data data = invariants(N);
  const auto denoms = fiber_denominators(data);
  require_nondegenerate(data, denoms);
  const Rational gm1 = data.genus - 1;

  SymbolicReal closed = SymbolicReal::kappa(gm1 * gm1 * Rational(576, data.psi));
  for (std::size_t k = 0; k < data.primes.size(); ++k)
    closed -= SymbolicReal::log(data.primes[k], gm1 * gm1 / denoms[k]);

  const EisVector v = omega_eis_vector(N, convention);
  const SymbolicReal from_gram = pair(gram(N, convention), v, v);
  if (!(closed == from_gram))
    throw Error(ErrorCode::InvariantViolation, "omega_Eis^2 closed form " + closed.to_string() +
                                                   " differs from Gram pairing " + from_gram.to_string());
  return closed;
}

FiberClasses fiber_classes(std::int64_t N, std::int64_t p) {
  const EisBasis basis = eis_basis(N);
  const std::size_t gi = basis.g_index(p);
  // X_inf + X_0 = (0, 2 log p) = 2 log p F and X_inf - X_0 = G(p).
  const EisVector half_sum = EisVector::unit(basis, EisBasis::kF, SymbolicReal::log(p));
  FiberClasses out{half_sum, half_sum};
  out.x_inf.coords[gi] = Rational(1, 2);
  out.x_zero.coords[gi] = Rational(-1, 2);
  return out;
}

}  // namespace x0calc
