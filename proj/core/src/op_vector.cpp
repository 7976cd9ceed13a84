#include "steenrod/op_vector.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace steenrod {

namespace {

struct BasisEntry {
  std::vector<ExponentSeq> monomials;
  std::map<ExponentSeq, std::size_t, RlexLess> index;
};

const BasisEntry& basis_entry(std::int64_t n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, BasisEntry> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p.value(), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    BasisEntry e;
    e.monomials = enumerate_monomials(n, p);
    for (std::size_t i = 0; i < e.monomials.size(); ++i) e.index.emplace(e.monomials[i], i);
    it = cache.emplace(key, std::move(e)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<ExponentSeq>& monomial_basis(std::int64_t n, Prime p) {
  return basis_entry(n, p).monomials;
}

std::size_t monomial_index(const ExponentSeq& r) {
  const auto& e = basis_entry(r.degree(), r.prime());
  auto it = e.index.find(r);
  if (it == e.index.end()) throw std::logic_error("monomial_index: monomial not in basis");
  return it->second;
}

OpVector::OpVector(std::int64_t degree, Prime p)
    : degree_(degree), prime_(p), coeffs_(monomial_basis(degree, p).size(), 0) {}

OpVector::OpVector(std::int64_t degree, Prime p, std::vector<std::int64_t> coeffs)
    : degree_(degree), prime_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != monomial_basis(degree, p).size())
    throw std::invalid_argument("OpVector: coefficient count mismatch");
  for (auto& c : coeffs_) c = prime_.reduce(c);
}

std::int64_t OpVector::pairing(const ExponentSeq& r) const {
  if (r.degree() != degree_) throw std::invalid_argument("OpVector: degree mismatch");
  return coeffs_[monomial_index(r)];
}

OpVector OpVector::operator+(const OpVector& o) const {
  if (degree_ != o.degree_ || !(prime_ == o.prime_))
    throw std::invalid_argument("OpVector: mismatched sum");
  OpVector out(degree_, prime_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = prime_.add(coeffs_[i], o.coeffs_[i]);
  return out;
}

OpVector OpVector::operator-() const { return scaled(prime_.value() - 1); }

OpVector OpVector::scaled(std::int64_t c) const {
  OpVector out(degree_, prime_);
  std::int64_t cr = prime_.reduce(c);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = prime_.mul(coeffs_[i], cr);
  return out;
}

bool OpVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

nlohmann::json to_json(const OpVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  const auto& basis = monomial_basis(v.degree(), v.prime());
  for (std::size_t i = 0; i < basis.size(); ++i)
    entries.push_back({{"monomial", basis[i].monomial_text()},
                       {"tuple", basis[i].tuple_text()},
                       {"value", v.coeffs()[i]}});
  return {{"degree", v.degree()}, {"prime", v.prime().value()}, {"entries", entries}};
}

OpVector op_Pn(std::int64_t n, Prime p) {
  OpVector v(n, p);
  v.set(monomial_index(ExponentSeq(p, {n})), 1);
  return v;
}

OpVector chi_Pn_dual(std::int64_t n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, OpVector> cache;
  auto key = std::make_pair(p.value(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const auto& basis = monomial_basis(n, p);
  ExponentSeq xi1n(p, {n});
  OpVector v(n, p);
  for (std::size_t i = 0; i < basis.size(); ++i)
    v.set(i, antipode(DualPoly::monomial(basis[i])).coeff(xi1n));

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

OpVector compose_left_Pi(std::int64_t i, const OpVector& theta) {
  if (i < 0) throw std::invalid_argument("compose_left_Pi: negative index");
  if (i == 0) return theta;
  Prime p = theta.prime();
  std::int64_t n = i + theta.degree();
  const auto& basis = monomial_basis(n, p);
  OpVector out(n, p);
  for (std::size_t row = 0; row < basis.size(); ++row) {
    DualPoly rest = diagonal_left_xi1(basis[row], i);
    std::int64_t s = 0;
    for (const auto& [seq, c] : rest.terms()) s = p.add(s, p.mul(c, theta.pairing(seq)));
    out.set(row, s);
  }
  return out;
}

OpVector chi_Pn_inductive(std::int64_t n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, OpVector> cache;
  auto key = std::make_pair(p.value(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  OpVector v(n, p);
  if (n == 0) {
    v.set(0, 1);
  } else {
    for (std::int64_t i = 1; i <= n; ++i)
      v = v + compose_left_Pi(i, chi_Pn_inductive(n - i, p));
    v = -v;
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, v);
  return v;
}

OpVector op_Pi_chi_Pnmi(std::int64_t i, std::int64_t n, Prime p) {
  if (i < 0 || i > n) throw std::invalid_argument("op_Pi_chi_Pnmi: index out of range");
  return compose_left_Pi(i, chi_Pn_dual(n - i, p));
}

FpMatrix mu_matrix(std::int64_t n, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, FpMatrix> cache;
  auto key = std::make_pair(p.value(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const auto& basis = monomial_basis(n, p);
  FpMatrix m(basis.size(), static_cast<std::size_t>(n + 1), p);
  for (std::int64_t i = 0; i <= n; ++i) {
    OpVector col = op_Pi_chi_Pnmi(i, n, p);
    for (std::size_t row = 0; row < basis.size(); ++row)
      m.set(row, static_cast<std::size_t>(i), col.coeffs()[row]);
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, m);
  return m;
}

}  // namespace steenrod
