#include "steenrod/dual_poly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace steenrod {

DualPoly DualPoly::monomial(const ExponentSeq& r, std::int64_t coeff) {
  DualPoly p(r.prime());
  p.add_term(r, coeff);
  return p;
}

DualPoly DualPoly::xi(unsigned k, Prime p) {
  if (k == 0) return one(p);
  std::vector<std::int64_t> entries(k, 0);
  entries[k - 1] = 1;
  return monomial(ExponentSeq(p, std::move(entries)));
}

std::int64_t DualPoly::coeff(const ExponentSeq& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? 0 : it->second;
}

void DualPoly::add_term(const ExponentSeq& r, std::int64_t coeff) {
  if (!(r.prime() == prime_)) throw std::invalid_argument("DualPoly: prime mismatch");
  std::int64_t c = prime_.reduce(coeff);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(r, c);
  if (!inserted) {
    it->second = prime_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

DualPoly DualPoly::operator+(const DualPoly& o) const {
  if (!(prime_ == o.prime_)) throw std::invalid_argument("DualPoly: prime mismatch");
  DualPoly out = *this;
  for (const auto& [r, c] : o.terms_) out.add_term(r, c);
  return out;
}

DualPoly DualPoly::operator-(const DualPoly& o) const { return *this + (-o); }

DualPoly DualPoly::operator-() const { return scaled(prime_.value() - 1); }

DualPoly DualPoly::scaled(std::int64_t c) const {
  DualPoly out(prime_);
  for (const auto& [r, v] : terms_) out.add_term(r, prime_.mul(prime_.reduce(c), v));
  return out;
}

DualPoly DualPoly::operator*(const DualPoly& o) const {
  if (!(prime_ == o.prime_)) throw std::invalid_argument("DualPoly: prime mismatch");
  DualPoly out(prime_);
  for (const auto& [ra, ca] : terms_)
    for (const auto& [rb, cb] : o.terms_) out.add_term(ra + rb, prime_.mul(ca, cb));
  return out;
}

DualPoly DualPoly::pow(std::int64_t e) const {
  if (e < 0) throw std::domain_error("DualPoly::pow: negative exponent");
  DualPoly result = one(prime_);
  DualPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool DualPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_.begin()->first.degree();
  for (const auto& [r, c] : terms_)
    if (r.degree() != d) return false;
  return true;
}

std::int64_t DualPoly::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("DualPoly::degree: not homogeneous");
  return terms_.begin()->first.degree();
}

std::string DualPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c != 1 || r.length() == 0) out << c;
    if (c != 1 && r.length() != 0) out << "*";
    if (r.length() != 0) out << r.monomial_text();
  }
  return out.str();
}

DualPoly antipode_xi(unsigned k, Prime p) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, unsigned>, DualPoly> cache;

  if (k == 0) return DualPoly::one(p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p.value(), k});
    if (it != cache.end()) return it->second;
  }

  DualPoly sum(p);
  std::int64_t pj = 1;  // p^j
  for (unsigned j = 0; j < k; ++j) {
    sum = sum + DualPoly::xi(k - j, p).pow(pj) * antipode_xi(j, p);
    pj *= p.value();
  }
  DualPoly result = -sum;

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::pair<std::int64_t, unsigned>{p.value(), k}, result);
  return result;
}

DualPoly antipode(const DualPoly& x) {
  Prime p = x.prime();
  DualPoly out(p);
  for (const auto& [r, c] : x.terms()) {
    DualPoly term = DualPoly::one(p).scaled(c);
    for (unsigned j = 1; j <= r.length(); ++j)
      if (r.entry(j) > 0) term = term * antipode_xi(j, p).pow(r.entry(j));
    out = out + term;
  }
  return out;
}

namespace {

// DFS over the generators of R. For xi_k^(r_k), sending t copies to the
// (xi_1^(p^(k-1)) | xi_{k-1}) branch contributes C(r_k, t) with left exponent
// t*p^(k-1) and right factor xi_{k-1}^t xi_k^(r_k - t).
void diagonal_rec(const ExponentSeq& r, unsigned k, std::int64_t left_needed,
                  std::vector<std::int64_t>& right, std::int64_t coeff, DualPoly& out) {
  Prime p = r.prime();
  if (left_needed < 0) return;
  if (k == 0) {
    if (left_needed == 0) out.add_term(ExponentSeq(p, right), coeff);
    return;
  }
  std::int64_t rk = r.entry(k);
  std::int64_t pk1 = 1;  // p^(k-1)
  for (unsigned i = 1; i < k; ++i) pk1 *= p.value();
  for (std::int64_t t = 0; t <= rk && t * pk1 <= left_needed; ++t) {
    std::int64_t c = binom_mod_p(rk, t, p).value();
    if (c == 0) continue;
    right[k - 1] += rk - t;
    if (k >= 2) right[k - 2] += t;
    diagonal_rec(r, k - 1, left_needed - t * pk1, right, p.mul(coeff, c), out);
    right[k - 1] -= rk - t;
    if (k >= 2) right[k - 2] -= t;
  }
}

}  // namespace

DualPoly diagonal_left_xi1(const ExponentSeq& r, std::int64_t i) {
  Prime p = r.prime();
  DualPoly out(p);
  if (i < 0 || i > r.weight()) return out;
  std::vector<std::int64_t> right(r.length(), 0);
  diagonal_rec(r, static_cast<unsigned>(r.length()), i, right, 1, out);
  return out;
}

}  // namespace steenrod
