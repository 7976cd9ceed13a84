#include <doctest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "steenrod/dual_poly.hpp"
#include "steenrod/exponent_seq.hpp"

using namespace steenrod;

namespace {

// Independent count of degree-n monomials: coefficient of t^n in the
// generating function prod_j 1/(1 - t^(d_j)), by dynamic programming.
std::int64_t monomial_count_dp(std::int64_t n, Prime p) {
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(n + 1), 0);
  coeff[0] = 1;
  for (unsigned j = 1; generator_degree(j, p) <= n; ++j) {
    std::int64_t d = generator_degree(j, p);
    for (std::int64_t t = d; t <= n; ++t) coeff[t] += coeff[t - d];
  }
  return coeff[static_cast<std::size_t>(n)];
}

// Full-diagonal oracle: Delta xi^R expanded as a tensor polynomial, with
// Delta xi_k = sum_{a+b=k} xi_a^(p^b) (x) xi_b and no pruning.
using Tensor = std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>,
                        std::int64_t>;

std::vector<std::int64_t> add_exp(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Tensor tensor_mul(const Tensor& x, const Tensor& y, Prime p) {
  Tensor out;
  for (const auto& [xt, xc] : x)
    for (const auto& [yt, yc] : y) {
      auto key = std::make_pair(add_exp(xt.first, yt.first), add_exp(xt.second, yt.second));
      std::int64_t c = p.reduce(out[key] + p.mul(xc, yc));
      if (c == 0)
        out.erase(key);
      else
        out[key] = c;
    }
  return out;
}

Tensor full_diagonal(const ExponentSeq& r) {
  Prime p = r.prime();
  Tensor acc{{{{}, {}}, 1}};
  for (unsigned k = 1; k <= r.length(); ++k) {
    Tensor delta_xik;
    std::int64_t pb = 1;
    for (unsigned b = 0; b <= k; ++b) {
      unsigned a = k - b;
      std::vector<std::int64_t> left, right;
      if (a > 0) {
        left.resize(a, 0);
        left[a - 1] = pb;
      }
      if (b > 0) {
        right.resize(b, 0);
        right[b - 1] = 1;
      }
      delta_xik[{left, right}] = 1;
      pb *= p.value();
    }
    for (std::int64_t copy = 0; copy < r.entry(k); ++copy) acc = tensor_mul(acc, delta_xik, p);
  }
  return acc;
}

}  // namespace

TEST_CASE("ExponentSeq: degree, weight, excess") {
  Prime p2(2), p3(3);
  ExponentSeq xi1n(p2, {5});
  CHECK(xi1n.degree() == 5);
  CHECK(xi1n.weight() == 5);
  CHECK(xi1n.excess() == 5);

  ExponentSeq xi2(p2, {0, 1});
  CHECK(xi2.degree() == 3);
  CHECK(xi2.weight() == 2);
  CHECK(xi2.excess() == 1);

  CHECK(ExponentSeq(p3, {1, 1}).degree() == 5);
  CHECK(ExponentSeq(p2, {1, 0, 1}).weight() == 5);

  CHECK_THROWS_AS(ExponentSeq(p2, {1, -1}), std::invalid_argument);
}

TEST_CASE("ExponentSeq: normalization and right-lex order") {
  Prime p(2);
  CHECK(ExponentSeq(p, {3, 0, 0}) == ExponentSeq(p, {3}));
  CHECK(ExponentSeq(p, {3}).rlex_less(ExponentSeq(p, {0, 1})));
  CHECK(!ExponentSeq(p, {0, 1}).rlex_less(ExponentSeq(p, {3})));
  CHECK(!ExponentSeq(p, {0, 1}).rlex_less(ExponentSeq(p, {0, 1})));
}

TEST_CASE("structural identity p||R|| - e(R) = (p-1)|R|") {
  for (std::int64_t pv : {2, 3, 5}) {
    Prime p(pv);
    std::int64_t nmax = pv == 2 ? 16 : 10;
    for (std::int64_t n = 0; n <= nmax; ++n)
      for (const ExponentSeq& r : enumerate_monomials(n, p)) {
        CHECK(r.degree() == n);
        CHECK(pv * r.weight() - r.excess() == (pv - 1) * n);
        CHECK(r.excess() >= alpha(r.weight(), p));
      }
  }
}

TEST_CASE("enumerate_monomials: known degrees") {
  Prime p(2);
  auto deg0 = enumerate_monomials(0, p);
  REQUIRE(deg0.size() == 1);
  CHECK(deg0[0] == ExponentSeq(p, {}));

  auto deg3 = enumerate_monomials(3, p);
  REQUIRE(deg3.size() == 2);
  CHECK(deg3[0] == ExponentSeq(p, {0, 1}));
  CHECK(deg3[1] == ExponentSeq(p, {3}));

  // Degree 7 over generator degrees 1, 3, 7.
  auto deg7 = enumerate_monomials(7, p);
  CHECK(deg7.size() == monomial_count_dp(7, p));
  std::vector<ExponentSeq> expected = {ExponentSeq(p, {0, 0, 1}), ExponentSeq(p, {1, 2}),
                                       ExponentSeq(p, {4, 1}), ExponentSeq(p, {7})};
  CHECK(deg7 == expected);
}

TEST_CASE("enumerate_monomials: count matches generating function, order is strict") {
  for (std::int64_t pv : {2, 3, 5}) {
    Prime p(pv);
    std::int64_t nmax = pv == 2 ? 20 : 12;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      auto basis = enumerate_monomials(n, p);
      CHECK(static_cast<std::int64_t>(basis.size()) == monomial_count_dp(n, p));
      for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i].rlex_less(basis[i - 1]));
    }
  }
}

TEST_CASE("DualPoly multiplication") {
  Prime p(2);
  DualPoly a = DualPoly::xi(1, p) + DualPoly::xi(2, p);
  CHECK(a * DualPoly::one(p) == a);
  CHECK(DualPoly::xi(1, p) * DualPoly::xi(1, p) ==
        DualPoly::monomial(ExponentSeq(p, {2})));
  // Frobenius: cross terms vanish mod 2.
  CHECK(a.pow(2) == DualPoly::monomial(ExponentSeq(p, {2})) +
                        DualPoly::monomial(ExponentSeq(p, {0, 2})));

  CHECK_THROWS_AS(a * DualPoly::one(Prime(3)), std::invalid_argument);
}

TEST_CASE("antipode of the generators") {
  Prime p2(2), p3(3);
  CHECK(antipode_xi(1, p2) == DualPoly::xi(1, p2));
  CHECK(antipode_xi(1, p3) == -DualPoly::xi(1, p3));
  CHECK(antipode_xi(2, p2) ==
        DualPoly::monomial(ExponentSeq(p2, {3})) + DualPoly::xi(2, p2));

  // Defining convolution: sum_j xi_(k-j)^(p^j) chi xi_j = 0 for k >= 1.
  for (std::int64_t pv : {2, 3}) {
    Prime p(pv);
    for (unsigned k = 1; k <= 4; ++k) {
      DualPoly sum(p);
      std::int64_t pj = 1;
      for (unsigned j = 0; j <= k; ++j) {
        sum = sum + DualPoly::xi(k - j, p).pow(pj) * antipode_xi(j, p);
        pj *= pv;
      }
      CHECK(sum.is_zero());
    }
  }

  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(antipode_xi(k, p2).is_homogeneous());
    CHECK(antipode_xi(k, p2).degree() == generator_degree(k, p2));
  }
}

TEST_CASE("antipode is a degree-preserving involution") {
  Prime p2(2), p3(3);
  CHECK(antipode(DualPoly::one(p2)) == DualPoly::one(p2));
  CHECK(antipode(DualPoly::monomial(ExponentSeq(p2, {6}))) ==
        DualPoly::monomial(ExponentSeq(p2, {6})));
  CHECK(antipode(antipode(DualPoly::xi(2, p2))) == DualPoly::xi(2, p2));

  std::mt19937 rng(99);
  for (std::int64_t pv : {2, 3}) {
    Prime p(pv);
    for (std::int64_t n = 1; n <= (pv == 2 ? 20 : 10); ++n) {
      auto basis = enumerate_monomials(n, p);
      DualPoly x(p);
      for (const auto& r : basis)
        if (rng() % 2) x.add_term(r, 1 + static_cast<std::int64_t>(rng() % (pv - 1 + 1)));
      DualPoly chi_x = antipode(x);
      if (!chi_x.is_zero()) CHECK(chi_x.degree() == n);
      CHECK(antipode(chi_x) == x);
    }
  }
}

TEST_CASE("diagonal_left_xi1: base cases") {
  Prime p(2);
  ExponentSeq xi2(p, {0, 1});
  // i=0 keeps the whole monomial on the right.
  CHECK(diagonal_left_xi1(xi2, 0) == DualPoly::monomial(xi2));
  // Delta xi_2 = xi_1^2 (x) xi_1 + 1 (x) xi_2.
  CHECK(diagonal_left_xi1(xi2, 2) == DualPoly::xi(1, p));
  CHECK(diagonal_left_xi1(xi2, 1).is_zero());
  // Beyond the weight everything vanishes.
  CHECK(diagonal_left_xi1(xi2, 3).is_zero());
  for (std::int64_t n = 0; n <= 10; ++n)
    for (const auto& r : enumerate_monomials(n, p))
      CHECK(diagonal_left_xi1(r, r.weight() + 1).is_zero());
}

TEST_CASE("diagonal_left_xi1 matches the brute-force full diagonal") {
  for (std::int64_t pv : {2, 3}) {
    Prime p(pv);
    for (std::int64_t n = 0; n <= 8; ++n) {
      for (const ExponentSeq& r : enumerate_monomials(n, p)) {
        Tensor full = full_diagonal(r);
        // Every pure-xi_1 left component of the oracle must match, and the
        // restricted diagonal must produce nothing the oracle lacks.
        for (std::int64_t i = 0; i <= r.weight(); ++i) {
          DualPoly restricted = diagonal_left_xi1(r, i);
          std::vector<std::int64_t> left;
          if (i > 0) left = {i};
          Tensor expected;
          for (const auto& [key, c] : full)
            if (key.first == left) expected[key] = c;
          CHECK(restricted.term_count() == expected.size());
          for (const auto& [key, c] : expected)
            CHECK(restricted.coeff(ExponentSeq(p, key.second)) == c);
        }
      }
    }
  }
}

TEST_CASE("text rendering round-trips") {
  Prime p(2);
  ExponentSeq r(p, {3, 1});
  CHECK(r.tuple_text() == "(3,1)");
  CHECK(r.monomial_text() == "xi1^3 xi2");
  CHECK(ExponentSeq(p, {}).tuple_text() == "()");
  CHECK(ExponentSeq(p, {}).monomial_text() == "1");
  CHECK(ExponentSeq(p, {0, 2, 1}).monomial_text() == "xi2^2 xi3");

  for (std::int64_t n = 0; n <= 12; ++n)
    for (const auto& seq : enumerate_monomials(n, p)) {
      CHECK(ExponentSeq::parse_tuple(p, seq.tuple_text()) == seq);
      CHECK(ExponentSeq::parse_monomial(p, seq.monomial_text()) == seq);
    }
  CHECK_THROWS_AS(ExponentSeq::parse_tuple(p, "3,1"), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSeq::parse_monomial(p, "y1^3"), std::invalid_argument);
}
