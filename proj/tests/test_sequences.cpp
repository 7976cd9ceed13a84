#include <doctest.h>

#include <random>

#include "steenrod/relations.hpp"
#include "steenrod/sequences.hpp"

using namespace steenrod;

TEST_CASE("construct_M: small cases and extremal conditions") {
  Prime p(2);
  CHECK(construct_M(0, p) == ExponentSeq(p, {}));
  CHECK(construct_M(3, p) == ExponentSeq(p, {0, 1}));
  CHECK(construct_M(0, p).weight() == l_of_n(0, p) + 1);
  CHECK(construct_M(3, p).weight() == l_of_n(3, p) + 1);
  CHECK(construct_M(7, p).weight() == 4);
}

TEST_CASE("construct_M equals the brute-force right-lex maximum") {
  for (std::int64_t pv : {2, 3}) {
    Prime p(pv);
    for (std::int64_t n = 0; n <= 20; ++n) {
      ExponentSeq best = enumerate_monomials(n, p).front();
      for (const auto& r : enumerate_monomials(n, p))
        if (best.rlex_less(r)) best = r;
      CHECK(construct_M(n, p) == best);
    }
  }
}

TEST_CASE("construct_M: conditions and weight over the sweep") {
  for (std::int64_t pv : {2, 3, 5}) {
    Prime p(pv);
    std::int64_t nmax = pv == 2 ? 32 : (pv == 3 ? 20 : 14);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      ExponentSeq m = construct_M(n, p);
      CHECK(m.degree() == n);
      CHECK(satisfies_m_conditions(m));
      CHECK(m.weight() == l_of_n(n, p) + 1);
    }
  }
}

TEST_CASE("apply_moves: examples") {
  Prime p(2);
  ExponentSeq valid(p, {0, 1});
  CHECK(apply_moves(valid) == valid);
  CHECK(apply_moves(ExponentSeq(p, {3})) == ExponentSeq(p, {0, 1}));

  // The successor procedure: prepend a unit to M and repair.
  for (std::int64_t pv : {2, 3}) {
    Prime q(pv);
    for (std::int64_t n = 0; n <= 20; ++n) {
      ExponentSeq bumped = ExponentSeq(q, {1}) + construct_M(n, q);
      ExponentSeq repaired = apply_moves(bumped);
      CHECK(repaired.degree() == n + 1);
      CHECK(satisfies_m_conditions(repaired));
    }
  }
}

TEST_CASE("every move preserves degree and increases right-lex order") {
  std::mt19937 rng(4242);
  for (std::int64_t pv : {2, 3}) {
    Prime p(pv);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> entries(1 + rng() % 4);
      for (auto& e : entries) e = rng() % (2 * pv + 2);
      ExponentSeq r(p, std::move(entries));
      ExponentSeq next = apply_one_move(r);
      if (next == r) {
        CHECK(satisfies_m_conditions(r));
      } else {
        CHECK(next.degree() == r.degree());
        CHECK(r.rlex_less(next));
      }
    }
  }
}

TEST_CASE("m_uniqueness_check over the sweep") {
  Prime p2(2), p3(3);
  CHECK(m_uniqueness_check(3, p2));
  for (std::int64_t n = 0; n <= 32; ++n) CHECK(m_uniqueness_check(n, p2));
  for (std::int64_t n = 0; n <= 20; ++n) CHECK(m_uniqueness_check(n, p3));
}

TEST_CASE("RTable: entries carry the right degree and weight") {
  Prime p(2);
  RTable t0(0, p);
  CHECK(t0.min_weight() == 0);
  CHECK(t0.at_weight(0) == ExponentSeq(p, {}));

  RTable t3(3, p);
  CHECK(t3.min_weight() == 2);
  CHECK(t3.at_weight(2) == ExponentSeq(p, {0, 1}));
  CHECK(t3.at_weight(3) == ExponentSeq(p, {3}));  // (1) + M(2) = (1) + (2)

  RTable t7(7, p);
  CHECK(t7.min_weight() == 4);
  CHECK(t7.at_weight(7) == ExponentSeq(p, {7}));
  CHECK_THROWS_AS(t7.at_weight(3), std::out_of_range);
  CHECK_THROWS_AS(t7.at_weight(8), std::out_of_range);

  for (std::int64_t pv : {2, 3}) {
    Prime q(pv);
    for (std::int64_t n = 0; n <= 16; ++n) {
      RTable t(n, q);
      for (std::int64_t j = t.min_weight(); j <= n; ++j) {
        CHECK(t.at_weight(j).degree() == n);
        CHECK(t.at_weight(j).weight() == j);
      }
    }
  }
}

TEST_CASE("triangularity_certificate") {
  Prime p2(2), p3(3);
  CHECK(triangularity_certificate(0, p2));
  CHECK(triangularity_certificate(3, p2));
  for (std::int64_t n = 0; n <= 12; ++n) CHECK(triangularity_certificate(n, p2));
  for (std::int64_t n = 0; n <= 8; ++n) CHECK(triangularity_certificate(n, p3));
}

TEST_CASE("l(n) is weakly increasing") {
  CHECK(l_monotonicity_check(64, Prime(2)));
  CHECK(l_monotonicity_check(40, Prime(3)));
  CHECK(l_monotonicity_check(30, Prime(5)));
}
