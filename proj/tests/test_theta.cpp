#include <random>

#include "doctest.h"
#include "ordcomb/parse.hpp"
#include "ordcomb/theta.hpp"
#include "support.hpp"

using namespace ordcomb;

namespace {
ThetaTerm T(const char* text) { return parse_theta_term(text); }
const BaseOrder kFin1 = BaseOrder::fin(1);
const BaseOrder kFin2 = BaseOrder::fin(2);
const BaseOrder kFin3 = BaseOrder::fin(3);
}  // namespace

TEST_CASE("theta_validate examples") {
  CHECK(theta_validate(kFin1, T("th(0)")));
  CHECK(theta_validate(kFin1, T("s(W W)")));
  CHECK_FALSE(theta_validate(kFin1, T("s(th(0) W)")));
  CHECK(theta_validate(kFin1, T("p(0)")));
  CHECK_FALSE(theta_validate(kFin1, T("e(1)")));
  CHECK(theta_validate(kFin2, T("e(1)")));
  CHECK_FALSE(theta_validate(kFin1, T("s(W)")));
  CHECK_FALSE(theta_validate(kFin1, T("s(s(W W) W)")));
  CHECK_FALSE(theta_validate(kFin1, T("s(W 0)")));
  // w^E = E for epsilon numbers E, so these powers are not normal.
  CHECK_FALSE(theta_validate(kFin1, T("p(W)")));
  CHECK_FALSE(theta_validate(kFin1, T("p(e(0))")));
  CHECK_FALSE(theta_validate(kFin1, T("p(th(0))")));
  CHECK(theta_validate(kFin1, T("p(s(W p(0)))")));
}

TEST_CASE("theta_coefficients examples") {
  CHECK(theta_coefficients(T("0")).empty());
  CHECK(theta_coefficients(T("W")).empty());
  CHECK(theta_coefficients(T("e(0)")).empty());
  CHECK(theta_coefficients(T("s(e(0) th(0))")) == CoefficientSet{T("th(0)")});
  CHECK(theta_coefficients(T("p(th(0))")) == CoefficientSet{T("th(0)")});
  CHECK(theta_coefficients(T("th(s(W th(0)))")) == CoefficientSet{T("th(s(W th(0)))")});
  CHECK(theta_coefficients(T("s(W th(W) th(0))")) == CoefficientSet{T("th(W)"), T("th(0)")});
}

TEST_CASE("theta_compare examples") {
  CHECK(theta_compare(kFin1, T("th(0)"), T("W")) < 0);
  CHECK(theta_compare(kFin1, T("th(0)"), T("th(W)")) < 0);
  CHECK(theta_compare(kFin2, T("e(0)"), T("e(1)")) < 0);
  CHECK(theta_compare(kFin1, T("0"), T("th(0)")) < 0);
  CHECK(theta_compare(kFin1, T("W"), T("e(0)")) < 0);
  CHECK(theta_compare(kFin1, T("W"), T("s(W W)")) < 0);
  CHECK(theta_compare(kFin1, T("s(W p(0))"), T("s(W W)")) < 0);
  CHECK(theta_compare(kFin1, T("p(0)"), T("th(0)")) < 0);
  CHECK(theta_compare(kFin1, T("p(s(W p(0)))"), T("e(0)")) < 0);
  CHECK(theta_compare(kFin1, T("p(s(W p(0)))"), T("s(W W)")) > 0);
  // theta 0 < theta(theta 0): 0 < theta 0 and k(0) is empty.
  CHECK(theta_compare(kFin1, T("th(0)"), T("th(th(0))")) < 0);
  // theta(theta 0) < theta W: theta 0 < W and k(theta 0) = {theta 0} < theta W.
  CHECK(theta_compare(kFin1, T("th(th(0))"), T("th(W)")) < 0);
  // theta(W + theta W) > theta W, and W + theta W has coefficient theta W
  // below theta(W + theta W).
  CHECK(theta_compare(kFin1, T("th(s(W th(W)))"), T("th(W)")) > 0);
  CHECK_THROWS_AS(theta_compare(kFin1, T("p(W)"), T("0")), Error);
}

TEST_CASE("strict total order on all valid terms of size <= 4 over Fin(1)") {
  auto terms = theta_enumerate(kFin1, 4, 1);
  CHECK(terms.size() > 20);
  for (const auto& t : terms) CHECK(theta_validate(kFin1, t));
  CHECK(support::order_axiom_violations(terms, [&](const ThetaTerm& a, const ThetaTerm& b) {
          return theta_compare(kFin1, a, b);
        }) == 0);
}

TEST_CASE("enumeration is complete against brute-force syntax trees") {
  // Every tree over {0, W, e(0), p, th, s of two parts} with <= 4 nodes,
  // filtered by theta_validate, must be enumerated.
  std::vector<std::vector<ThetaTerm>> by_size(5);
  by_size[1] = {T("0"), T("W"), T("e(0)")};
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& t : by_size[n - 1]) {
      by_size[n].push_back(ThetaTerm::pow(t));
      by_size[n].push_back(ThetaTerm::collapse(t));
    }
    for (std::size_t a = 1; a + 1 < n; ++a)
      for (const auto& x : by_size[a])
        for (const auto& y : by_size[n - 1 - a]) by_size[n].push_back(ThetaTerm::sum({x, y}));
  }
  auto listed = theta_enumerate(kFin1, 4, 1);
  for (const auto& layer : by_size)
    for (const auto& t : layer)
      if (theta_validate(kFin1, t))
        CHECK_MESSAGE(std::find(listed.begin(), listed.end(), t) != listed.end(), t.str());
}

TEST_CASE("random triples over Fin(3)") {
  support::ThetaGen gen(0, 3);
  for (int i = 0; i < 10000; ++i) {
    ThetaTerm a = gen.term(7), b = gen.term(7), c = gen.term(7);
    auto ab = theta_compare(kFin3, a, b);
    auto bc = theta_compare(kFin3, b, c);
    auto ac = theta_compare(kFin3, a, c);
    REQUIRE(theta_compare(kFin3, b, a) == reverse(ab));
    REQUIRE(theta_compare(kFin3, a, a) == 0);
    REQUIRE((ab == 0) == (a == b));
    if (ab < 0 && bc < 0) REQUIRE(ac < 0);
    if (ab > 0 && bc > 0) REQUIRE(ac > 0);
    if (ab == 0) REQUIRE(ac == bc);
  }
}

TEST_CASE("collapse discipline on random terms") {
  support::ThetaGen gen(1, 2);
  std::vector<ThetaTerm> pool;
  for (int i = 0; i < 400; ++i) pool.push_back(gen.term(7));
  for (const auto& t : pool) CHECK(theta_compare(kFin2, ThetaTerm::collapse(t), T("W")) < 0);
  std::size_t qualifying = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (theta_compare(kFin2, a, b) >= 0) continue;
      ThetaTerm tb = ThetaTerm::collapse(b);
      bool below = true;
      for (const auto& k : theta_coefficients(a)) below = below && theta_compare(kFin2, k, tb) < 0;
      if (!below) continue;
      ++qualifying;
      REQUIRE(theta_compare(kFin2, ThetaTerm::collapse(a), tb) < 0);
    }
  CHECK(qualifying > 1000);
}

TEST_CASE("theta_lift") {
  auto id = [](const Element& e) { return e; };
  support::ThetaGen gen(2, 2);
  for (int i = 0; i < 50; ++i) {
    ThetaTerm t = gen.term(6);
    CHECK(theta_lift(id, kFin2, kFin2, t) == t);
  }
  auto h = table_map({{Element(0), Element(0)}, {Element(1), Element(2)}});
  CHECK(theta_lift(h, kFin2, kFin3, T("e(1)")) == T("e(2)"));
  auto swap = table_map({{Element(0), Element(1)}, {Element(1), Element(0)}});
  CHECK_THROWS_AS(theta_lift(swap, kFin2, kFin2, T("s(e(1) e(0))")), Error);

  std::size_t agree = 0;
  for (int i = 0; i < 200; ++i) {
    ThetaTerm a = gen.term(7), b = gen.term(7);
    ThetaTerm la = theta_lift(h, kFin2, kFin3, a), lb = theta_lift(h, kFin2, kFin3, b);
    REQUIRE(theta_validate(kFin3, la));
    if (theta_compare(kFin2, a, b) == theta_compare(kFin3, la, lb)) ++agree;
  }
  CHECK(agree == 200);
}

TEST_CASE("theta_descend_search") {
  auto chain = theta_descend_search(BaseOrder::omega_star(), 10);
  REQUIRE(chain);
  CHECK(chain->source == ThetaDescent::Source::BaseDescent);
  REQUIRE(chain->chain.size() == 10);
  for (std::uint64_t i = 0; i < 10; ++i) CHECK(chain->chain[i] == ThetaTerm::eps(Element(i)));

  CHECK_FALSE(theta_descend_search(kFin2, 10));
  CHECK_FALSE(theta_descend_search(BaseOrder::fin(5), 10));
  CHECK_FALSE(theta_descend_search(BaseOrder::omega(), 10));
  CHECK_THROWS_AS(theta_descend_search(kFin2, 0), Error);

  const auto star = BaseOrder::omega_star();
  auto long_chain = theta_descend_search(star, 100);
  REQUIRE(long_chain);
  for (std::size_t i = 1; i < long_chain->chain.size(); ++i)
    CHECK(theta_compare(star, long_chain->chain[i], long_chain->chain[i - 1]) < 0);
}

TEST_CASE("term text") {
  for (const char* s : {"0", "W", "e(3)", "p(0)", "s(W p(0))", "th(s(e(0) th(0)))", "e((1,2))"})
    CHECK(T(s).str() == s);
}
