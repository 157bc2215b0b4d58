#include <random>

#include "doctest.h"
#include "ordcomb/fraisse.hpp"
#include "ordcomb/parse.hpp"
#include "support.hpp"

using namespace ordcomb;

namespace {
OrderTerm L(const char* text) { return parse_order_term(text); }
bool E(const char* a, const char* b) { return embeds(L(a), L(b)); }
}  // namespace

TEST_CASE("canonical form") {
  CHECK(L("1+1+n:3+w").str() == "n:5+w");
  CHECK(L("n:1").str() == "1");
  CHECK(L("n:0+w").str() == "w");
  CHECK(L("w+w*") == OrderTerm::omega() + OrderTerm::omega_star());
  CHECK_THROWS_AS(OrderTerm({{OrderAtom::Kind::Fin, 0}}), Error);
  CHECK_THROWS_AS(OrderTerm(std::vector<OrderAtom>{}), Error);
}

TEST_CASE("embedding examples") {
  CHECK(E("w", "q"));
  CHECK_FALSE(E("w", "w*"));
  CHECK_FALSE(E("w+w*", "w*+w"));
  CHECK(E("n:3+w", "w"));
}

TEST_CASE("classical vector table") {
  CHECK(E("1+w", "w"));
  CHECK_FALSE(E("w+1", "w"));
  CHECK_FALSE(E("w+w", "w"));
  CHECK_FALSE(E("q", "w"));
  CHECK_FALSE(E("q", "w*"));
  CHECK(E("w*+1", "w*"));
  CHECK_FALSE(E("1+w*", "w*"));
  CHECK(E("w", "w+w*"));
  CHECK(E("w*", "w+w*"));
  CHECK(E("w+w*", "q+1"));
  CHECK(E("w*+w", "w+w*+w"));
  CHECK(E("w+w", "w*+w+w*+w"));
  CHECK_FALSE(E("w+w", "w+w*"));
  CHECK(E("n:4", "1+w*+n:2"));
  CHECK_FALSE(E("n:4", "n:3"));
  CHECK(E("n:3", "1+1+1"));
  CHECK(E("w+1+w", "w+w"));
  CHECK_FALSE(E("w+1+w", "w+1"));
  CHECK(E("w*+w*", "w*+w*"));
  CHECK_FALSE(E("w*+w*", "w*"));
  CHECK(E("w*+w*", "w+w*+q"));
}

TEST_CASE("chunk table rows") {
  // A single point goes anywhere; an omega chunk needs omega or eta.
  for (const char* target : {"1", "w", "w*", "q"}) CHECK(E("1", target));
  CHECK(E("n:7+w", "w"));
  CHECK_FALSE(E("n:7+w", "w*"));
  CHECK(E("w*+n:7", "w*"));
  CHECK_FALSE(E("w*+n:7", "w"));
  CHECK(E("w*+n:3+w+q+w*", "q"));
}

TEST_CASE("reflexivity and transitivity on the <=3 atom pool") {
  auto pool = support::order_pool(3);
  const std::size_t n = pool.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = embeds(pool[i], pool[j]);
  for (std::size_t i = 0; i < n; ++i) CHECK(rel[i][i]);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (rel[j][k] && !rel[i][k]) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("randomized reflexivity and transitivity on <=5 atoms") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    OrderTerm a = support::random_order(rng, 5), b = support::random_order(rng, 5), c = support::random_order(rng, 5);
    CHECK(embeds(a, a));
    if (embeds(a, b) && embeds(b, c)) CHECK(embeds(a, c));
  }
}

TEST_CASE("sum monotonicity") {
  auto pool = support::order_pool(2);
  for (const auto& a : pool)
    for (const auto& a2 : pool) {
      if (!embeds(a, a2)) continue;
      for (const auto& b : pool)
        for (const auto& b2 : pool)
          if (embeds(b, b2)) CHECK(embeds(a + b, a2 + b2));
    }
}

TEST_CASE("eta universality") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    OrderTerm s = support::random_order(rng, 4);
    OrderTerm t = support::random_order(rng, 5);
    bool has_eta = false;
    for (const auto& a : s.atoms()) has_eta = has_eta || a.kind == OrderAtom::Kind::Eta;
    if (has_eta) CHECK(embeds(t, s));
  }
}

TEST_CASE("finite_suborder_check") {
  CHECK(finite_suborder_check(L("w+w*"), L("w+w*"), 4));
  CHECK_FALSE(finite_suborder_check(L("w"), L("n:5"), 6));
  CHECK_FALSE(finite_suborder_check(L("w"), L("w*"), 1));
  CHECK_FALSE(finite_suborder_check(L("q"), L("w+w*"), 2));
  CHECK_FALSE(finite_suborder_check(L("w+w*"), L("w*+w"), 2));
  CHECK_FALSE(finite_suborder_check(L("w+1"), L("w"), 1));
  CHECK(finite_suborder_check(L("n:3+w"), L("w"), 6));
  CHECK_THROWS_AS(finite_suborder_check(L("w"), L("w"), 7), Error);
}

TEST_CASE("refuter never contradicts a positive verdict") {
  auto pool = support::order_pool(3);
  std::size_t refuted = 0, negatives = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const bool e = embeds(a, b);
      const bool f = finite_suborder_check(a, b, 3);
      if (e) CHECK(f);
      if (!e) ++negatives;
      if (!f) ++refuted;
    }
  // On this pool the refuter is also complete: every failure is explained
  // by a 3-point pattern.
  CHECK(refuted == negatives);
}

TEST_CASE("fraisse_pair") {
  CHECK(fraisse_pair({L("w*"), L("w"), L("w+w")}) == std::make_pair<std::size_t, std::size_t>(1, 2));
  CHECK_FALSE(fraisse_pair({L("q")}));
  CHECK_FALSE(fraisse_pair({L("w"), L("w*"), L("n:3")}));
  CHECK(fraisse_pair({L("q"), L("w"), L("1+w")}) == std::make_pair<std::size_t, std::size_t>(1, 2));
}
