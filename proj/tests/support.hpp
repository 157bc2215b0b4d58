#pragma once

// Oracles and random generators shared by the unit and acceptance suites.
// The oracles deliberately avoid the library's comparison code.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ordcomb/array.hpp"
#include "ordcomb/finset.hpp"
#include "ordcomb/fraisse.hpp"
#include "ordcomb/omega.hpp"
#include "ordcomb/theta.hpp"

namespace support {

using namespace ordcomb;

// Ordinal below w^n in Cantor normal form, as coefficients c[e] of w^e.
struct Cnf {
  std::vector<std::uint64_t> coeff;

  friend std::strong_ordering operator<=>(const Cnf& a, const Cnf& b) {
    const std::size_t n = std::max(a.coeff.size(), b.coeff.size());
    for (std::size_t e = n; e-- > 0;) {
      std::uint64_t x = e < a.coeff.size() ? a.coeff[e] : 0;
      std::uint64_t y = e < b.coeff.size() ? b.coeff[e] : 0;
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Cnf& a, const Cnf& b) { return (a <=> b) == 0; }
};

// Exponent e of Fin(n) stands for the ordinal exponent e.
inline Cnf to_cnf(const OmegaTerm& t, std::size_t n) {
  Cnf c{std::vector<std::uint64_t>(n, 0)};
  for (const auto& e : t.exponents) ++c.coeff.at(e.value());
  return c;
}

// All weakly decreasing sequences over Fin(n) with at most `len` entries.
inline std::vector<OmegaTerm> omega_terms_upto(std::size_t n, std::size_t len) {
  std::vector<OmegaTerm> out{OmegaTerm{}};
  std::vector<OmegaTerm> layer{OmegaTerm{}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<OmegaTerm> next;
    for (const auto& t : layer) {
      std::uint64_t top = t.exponents.empty() ? n : t.exponents.back().value() + 1;
      for (std::uint64_t e = 0; e < top; ++e) {
        OmegaTerm u = t;
        u.exponents.emplace_back(e);
        next.push_back(u);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Checks irreflexivity, antisymmetry, totality and transitivity of `cmp` on
// `items` by brute force. Returns the number of violations found.
template <class T, class Cmp>
std::size_t order_axiom_violations(const std::vector<T>& items, Cmp&& cmp) {
  const std::size_t n = items.size();
  std::vector<std::vector<int>> rel(n, std::vector<int>(n));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto o = cmp(items[i], items[j]);
      rel[i][j] = o < 0 ? -1 : (o > 0 ? 1 : 0);
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (rel[i][i] != 0) ++bad;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != -rel[j][i]) ++bad;
      // EQ only on structurally identical terms.
      if (i != j && rel[i][j] == 0 && !(items[i] == items[j])) ++bad;
    }
  }
  // Transitivity via sorted order: sort by the relation, then every earlier
  // item must be below every later one.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rel[a][b] < 0; });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rel[idx[a]][idx[b]] > 0) ++bad;
  return bad;
}

// Random valid theta term of at most `size` nodes over Fin(n). Built
// bottom-up, using the comparison only to sort sum parts; validity is
// re-checked by the caller through theta_validate.
class ThetaGen {
 public:
  ThetaGen(std::uint64_t seed, std::uint64_t n) : rng_(seed), order_(BaseOrder::fin(n)), n_(n) {}

  const BaseOrder& order() const { return order_; }

  ThetaTerm term(std::size_t size) {
    for (;;) {
      ThetaTerm t = raw(size);
      if (t.size() <= size && theta_validate(order_, t)) return t;
    }
  }

 private:
  ThetaTerm principal(std::size_t size) {
    std::uniform_int_distribution<int> pick(0, 3);
    switch (size <= 1 ? pick(rng_) % 2 : pick(rng_)) {
      case 0: return ThetaTerm::big_omega();
      case 1: return ThetaTerm::eps(Element(std::uniform_int_distribution<std::uint64_t>(0, n_ - 1)(rng_)));
      case 2: {
        ThetaTerm body = raw(size - 1);
        if (body.is_epsilon()) return body;
        return ThetaTerm::pow(body);
      }
      default: return ThetaTerm::collapse(raw(size - 1));
    }
  }

  ThetaTerm raw(std::size_t size) {
    if (size == 0) return ThetaTerm::zero();
    std::uniform_int_distribution<int> pick(0, 9);
    int r = pick(rng_);
    if (r == 0) return ThetaTerm::zero();
    if (r <= 2 && size >= 3) {
      std::size_t k = 2 + (size >= 5 ? std::uniform_int_distribution<std::size_t>(0, 1)(rng_) : 0);
      std::vector<ThetaTerm> parts;
      std::size_t budget = (size - 1) / k;
      for (std::size_t i = 0; i < k; ++i) parts.push_back(principal(std::max<std::size_t>(budget, 1)));
      std::sort(parts.begin(), parts.end(), [&](const ThetaTerm& a, const ThetaTerm& b) {
        return theta_validate(order_, a) && theta_validate(order_, b) && theta_compare(order_, a, b) > 0;
      });
      return ThetaTerm::sum(std::move(parts));
    }
    return principal(size);
  }

  std::mt19937_64 rng_;
  BaseOrder order_;
  std::uint64_t n_;
};

// Every order term with at most `max_atoms` atoms over {1, 2, w, w*, q}
// (runs of points merged by the constructor, duplicates removed).
inline std::vector<OrderTerm> order_pool(std::size_t max_atoms) {
  const std::vector<OrderAtom> alphabet{{OrderAtom::Kind::Fin, 1},
                                        {OrderAtom::Kind::Fin, 2},
                                        {OrderAtom::Kind::Omega, 0},
                                        {OrderAtom::Kind::OmegaStar, 0},
                                        {OrderAtom::Kind::Eta, 0}};
  std::vector<OrderTerm> out;
  std::vector<OrderAtom> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) {
      OrderTerm t(cur);
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    if (cur.size() == max_atoms) return;
    for (const auto& a : alphabet) {
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

inline OrderTerm random_order(std::mt19937_64& rng, std::size_t max_atoms) {
  std::uniform_int_distribution<std::size_t> len(1, max_atoms);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<std::uint64_t> run(1, 4);
  std::vector<OrderAtom> atoms;
  for (std::size_t i = len(rng); i > 0; --i) {
    switch (kind(rng)) {
      case 0:
      case 1: atoms.push_back({OrderAtom::Kind::Fin, run(rng)}); break;
      case 2: atoms.push_back({OrderAtom::Kind::Omega, 0}); break;
      case 3: atoms.push_back({OrderAtom::Kind::OmegaStar, 0}); break;
      default: atoms.push_back({OrderAtom::Kind::Eta, 0}); break;
    }
  }
  return OrderTerm(atoms);
}

// Deterministic pseudo-random colour of a finite set.
inline Color hashed_colour(std::uint64_t seed, const FinSet& s, Color colors) {
  std::uint64_t h = seed ^ (s.size() * 0x9e3779b97f4a7c15ull);
  for (auto x : s) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return static_cast<Color>(h % colors);
}

// Random 3-valued stabilizing array: uniform of depth 1 or 2, or general
// with stabilization level N in {1, 2} and guard 2 (table depth N + 2)
// given by f(s) = c(s[min(|s|, l(s_0))]) for a colouring c and l <= N.
inline StabilizingArray random_three_array(std::mt19937_64& rng, std::uint32_t window) {
  const std::uint64_t seed = rng();
  auto colour = [seed](const FinSet& s) { return hashed_colour(seed, s, 3); };
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return StabilizingArray::uniform(window, 1, 3, colour);
    case 1: return StabilizingArray::uniform(window, 2, 3, colour);
    default: {
      const std::size_t level = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
      const std::uint64_t split = rng();
      return StabilizingArray::general(window, level + 2, 2, 3, [&](const FinSet& s) {
        if (s.empty()) return colour(s);
        std::size_t l = 1 + (hashed_colour(split, FinSet{s[0]}, 2) == 1 ? level - 1 : 0);
        return colour(s.prefix(std::min(l, s.size())));
      });
    }
  }
}

}  // namespace support
