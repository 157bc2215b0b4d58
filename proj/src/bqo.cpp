#include "ordcomb/bqo.hpp"

#include <stdexcept>

#include "combinatorics.hpp"

namespace ordcomb {

namespace {

// Depth-first completion of `current` to `target` elements, trying
// candidates in increasing order so the first hit is lexicographically least.
class HomogeneousDfs {
 public:
  HomogeneousDfs(const StabilizingArray& array, std::size_t target)
      : array_(array), target_(target), d_(array.depth()) {}

  std::optional<Homogeneous> from(FinSet::value_type first) {
    std::vector<FinSet::value_type> current;
    std::optional<Color> color;
    if (!try_add(current, first, color)) return std::nullopt;
    if (!extend(current, color)) return std::nullopt;
    return Homogeneous{FinSet(current), color.value_or(0)};
  }

 private:
  bool try_add(std::vector<FinSet::value_type>& current, FinSet::value_type x,
               std::optional<Color>& color) const {
    if (current.size() + 1 >= d_) {
      bool ok = true;
      std::optional<Color> c = color;
      detail::for_each_subset(current, d_ - 1, [&](const FinSet& u) {
        auto with_x = u.elements();
        with_x.push_back(x);
        Color v = array_.value(FinSet(std::move(with_x)));
        if (!c) c = v;
        ok = *c == v;
        return ok;
      });
      if (!ok) return false;
      color = c;
    }
    current.push_back(x);
    return true;
  }

  bool extend(std::vector<FinSet::value_type>& current, std::optional<Color>& color) const {
    if (current.size() == target_) return true;
    const std::size_t need = target_ - current.size();
    for (FinSet::value_type x = current.back() + 1; x + need <= array_.window(); ++x) {
      std::optional<Color> saved = color;
      if (!try_add(current, x, color)) continue;
      if (extend(current, color)) return true;
      current.pop_back();
      color = saved;
    }
    return false;
  }

  const StabilizingArray& array_;
  std::size_t target_;
  std::size_t d_;
};

bool extensions_agree(const StabilizingArray& array, const FinSet& s, const FinSet& z,
                      std::size_t max_size) {
  const Color v = array.value(s);
  const auto rest = z.above(s).elements();
  for (std::size_t j = 1; s.size() + j <= max_size; ++j) {
    bool ok = detail::for_each_subset(rest, j, [&](const FinSet& u) {
      return array.value(s.united(u)) == v;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<FinSet> good_pair_search(const StabilizingArray& array, const QuasiOrder& order,
                                       unsigned jobs) {
  array.validate();
  if (order.size() < array.colors()) {
    throw Error(ErrorCode::InvalidOrder, "quasi order has fewer elements than the array has colours");
  }
  const std::size_t k = array.limit_depth() + 1;
  const std::uint32_t window = array.window();
  if (k > window) return std::nullopt;
  detail::Binomial binom(window);
  auto hit = detail::parallel_find_first(binom(window, k), jobs, [&](std::uint64_t r) {
    FinSet x = detail::lex_unrank(binom, window, k, r);
    return order.leq(fbar(array, x), fbar(array, x.drop_min()));
  });
  if (!hit) return std::nullopt;
  return detail::lex_unrank(binom, window, k, *hit);
}

std::optional<Homogeneous> cofinite_homogeneous_search(const StabilizingArray& array,
                                                       std::size_t target, unsigned jobs) {
  if (!array.is_uniform() || array.colors() != 2) {
    throw Error(ErrorCode::InvalidArray, "homogeneous search needs a uniform two-colour array");
  }
  if (target < array.depth()) {
    throw Error(ErrorCode::OutOfRange, "target is smaller than the array depth");
  }
  if (target == 0) return Homogeneous{FinSet{}, 0};
  if (array.depth() == 0) return Homogeneous{FinSet::range(0, static_cast<std::uint32_t>(target)),
                                             array.value(FinSet{})};
  const std::uint32_t window = array.window();
  std::vector<std::optional<Homogeneous>> found(window);
  auto hit = detail::parallel_find_first(window, jobs, [&](std::uint64_t first) {
    found[first] = HomogeneousDfs(array, target).from(static_cast<FinSet::value_type>(first));
    return found[first].has_value();
  });
  if (!hit) return std::nullopt;
  return found[*hit];
}

bool verify_homogeneous(const StabilizingArray& array, const FinSet& x, std::size_t d) {
  std::optional<Color> color;
  return detail::for_each_subset(x.elements(), d, [&](const FinSet& s) {
    Color v = array.value(s);
    if (!color) color = v;
    return *color == v;
  });
}

FinSet find_stable_root(const StabilizingArray& array, const FinSet& z) {
  if (!z.empty() && z.max() >= array.window()) {
    throw Error(ErrorCode::OutOfRange, z.str() + " leaves the window");
  }
  const std::size_t min_len = array.min_length();
  const std::size_t max_len = array.root_depth();
  const std::size_t check = array.is_uniform() ? array.depth() + 1 : array.depth();

  if (min_len == 0 && extensions_agree(array, FinSet{}, z, check)) return FinSet{};
  for (std::size_t m = 0; m < z.size(); ++m) {
    const auto below = z.prefix(m).elements();
    for (std::size_t k = std::max<std::size_t>(min_len, 1); k <= max_len; ++k) {
      std::optional<FinSet> root;
      detail::for_each_subset(below, k - 1, [&](const FinSet& u) {
        FinSet s = u.united(FinSet{z[m]});
        if (!extensions_agree(array, s, z, check)) return true;
        root = std::move(s);
        return false;
      });
      if (root) return *root;
    }
  }
  throw Error(ErrorCode::WindowExhausted, "no stable root inside " + z.str() +
                                              "; the window is too small for this array");
}

Extraction three_antichain_good_pair(const StabilizingArray& array, unsigned jobs) {
  if (array.colors() > 3) {
    throw Error(ErrorCode::InvalidArray, "extraction needs values in {0,1,2}");
  }
  array.validate();
  const std::size_t e = array.limit_depth();
  if (e == 0) {
    // fbar is the constant f({}), so every X is a good pair.
    Extraction out;
    out.z = FinSet::range(0, array.window());
    out.witness = out.z;
    out.value = fbar(array, out.z);
    out.exit = Extraction::Exit::Homogeneous;
    out.scanned.push_back({out.z, out.value, out.value});
    return out;
  }
  const std::size_t target = array.root_depth() + e + 1;

  auto is_two = [&](const FinSet& y) -> Color { return fbar(array, y) == 2 ? 1 : 0; };
  auto derived = StabilizingArray::uniform(array.window(), e, 2, is_two);
  auto hom = cofinite_homogeneous_search(derived, target, jobs);
  if (!hom) {
    throw Error(ErrorCode::WindowExhausted, "no homogeneous set of size " + std::to_string(target) +
                                                " in a window of " + std::to_string(array.window()));
  }

  // Extend Z upwards while it stays homogeneous.
  std::vector<FinSet::value_type> zs = hom->set.elements();
  for (FinSet::value_type x = zs.empty() ? 0 : zs.back() + 1; x < array.window(); ++x) {
    bool ok = detail::for_each_subset(zs, e - 1, [&](const FinSet& u) {
      auto with_x = u.elements();
      with_x.push_back(x);
      return derived.value(FinSet(std::move(with_x))) == hom->color;
    });
    if (ok) zs.push_back(x);
  }
  const FinSet z(std::move(zs));

  Extraction out;
  out.z = z;
  if (hom->color == 1) {
    out.exit = Extraction::Exit::Homogeneous;
    out.witness = z;
    out.value = fbar(array, z);
    out.scanned.push_back({z, out.value, fbar(array, z.drop_min())});
    if (out.scanned.back().value_minus != out.value) {
      throw std::logic_error("homogeneous set " + z.str() + " is not a good pair");
    }
    return out;
  }

  const FinSet s = find_stable_root(array, z);
  const FinSet tail = z.above(s);
  if (tail.size() < e + 1) {
    throw Error(ErrorCode::WindowExhausted, "Z/s = " + tail.str() + " is too short to evaluate");
  }
  out.root = s;
  const FinSet v = s.united(tail);
  const FinSet w = s.united(tail.drop_min());

  auto inspect = [&](const FinSet& u) {
    out.scanned.push_back({u, fbar(array, u), fbar(array, u.drop_min())});
    return out.scanned.back().value == out.scanned.back().value_minus;
  };
  for (const FinSet* base : {&v, &w}) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      FinSet u = base->drop(i);
      if (inspect(u)) {
        out.exit = Extraction::Exit::AdjacentPair;
        out.witness = std::move(u);
        out.value = out.scanned.back().value;
        return out;
      }
    }
  }
  // Every adjacent pair flipped; the parity count forces equality here.
  if (!inspect(tail)) {
    throw std::logic_error("parity argument failed on Z/s = " + tail.str());
  }
  out.exit = Extraction::Exit::RootTail;
  out.witness = tail;
  out.value = out.scanned.back().value;
  return out;
}

}  // namespace ordcomb
