#include "ordcomb/fraisse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace ordcomb {

OrderTerm::OrderTerm(std::vector<OrderAtom> atoms) {
  for (const auto& a : atoms) {
    if (a.kind == OrderAtom::Kind::Fin) {
      if (a.run == 0) continue;
      if (!atoms_.empty() && atoms_.back().kind == OrderAtom::Kind::Fin) {
        atoms_.back().run += a.run;
        continue;
      }
      atoms_.push_back(a);
    } else {
      atoms_.push_back(OrderAtom{a.kind, 0});
    }
  }
  if (atoms_.empty()) throw Error(ErrorCode::InvalidTerm, "order term must be nonempty");
}

OrderTerm OrderTerm::fin(std::uint64_t n) { return OrderTerm({{OrderAtom::Kind::Fin, n}}); }
OrderTerm OrderTerm::omega() { return OrderTerm({{OrderAtom::Kind::Omega, 0}}); }
OrderTerm OrderTerm::omega_star() { return OrderTerm({{OrderAtom::Kind::OmegaStar, 0}}); }
OrderTerm OrderTerm::eta() { return OrderTerm({{OrderAtom::Kind::Eta, 0}}); }

OrderTerm OrderTerm::operator+(const OrderTerm& rhs) const {
  std::vector<OrderAtom> atoms = atoms_;
  atoms.insert(atoms.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  return OrderTerm(std::move(atoms));
}

std::string OrderTerm::str() const {
  std::string out;
  for (const auto& a : atoms_) {
    if (!out.empty()) out += '+';
    switch (a.kind) {
      case OrderAtom::Kind::Fin: out += a.run == 1 ? "1" : "n:" + std::to_string(a.run); break;
      case OrderAtom::Kind::Omega: out += "w"; break;
      case OrderAtom::Kind::OmegaStar: out += "w*"; break;
      case OrderAtom::Kind::Eta: out += "q"; break;
    }
  }
  return out;
}

namespace {

using Kind = OrderAtom::Kind;

// Source atoms are placed left to right into target atoms left to right.
// Only point runs are ever split: an omega, omega* or eta atom can always
// be moved whole into the target atom that receives its infinite part.
// What a target atom still accepts depends on what it has received:
//   Fin(c)  at most c points in total;
//   omega   points, then at most one omega, after which it is closed;
//   omega*  an omega* only while still empty, points at any time;
//   eta     anything.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const OrderTerm& source, const OrderTerm& target)
      : src_(source.atoms()), dst_(target.atoms()) {}

  bool run() { return solve(0, 0, 0, 0); }

 private:
  // `left` is the number of points still to place from a split Fin atom
  // (0 = untouched), `used` the state of the current target atom.
  bool solve(std::size_t i, std::uint64_t left, std::size_t j, std::uint64_t used) {
    if (i == src_.size()) return true;
    if (j == dst_.size()) return false;
    auto key = std::make_tuple(i, left, j, used);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool ok = solve(i, left, j + 1, 0) || place(i, left, j, used);
    memo_.emplace(key, ok);
    return ok;
  }

  bool place(std::size_t i, std::uint64_t left, std::size_t j, std::uint64_t used) {
    const OrderAtom& a = src_[i];
    const OrderAtom& b = dst_[j];
    const std::uint64_t points = left != 0 ? left : a.run;
    switch (b.kind) {
      case Kind::Fin: {
        if (a.kind != Kind::Fin) return false;
        const std::uint64_t room = b.run - used;
        if (room == 0) return false;
        if (points <= room) return solve(i + 1, 0, j, used + points);
        return solve(i, points - room, j + 1, 0);
      }
      case Kind::Omega:
        if (a.kind == Kind::Fin) return solve(i + 1, 0, j, 0);
        if (a.kind == Kind::Omega) return solve(i + 1, 0, j + 1, 0);
        return false;
      case Kind::OmegaStar:
        if (a.kind == Kind::Fin) return solve(i + 1, 0, j, 1);
        if (a.kind == Kind::OmegaStar && used == 0) return solve(i + 1, 0, j, 1);
        return false;
      case Kind::Eta: return solve(i + 1, 0, j, 0);
    }
    return false;
  }

  const std::vector<OrderAtom>& src_;
  const std::vector<OrderAtom>& dst_;
  std::map<std::tuple<std::size_t, std::uint64_t, std::size_t, std::uint64_t>, bool> memo_;
};

// Gap descriptor: capped point count in the low bits, then flags.
using Gap = std::uint8_t;
constexpr Gap kAsc = 1u << 4;
constexpr Gap kDesc = 1u << 5;
constexpr Gap kDense = 1u << 6;
constexpr Gap kCountMask = 0x0f;

Gap make_gap(std::uint64_t count, Gap flags, std::size_t cap) {
  return static_cast<Gap>(std::min<std::uint64_t>(count, cap) | flags);
}

Gap join(Gap a, Gap b, std::size_t cap) {
  return make_gap((a & kCountMask) + (b & kCountMask), (a | b) & ~kCountMask, cap);
}

bool dominated(Gap a, Gap b) {
  return (a & kCountMask) <= (b & kCountMask) && ((a & ~kCountMask) & ~(b & ~kCountMask)) == 0;
}

Gap whole_atom(const OrderAtom& a, std::size_t cap) {
  switch (a.kind) {
    case Kind::Fin: return make_gap(a.run, 0, cap);
    case Kind::Omega: return make_gap(cap, kAsc, cap);
    case Kind::OmegaStar: return make_gap(cap, kDesc, cap);
    case Kind::Eta: return make_gap(cap, kAsc | kDesc | kDense, cap);
  }
  return 0;
}

// Segment layouts of an atom holding p >= 1 chosen points: p + 1 segments
// (below the first point, between points, above the last). Only layouts
// that are maximal up to domination are produced for the infinite atoms.
std::vector<std::vector<Gap>> layouts(const OrderAtom& a, std::size_t p, std::size_t cap) {
  std::vector<std::vector<Gap>> out;
  switch (a.kind) {
    case Kind::Omega: {
      std::vector<Gap> segs(p + 1, make_gap(cap, 0, cap));
      segs.back() = make_gap(cap, kAsc, cap);
      out.push_back(segs);
      break;
    }
    case Kind::OmegaStar: {
      std::vector<Gap> segs(p + 1, make_gap(cap, 0, cap));
      segs.front() = make_gap(cap, kDesc, cap);
      out.push_back(segs);
      break;
    }
    case Kind::Eta:
      out.emplace_back(p + 1, make_gap(cap, kAsc | kDesc | kDense, cap));
      break;
    case Kind::Fin: {
      if (a.run < p) break;
      const std::uint64_t spare = a.run - p;
      std::vector<Gap> segs(p + 1);
      std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t idx, std::uint64_t rest) {
        if (idx == p) {
          segs[p] = make_gap(rest, 0, cap);
          out.push_back(segs);
          return;
        }
        for (std::uint64_t g = 0; g <= std::min<std::uint64_t>(rest, cap); ++g) {
          segs[idx] = make_gap(g, 0, cap);
          fill(idx + 1, rest - g);
        }
      };
      fill(0, spare);
      break;
    }
  }
  return out;
}

// Every k-point pattern of `term`, each a vector of k + 1 gaps.
std::set<std::vector<Gap>> patterns(const OrderTerm& term, std::size_t k) {
  const auto& atoms = term.atoms();
  std::set<std::vector<Gap>> out;
  std::vector<Gap> closed;
  std::function<void(std::size_t, std::size_t, Gap)> walk = [&](std::size_t idx, std::size_t left, Gap open) {
    if (idx == atoms.size()) {
      if (left != 0) return;
      closed.push_back(open);
      out.insert(closed);
      closed.pop_back();
      return;
    }
    const OrderAtom& a = atoms[idx];
    walk(idx + 1, left, join(open, whole_atom(a, k), k));
    for (std::size_t p = 1; p <= left; ++p) {
      for (const auto& segs : layouts(a, p, k)) {
        closed.push_back(join(open, segs.front(), k));
        for (std::size_t s = 1; s < p; ++s) closed.push_back(segs[s]);
        walk(idx + 1, left - p, segs.back());
        closed.resize(closed.size() - p);
      }
    }
  };
  walk(0, k, make_gap(0, 0, k));
  return out;
}

}  // namespace

bool embeds(const OrderTerm& source, const OrderTerm& target) {
  return EmbeddingSearch(source, target).run();
}

bool finite_suborder_check(const OrderTerm& source, const OrderTerm& target, std::size_t k) {
  if (k > 6) throw Error(ErrorCode::OutOfRange, "pattern size is limited to 6");
  for (std::size_t points = 0; points <= k; ++points) {
    const auto from = patterns(source, points);
    const auto into = patterns(target, points);
    const bool ok = std::all_of(from.begin(), from.end(), [&](const std::vector<Gap>& v) {
      return std::any_of(into.begin(), into.end(), [&](const std::vector<Gap>& w) {
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!dominated(v[i], w[i])) return false;
        return true;
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> fraisse_pair(const std::vector<OrderTerm>& orders) {
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (embeds(orders[i], orders[j])) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace ordcomb
