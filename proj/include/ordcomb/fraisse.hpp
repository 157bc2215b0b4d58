#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcomb/error.hpp"

namespace ordcomb {

/// Atom of a countable linear order term: a finite chain of `run` points,
/// omega, omega* or eta (the rationals).
struct OrderAtom {
  enum class Kind { Fin, Omega, OmegaStar, Eta };
  Kind kind = Kind::Fin;
  std::uint64_t run = 1;  // Fin only

  friend bool operator==(const OrderAtom&, const OrderAtom&) = default;
};

/// Nonempty finite sum of atoms with maximal runs of points merged.
class OrderTerm {
 public:
  /// Canonicalizes: merges adjacent Fin runs, drops empty runs. Throws
  /// InvalidTerm when nothing is left.
  explicit OrderTerm(std::vector<OrderAtom> atoms);

  static OrderTerm fin(std::uint64_t n);
  static OrderTerm omega();
  static OrderTerm omega_star();
  static OrderTerm eta();

  const std::vector<OrderAtom>& atoms() const noexcept { return atoms_; }
  OrderTerm operator+(const OrderTerm& rhs) const;

  /// `1`, `n:k`, `w`, `w*`, `q` joined by `+`.
  std::string str() const;

  friend bool operator==(const OrderTerm&, const OrderTerm&) = default;

 private:
  std::vector<OrderAtom> atoms_;
};

/// Does the order denoted by `source` embed into the one denoted by
/// `target`? Memoized recursion over positions in both atom sequences; see
/// docs/embedding.md for the chunk table and why it is exact.
bool embeds(const OrderTerm& source, const OrderTerm& target);

/// Refuter for embeds, independent of its recursion. Compares suborder
/// patterns of up to k points: the points together with what every gap
/// between them (and outside them) contains, namely a point count capped at
/// the number of points and whether the gap holds a copy of omega, of
/// omega* or of eta. An embedding maps every pattern of the source to a
/// pattern of the target that is at least as rich, so `false` proves that
/// no embedding exists. Requires k <= 6.
bool finite_suborder_check(const OrderTerm& source, const OrderTerm& target, std::size_t k);

/// Lexicographically least i < j with embeds(orders[i], orders[j]).
std::optional<std::pair<std::size_t, std::size_t>> fraisse_pair(const std::vector<OrderTerm>& orders);

}  // namespace ordcomb
