#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ordcomb/linear_order.hpp"

namespace ordcomb {

/// A term w^x(0) + ... + w^x(n-1) of omega(X), stored as its exponent
/// sequence. Valid terms have weakly X-decreasing exponents; the empty
/// sequence denotes 0 and is the least term.
struct OmegaTerm {
  std::vector<Element> exponents;

  std::string str() const;
  friend bool operator==(const OmegaTerm&, const OmegaTerm&) = default;
};

bool omega_validate(const BaseOrder& order, const OmegaTerm& term);

/// Lexicographic comparison of exponent sequences, a proper prefix being
/// below its extensions. Throws InvalidTerm on invalid input.
std::strong_ordering omega_compare(const BaseOrder& order, const OmegaTerm& s,
                                   const OmegaTerm& t);

/// Exponentwise image under `h`. `h` must preserve the order between every
/// pair of distinct exponents of `term` (NotMonotone otherwise) and land in
/// `target` (InvalidElement otherwise).
OmegaTerm omega_lift(const ElementMap& h, const BaseOrder& source,
                     const BaseOrder& target, const OmegaTerm& term);

/// The first `count` terms of omega(Fin(n)) in ascending order, starting at
/// the empty term. Stops early only when the order runs out (n = 0).
std::vector<OmegaTerm> omega_enumerate(const BaseOrder& fin_order, std::size_t count);

/// i -> (d(i)); strictly descending whenever `descent` is.
DescentScheme<OmegaTerm> omega_descend_lift(const DescentScheme<Element>& descent);

}  // namespace ordcomb
