#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordcomb/linear_order.hpp"

namespace ordcomb {

/// Term of the relativized Bachmann-Howard system theta(eps_{Omega+X}):
///
///   0 | Omega | eps_{Omega+x} | w^t | t1 + ... + tk | theta t
///
/// Omega, eps_{Omega+x} and theta t denote epsilon numbers (w^E = E), so
/// they double as their own w-exponent when sums and powers are compared.
/// Construction is unchecked; theta_validate decides normal form.
class ThetaTerm {
 public:
  enum class Kind { Zero, BigOmega, Eps, Pow, Sum, Collapse };

  ThetaTerm();

  static ThetaTerm zero();
  static ThetaTerm big_omega();
  static ThetaTerm eps(Element index);
  static ThetaTerm pow(ThetaTerm exponent);
  static ThetaTerm sum(std::vector<ThetaTerm> parts);
  static ThetaTerm collapse(ThetaTerm argument);

  Kind kind() const noexcept;
  const Element& index() const;                 // Eps
  const ThetaTerm& body() const;                // Pow, Collapse
  const std::vector<ThetaTerm>& parts() const;  // Sum

  /// Additively principal: Omega, eps, w^t or theta t.
  bool is_principal() const noexcept;
  /// Syntactic epsilon numbers: Omega, eps or theta t.
  bool is_epsilon() const noexcept;

  /// Node count of the syntax tree.
  std::size_t size() const noexcept;
  std::string str() const;

  friend bool operator==(const ThetaTerm& a, const ThetaTerm& b);

  struct Node;  // shared immutable representation

 private:
  explicit ThetaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Collapse subterms reachable without passing through a collapse, in
/// left-to-right order of first occurrence.
using CoefficientSet = std::vector<ThetaTerm>;

/// Normal form: Eps indices in X; w^t only for non-epsilon t; sums have at
/// least two principal parts, weakly decreasing.
bool theta_validate(const BaseOrder& order, const ThetaTerm& term);

/// Structural and total on all terms; validity is not required.
CoefficientSet theta_coefficients(const ThetaTerm& term);

/// Throws InvalidTerm when either side fails theta_validate.
std::strong_ordering theta_compare(const BaseOrder& order, const ThetaTerm& s,
                                   const ThetaTerm& t);

/// Replace every eps_{Omega+x} by eps_{Omega+h(x)}. NotMonotone when h
/// reverses or collapses two indices of `term`.
ThetaTerm theta_lift(const ElementMap& h, const BaseOrder& source,
                     const BaseOrder& target, const ThetaTerm& term);

/// All valid terms of at most `max_size` nodes whose eps indices come from
/// base_elements(order, element_bound), grouped by size, then generation
/// order. Deterministic.
std::vector<ThetaTerm> theta_enumerate(const BaseOrder& order, std::size_t max_size,
                                       std::uint64_t element_bound);

struct ThetaDescent {
  enum class Source { BaseDescent, ShiftCertificate };
  Source source;
  std::vector<ThetaTerm> chain;
};

/// Falsification probe for well-foundedness. With an ill-founded base the
/// chain is eps over the base descent. Otherwise looks for a small term t
/// and a shift self-embedding s of X with lift(s, t) < t, which by
/// functoriality descends forever (t > s(t) > s(s(t)) > ...). Returns none
/// once the frontier is exhausted; budget must be at least 1.
std::optional<ThetaDescent> theta_descend_search(const BaseOrder& order, std::size_t budget,
                                                 std::size_t frontier_size = 3);

}  // namespace ordcomb
