#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcomb/error.hpp"

namespace ordcomb {

/// Canonical element code of a base order: a natural number, or a pair of
/// codes for lexicographic products. Comparison operators on Element are
/// structural and only serve containers; the carrier order is base_compare.
class Element {
 public:
  Element() = default;
  explicit Element(std::uint64_t value) : value_(value) {}

  static Element pair(Element left, Element right);

  bool is_pair() const noexcept { return children_ != nullptr; }
  std::uint64_t value() const;
  const Element& left() const;
  const Element& right() const;

  std::string str() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::uint64_t value_ = 0;
  std::shared_ptr<const std::pair<Element, Element>> children_;
};

/// A presented linear order: Fin(n), omega, omega* or a lexicographic
/// product. Immutable; copies share structure.
class BaseOrder {
 public:
  enum class Kind { Fin, Omega, OmegaStar, Lex };

  static constexpr int kMaxLexDepth = 4;

  static BaseOrder fin(std::uint64_t n);
  static BaseOrder omega();
  static BaseOrder omega_star();
  /// Throws InvalidOrder when the nesting depth would exceed kMaxLexDepth.
  static BaseOrder lex(BaseOrder left, BaseOrder right);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t size() const;  // Fin only
  const BaseOrder& left() const;
  const BaseOrder& right() const;
  int depth() const noexcept { return depth_; }

  bool is_finite() const noexcept;
  bool contains(const Element& e) const;
  std::string str() const;

  friend bool operator==(const BaseOrder& a, const BaseOrder& b);

 private:
  BaseOrder(Kind kind, std::uint64_t size) : kind_(kind), size_(size) {}

  Kind kind_ = Kind::Omega;
  std::uint64_t size_ = 0;
  int depth_ = 0;
  std::shared_ptr<const std::pair<BaseOrder, BaseOrder>> children_;
};

/// Throws InvalidElement when either code is not an element of `order`.
std::strong_ordering base_compare(const BaseOrder& order, const Element& a,
                                  const Element& b);

/// The least canonical code (0, or a pair of least codes); none when empty.
std::optional<Element> base_first(const BaseOrder& order);

/// Every element whose natural coordinates are all below `bound` (Fin
/// coordinates are additionally clipped to the chain size). Structural order.
std::vector<Element> base_elements(const BaseOrder& order, std::uint64_t bound);

/// Map from step index to a value, contracted to descend strictly in some
/// carrier order. verify_descent checks the contract on a finite prefix.
template <class T>
class DescentScheme {
 public:
  using Generator = std::function<T(std::uint64_t)>;

  explicit DescentScheme(Generator generator)
      : generator_(std::move(generator)) {}

  T operator()(std::uint64_t step) const { return generator_(step); }

  std::vector<T> prefix(std::size_t length) const {
    std::vector<T> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(generator_(i));
    return out;
  }

 private:
  Generator generator_;
};

template <class T, class Compare>
bool verify_descent(const DescentScheme<T>& scheme, Compare&& compare,
                    std::size_t steps) {
  if (steps == 0) return true;
  T previous = scheme(0);
  for (std::size_t i = 1; i <= steps; ++i) {
    T current = scheme(i);
    if (!(compare(current, previous) < 0)) return false;
    previous = std::move(current);
  }
  return true;
}

/// A scheme exists exactly when an omega* factor is reachable without a
/// preceding ill-founded coordinate; the other coordinates are held at
/// their least code.
std::optional<DescentScheme<Element>> base_descent(const BaseOrder& order);

using ElementMap = std::function<Element(const Element&)>;

/// Finite code table as an ElementMap; unmapped codes raise InvalidElement.
ElementMap table_map(std::vector<std::pair<Element, Element>> entries);

/// Order-embeddings of `order` into itself that shift some omega or omega*
/// coordinate by one. Empty for finite orders, whose only self-embedding is
/// the identity.
std::vector<ElementMap> base_shift_embeddings(const BaseOrder& order);

}  // namespace ordcomb
