#include "ordcomb/linear_order.hpp"

#include <algorithm>
#include <map>

namespace ordcomb {

Element Element::pair(Element left, Element right) {
  Element e;
  e.children_ = std::make_shared<const std::pair<Element, Element>>(
      std::move(left), std::move(right));
  return e;
}

std::uint64_t Element::value() const {
  if (is_pair()) throw Error(ErrorCode::InvalidElement, "element is a pair: " + str());
  return value_;
}

const Element& Element::left() const {
  if (!is_pair()) throw Error(ErrorCode::InvalidElement, "element is not a pair: " + str());
  return children_->first;
}

const Element& Element::right() const {
  if (!is_pair()) throw Error(ErrorCode::InvalidElement, "element is not a pair: " + str());
  return children_->second;
}

std::string Element::str() const {
  if (!is_pair()) return std::to_string(value_);
  return "(" + left().str() + "," + right().str() + ")";
}

bool operator==(const Element& a, const Element& b) {
  if (a.is_pair() != b.is_pair()) return false;
  if (!a.is_pair()) return a.value_ == b.value_;
  if (a.children_ == b.children_) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  // Naturals before pairs; pairs componentwise.
  if (a.is_pair() != b.is_pair()) return a.is_pair() ? std::strong_ordering::greater
                                                      : std::strong_ordering::less;
  if (!a.is_pair()) return a.value_ <=> b.value_;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

BaseOrder BaseOrder::fin(std::uint64_t n) { return BaseOrder(Kind::Fin, n); }
BaseOrder BaseOrder::omega() { return BaseOrder(Kind::Omega, 0); }
BaseOrder BaseOrder::omega_star() { return BaseOrder(Kind::OmegaStar, 0); }

BaseOrder BaseOrder::lex(BaseOrder left, BaseOrder right) {
  int depth = 1 + std::max(left.depth(), right.depth());
  if (depth > kMaxLexDepth) {
    throw Error(ErrorCode::InvalidOrder, "lex nesting deeper than " +
                                             std::to_string(kMaxLexDepth));
  }
  BaseOrder order(Kind::Lex, 0);
  order.depth_ = depth;
  order.children_ = std::make_shared<const std::pair<BaseOrder, BaseOrder>>(
      std::move(left), std::move(right));
  return order;
}

std::uint64_t BaseOrder::size() const {
  if (kind_ != Kind::Fin) throw Error(ErrorCode::InvalidOrder, "size() of infinite order " + str());
  return size_;
}

const BaseOrder& BaseOrder::left() const {
  if (kind_ != Kind::Lex) throw Error(ErrorCode::InvalidOrder, "not a lex product: " + str());
  return children_->first;
}

const BaseOrder& BaseOrder::right() const {
  if (kind_ != Kind::Lex) throw Error(ErrorCode::InvalidOrder, "not a lex product: " + str());
  return children_->second;
}

bool BaseOrder::is_finite() const noexcept {
  switch (kind_) {
    case Kind::Fin: return true;
    case Kind::Omega:
    case Kind::OmegaStar: return false;
    case Kind::Lex: {
      const auto& [l, r] = *children_;
      // An empty factor makes the product empty.
      bool l_empty = l.kind_ == Kind::Fin && l.size_ == 0;
      bool r_empty = r.kind_ == Kind::Fin && r.size_ == 0;
      return l_empty || r_empty || (l.is_finite() && r.is_finite());
    }
  }
  return true;
}

bool BaseOrder::contains(const Element& e) const {
  switch (kind_) {
    case Kind::Fin: return !e.is_pair() && e.value() < size_;
    case Kind::Omega:
    case Kind::OmegaStar: return !e.is_pair();
    case Kind::Lex: return e.is_pair() && left().contains(e.left()) && right().contains(e.right());
  }
  return false;
}

std::string BaseOrder::str() const {
  switch (kind_) {
    case Kind::Fin: return "fin:" + std::to_string(size_);
    case Kind::Omega: return "omega";
    case Kind::OmegaStar: return "omega*";
    case Kind::Lex: return "lex(" + left().str() + "," + right().str() + ")";
  }
  return {};
}

bool operator==(const BaseOrder& a, const BaseOrder& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == BaseOrder::Kind::Fin) return a.size_ == b.size_;
  if (a.kind_ != BaseOrder::Kind::Lex) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering base_compare(const BaseOrder& order, const Element& a,
                                  const Element& b) {
  if (!order.contains(a)) {
    throw Error(ErrorCode::InvalidElement, a.str() + " is not an element of " + order.str());
  }
  if (!order.contains(b)) {
    throw Error(ErrorCode::InvalidElement, b.str() + " is not an element of " + order.str());
  }
  switch (order.kind()) {
    case BaseOrder::Kind::Fin:
    case BaseOrder::Kind::Omega: return a.value() <=> b.value();
    case BaseOrder::Kind::OmegaStar: return b.value() <=> a.value();
    case BaseOrder::Kind::Lex: {
      if (auto c = base_compare(order.left(), a.left(), b.left()); c != 0) return c;
      return base_compare(order.right(), a.right(), b.right());
    }
  }
  return std::strong_ordering::equal;
}

std::optional<Element> base_first(const BaseOrder& order) {
  switch (order.kind()) {
    case BaseOrder::Kind::Fin:
      if (order.size() == 0) return std::nullopt;
      return Element(0);
    case BaseOrder::Kind::Omega:
    case BaseOrder::Kind::OmegaStar: return Element(0);
    case BaseOrder::Kind::Lex: {
      auto l = base_first(order.left());
      auto r = base_first(order.right());
      if (!l || !r) return std::nullopt;
      return Element::pair(*l, *r);
    }
  }
  return std::nullopt;
}

std::vector<Element> base_elements(const BaseOrder& order, std::uint64_t bound) {
  std::vector<Element> out;
  switch (order.kind()) {
    case BaseOrder::Kind::Fin:
      for (std::uint64_t i = 0; i < std::min(bound, order.size()); ++i) out.emplace_back(i);
      break;
    case BaseOrder::Kind::Omega:
    case BaseOrder::Kind::OmegaStar:
      for (std::uint64_t i = 0; i < bound; ++i) out.emplace_back(i);
      break;
    case BaseOrder::Kind::Lex: {
      auto ls = base_elements(order.left(), bound);
      auto rs = base_elements(order.right(), bound);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Element::pair(l, r));
      break;
    }
  }
  return out;
}

std::optional<DescentScheme<Element>> base_descent(const BaseOrder& order) {
  switch (order.kind()) {
    case BaseOrder::Kind::Fin:
    case BaseOrder::Kind::Omega: return std::nullopt;
    case BaseOrder::Kind::OmegaStar:
      return DescentScheme<Element>([](std::uint64_t i) { return Element(i); });
    case BaseOrder::Kind::Lex: {
      auto left_first = base_first(order.left());
      auto right_first = base_first(order.right());
      if (!left_first || !right_first) return std::nullopt;
      if (auto left = base_descent(order.left())) {
        return DescentScheme<Element>([left = *left, fixed = *right_first](std::uint64_t i) {
          return Element::pair(left(i), fixed);
        });
      }
      if (auto right = base_descent(order.right())) {
        return DescentScheme<Element>([right = *right, fixed = *left_first](std::uint64_t i) {
          return Element::pair(fixed, right(i));
        });
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ElementMap table_map(std::vector<std::pair<Element, Element>> entries) {
  auto table = std::make_shared<const std::map<Element, Element>>(entries.begin(), entries.end());
  return [table](const Element& e) -> Element {
    auto it = table->find(e);
    if (it == table->end()) throw Error(ErrorCode::InvalidElement, "code map has no entry for " + e.str());
    return it->second;
  };
}

std::vector<ElementMap> base_shift_embeddings(const BaseOrder& order) {
  std::vector<ElementMap> out;
  switch (order.kind()) {
    case BaseOrder::Kind::Fin: break;
    case BaseOrder::Kind::Omega:
    case BaseOrder::Kind::OmegaStar:
      out.emplace_back([](const Element& e) { return Element(e.value() + 1); });
      break;
    case BaseOrder::Kind::Lex:
      for (auto& shift : base_shift_embeddings(order.left())) {
        out.emplace_back([shift](const Element& e) { return Element::pair(shift(e.left()), e.right()); });
      }
      for (auto& shift : base_shift_embeddings(order.right())) {
        out.emplace_back([shift](const Element& e) { return Element::pair(e.left(), shift(e.right())); });
      }
      break;
  }
  return out;
}

}  // namespace ordcomb
