#include "ordcomb/omega.hpp"

#include <algorithm>

namespace ordcomb {

std::string OmegaTerm::str() const {
  std::string out = "w(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ' ';
    out += exponents[i].str();
  }
  return out + ")";
}

bool omega_validate(const BaseOrder& order, const OmegaTerm& term) {
  const auto& xs = term.exponents;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!order.contains(xs[i])) return false;
    if (i > 0 && base_compare(order, xs[i], xs[i - 1]) > 0) return false;
  }
  return true;
}

std::strong_ordering omega_compare(const BaseOrder& order, const OmegaTerm& s,
                                   const OmegaTerm& t) {
  if (!omega_validate(order, s)) throw Error(ErrorCode::InvalidTerm, s.str() + " is not a term over " + order.str());
  if (!omega_validate(order, t)) throw Error(ErrorCode::InvalidTerm, t.str() + " is not a term over " + order.str());
  return std::lexicographical_compare_three_way(
      s.exponents.begin(), s.exponents.end(), t.exponents.begin(), t.exponents.end(),
      [&](const Element& a, const Element& b) { return base_compare(order, a, b); });
}

OmegaTerm omega_lift(const ElementMap& h, const BaseOrder& source,
                     const BaseOrder& target, const OmegaTerm& term) {
  if (!omega_validate(source, term)) {
    throw Error(ErrorCode::InvalidTerm, term.str() + " is not a term over " + source.str());
  }
  OmegaTerm image;
  image.exponents.reserve(term.exponents.size());
  for (const auto& x : term.exponents) {
    Element y = h(x);
    if (!target.contains(y)) {
      throw Error(ErrorCode::InvalidElement, "image " + y.str() + " of " + x.str() +
                                                 " is not an element of " + target.str());
    }
    image.exponents.push_back(std::move(y));
  }
  const auto& xs = term.exponents;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (base_compare(source, xs[i], xs[j]) !=
          base_compare(target, image.exponents[i], image.exponents[j])) {
        throw Error(ErrorCode::NotMonotone, "map is not strictly monotone on " + xs[i].str() +
                                                " and " + xs[j].str());
      }
    }
  }
  return image;
}

std::vector<OmegaTerm> omega_enumerate(const BaseOrder& fin_order, std::size_t count) {
  if (fin_order.kind() != BaseOrder::Kind::Fin) {
    throw Error(ErrorCode::InvalidOrder, "enumeration needs a finite base, got " + fin_order.str());
  }
  std::vector<OmegaTerm> out;
  if (count == 0) return out;
  out.emplace_back();
  // Appending the least exponent gives the immediate successor: every term
  // above t either extends t, hence sits at or above t+(0), or differs
  // from t at an earlier position and so lies above all extensions of t.
  auto least = base_first(fin_order);
  if (!least) return out;
  while (out.size() < count) {
    OmegaTerm next = out.back();
    next.exponents.push_back(*least);
    out.push_back(std::move(next));
  }
  return out;
}

DescentScheme<OmegaTerm> omega_descend_lift(const DescentScheme<Element>& descent) {
  return DescentScheme<OmegaTerm>([descent](std::uint64_t i) {
    return OmegaTerm{{descent(i)}};
  });
}

}  // namespace ordcomb
