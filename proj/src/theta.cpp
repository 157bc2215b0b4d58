#include "ordcomb/theta.hpp"

#include <algorithm>
#include <functional>
#include <span>

namespace ordcomb {

struct ThetaTerm::Node {
  Kind kind = Kind::Zero;
  Element index;
  std::vector<ThetaTerm> children;
  std::size_t size = 1;
};

namespace {

std::shared_ptr<const ThetaTerm::Node> make_node(ThetaTerm::Kind kind, Element index,
                                                 std::vector<ThetaTerm> children) {
  auto node = std::make_shared<ThetaTerm::Node>();
  node->kind = kind;
  node->index = std::move(index);
  node->size = 1;
  for (const auto& c : children) node->size += c.size();
  node->children = std::move(children);
  return node;
}

}  // namespace

ThetaTerm::ThetaTerm() : ThetaTerm(zero()) {}

ThetaTerm ThetaTerm::zero() {
  static const auto node = make_node(Kind::Zero, Element{}, {});
  return ThetaTerm(node);
}

ThetaTerm ThetaTerm::big_omega() {
  static const auto node = make_node(Kind::BigOmega, Element{}, {});
  return ThetaTerm(node);
}

ThetaTerm ThetaTerm::eps(Element index) {
  return ThetaTerm(make_node(Kind::Eps, std::move(index), {}));
}

ThetaTerm ThetaTerm::pow(ThetaTerm exponent) {
  return ThetaTerm(make_node(Kind::Pow, Element{}, {std::move(exponent)}));
}

ThetaTerm ThetaTerm::sum(std::vector<ThetaTerm> parts) {
  return ThetaTerm(make_node(Kind::Sum, Element{}, std::move(parts)));
}

ThetaTerm ThetaTerm::collapse(ThetaTerm argument) {
  return ThetaTerm(make_node(Kind::Collapse, Element{}, {std::move(argument)}));
}

ThetaTerm::Kind ThetaTerm::kind() const noexcept { return node_->kind; }

const Element& ThetaTerm::index() const {
  if (kind() != Kind::Eps) throw Error(ErrorCode::InvalidTerm, "index() of non-eps term " + str());
  return node_->index;
}

const ThetaTerm& ThetaTerm::body() const {
  if (kind() != Kind::Pow && kind() != Kind::Collapse) {
    throw Error(ErrorCode::InvalidTerm, "body() of " + str());
  }
  return node_->children.front();
}

const std::vector<ThetaTerm>& ThetaTerm::parts() const {
  if (kind() != Kind::Sum) throw Error(ErrorCode::InvalidTerm, "parts() of non-sum " + str());
  return node_->children;
}

bool ThetaTerm::is_principal() const noexcept {
  return kind() != Kind::Zero && kind() != Kind::Sum;
}

bool ThetaTerm::is_epsilon() const noexcept {
  return kind() == Kind::BigOmega || kind() == Kind::Eps || kind() == Kind::Collapse;
}

std::size_t ThetaTerm::size() const noexcept { return node_->size; }

std::string ThetaTerm::str() const {
  switch (kind()) {
    case Kind::Zero: return "0";
    case Kind::BigOmega: return "W";
    case Kind::Eps: return "e(" + node_->index.str() + ")";
    case Kind::Pow: return "p(" + body().str() + ")";
    case Kind::Collapse: return "th(" + body().str() + ")";
    case Kind::Sum: {
      std::string out = "s(";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i > 0) out += ' ';
        out += parts()[i].str();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const ThetaTerm& a, const ThetaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() == ThetaTerm::Kind::Eps) return a.node_->index == b.node_->index;
  return a.node_->children == b.node_->children;
}

namespace {

void collect_coefficients(const ThetaTerm& term, CoefficientSet& out) {
  switch (term.kind()) {
    case ThetaTerm::Kind::Zero:
    case ThetaTerm::Kind::BigOmega:
    case ThetaTerm::Kind::Eps: return;
    case ThetaTerm::Kind::Pow: collect_coefficients(term.body(), out); return;
    case ThetaTerm::Kind::Sum:
      for (const auto& part : term.parts()) collect_coefficients(part, out);
      return;
    case ThetaTerm::Kind::Collapse:
      if (std::find(out.begin(), out.end(), term) == out.end()) out.push_back(term);
      return;
  }
}

// Rank among the epsilon-like terms: theta a < Omega < eps_{Omega+x}.
int epsilon_rank(const ThetaTerm& t) {
  switch (t.kind()) {
    case ThetaTerm::Kind::Collapse: return 0;
    case ThetaTerm::Kind::BigOmega: return 1;
    default: return 2;
  }
}

class Comparator {
 public:
  explicit Comparator(const BaseOrder& order) : order_(order) {}

  std::strong_ordering operator()(const ThetaTerm& s, const ThetaTerm& t) const {
    return compare(s, t);
  }

  std::strong_ordering compare(const ThetaTerm& s, const ThetaTerm& t) const {
    // Compare the additive decompositions as Cantor normal forms.
    std::span<const ThetaTerm> ps = summands(s);
    std::span<const ThetaTerm> pt = summands(t);
    return std::lexicographical_compare_three_way(
        ps.begin(), ps.end(), pt.begin(), pt.end(),
        [this](const ThetaTerm& a, const ThetaTerm& b) { return compare_principal(a, b); });
  }

 private:
  static std::span<const ThetaTerm> summands(const ThetaTerm& t) {
    if (t.kind() == ThetaTerm::Kind::Zero) return {};
    if (t.kind() == ThetaTerm::Kind::Sum) return t.parts();
    return {&t, 1};
  }

  std::strong_ordering compare_principal(const ThetaTerm& a, const ThetaTerm& b) const {
    if (a.is_epsilon() && b.is_epsilon()) return compare_epsilon(a, b);
    // w^s vs w^t compares exponents; an epsilon E is its own exponent.
    const ThetaTerm& ea = a.is_epsilon() ? a : a.body();
    const ThetaTerm& eb = b.is_epsilon() ? b : b.body();
    return compare(ea, eb);
  }

  std::strong_ordering compare_epsilon(const ThetaTerm& a, const ThetaTerm& b) const {
    int ra = epsilon_rank(a);
    int rb = epsilon_rank(b);
    if (ra != rb) return ra <=> rb;
    switch (a.kind()) {
      case ThetaTerm::Kind::BigOmega: return std::strong_ordering::equal;
      case ThetaTerm::Kind::Eps: return base_compare(order_, a.index(), b.index());
      default: return compare_collapse(a, b);
    }
  }

  // theta a < theta b  iff  (a < b and k(a) < theta b) or theta a <= some
  // member of k(b). Evaluated on whichever argument is smaller.
  std::strong_ordering compare_collapse(const ThetaTerm& a, const ThetaTerm& b) const {
    auto args = compare(a.body(), b.body());
    if (args == 0) return std::strong_ordering::equal;
    if (args < 0) {
      return all_below(theta_coefficients(a.body()), b) ? std::strong_ordering::less
                                                        : std::strong_ordering::greater;
    }
    return all_below(theta_coefficients(b.body()), a) ? std::strong_ordering::greater
                                                      : std::strong_ordering::less;
  }

  bool all_below(const CoefficientSet& coefficients, const ThetaTerm& bound) const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [&](const ThetaTerm& c) { return compare(c, bound) < 0; });
  }

  const BaseOrder& order_;
};

bool valid(const BaseOrder& order, const ThetaTerm& t, const Comparator& cmp) {
  switch (t.kind()) {
    case ThetaTerm::Kind::Zero:
    case ThetaTerm::Kind::BigOmega: return true;
    case ThetaTerm::Kind::Eps: return order.contains(t.index());
    case ThetaTerm::Kind::Pow: return !t.body().is_epsilon() && valid(order, t.body(), cmp);
    case ThetaTerm::Kind::Collapse: return valid(order, t.body(), cmp);
    case ThetaTerm::Kind::Sum: {
      const auto& parts = t.parts();
      if (parts.size() < 2) return false;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].is_principal() || !valid(order, parts[i], cmp)) return false;
        if (i > 0 && cmp(parts[i], parts[i - 1]) > 0) return false;
      }
      return true;
    }
  }
  return false;
}

ThetaTerm map_indices(const ThetaTerm& t, const std::function<Element(const Element&)>& f) {
  switch (t.kind()) {
    case ThetaTerm::Kind::Zero:
    case ThetaTerm::Kind::BigOmega: return t;
    case ThetaTerm::Kind::Eps: return ThetaTerm::eps(f(t.index()));
    case ThetaTerm::Kind::Pow: return ThetaTerm::pow(map_indices(t.body(), f));
    case ThetaTerm::Kind::Collapse: return ThetaTerm::collapse(map_indices(t.body(), f));
    case ThetaTerm::Kind::Sum: {
      std::vector<ThetaTerm> parts;
      parts.reserve(t.parts().size());
      for (const auto& p : t.parts()) parts.push_back(map_indices(p, f));
      return ThetaTerm::sum(std::move(parts));
    }
  }
  return t;
}

void collect_indices(const ThetaTerm& t, std::vector<Element>& out) {
  switch (t.kind()) {
    case ThetaTerm::Kind::Zero:
    case ThetaTerm::Kind::BigOmega: return;
    case ThetaTerm::Kind::Eps:
      if (std::find(out.begin(), out.end(), t.index()) == out.end()) out.push_back(t.index());
      return;
    case ThetaTerm::Kind::Pow:
    case ThetaTerm::Kind::Collapse: collect_indices(t.body(), out); return;
    case ThetaTerm::Kind::Sum:
      for (const auto& p : t.parts()) collect_indices(p, out);
      return;
  }
}

}  // namespace

bool theta_validate(const BaseOrder& order, const ThetaTerm& term) {
  return valid(order, term, Comparator(order));
}

CoefficientSet theta_coefficients(const ThetaTerm& term) {
  CoefficientSet out;
  collect_coefficients(term, out);
  return out;
}

std::strong_ordering theta_compare(const BaseOrder& order, const ThetaTerm& s,
                                   const ThetaTerm& t) {
  Comparator cmp(order);
  if (!valid(order, s, cmp)) throw Error(ErrorCode::InvalidTerm, s.str() + " is not in normal form over " + order.str());
  if (!valid(order, t, cmp)) throw Error(ErrorCode::InvalidTerm, t.str() + " is not in normal form over " + order.str());
  return cmp(s, t);
}

ThetaTerm theta_lift(const ElementMap& h, const BaseOrder& source, const BaseOrder& target,
                     const ThetaTerm& term) {
  if (!theta_validate(source, term)) {
    throw Error(ErrorCode::InvalidTerm, term.str() + " is not in normal form over " + source.str());
  }
  std::vector<Element> indices;
  collect_indices(term, indices);
  std::vector<std::pair<Element, Element>> table;
  for (const auto& x : indices) {
    Element y = h(x);
    if (!target.contains(y)) {
      throw Error(ErrorCode::InvalidElement, "image " + y.str() + " of " + x.str() +
                                                 " is not an element of " + target.str());
    }
    table.emplace_back(x, std::move(y));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      if (base_compare(source, table[i].first, table[j].first) !=
          base_compare(target, table[i].second, table[j].second)) {
        throw Error(ErrorCode::NotMonotone, "map is not strictly monotone on " +
                                                table[i].first.str() + " and " + table[j].first.str());
      }
    }
  }
  return map_indices(term, table_map(std::move(table)));
}

std::vector<ThetaTerm> theta_enumerate(const BaseOrder& order, std::size_t max_size,
                                       std::uint64_t element_bound) {
  Comparator cmp(order);
  std::vector<std::vector<ThetaTerm>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1].push_back(ThetaTerm::zero());
    by_size[1].push_back(ThetaTerm::big_omega());
    for (auto& x : base_elements(order, element_bound)) by_size[1].push_back(ThetaTerm::eps(x));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    auto& out = by_size[n];
    for (const auto& b : by_size[n - 1]) {
      if (!b.is_epsilon()) out.push_back(ThetaTerm::pow(b));
    }
    for (const auto& b : by_size[n - 1]) out.push_back(ThetaTerm::collapse(b));

    // Sums: weakly decreasing principal parts whose sizes add up to n - 1.
    std::vector<ThetaTerm> current;
    std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
      if (remaining == 0) {
        if (current.size() >= 2) out.push_back(ThetaTerm::sum(current));
        return;
      }
      for (std::size_t sz = 1; sz <= remaining; ++sz) {
        for (const auto& p : by_size[sz]) {
          if (!p.is_principal()) continue;
          if (!current.empty() && cmp(p, current.back()) > 0) continue;
          current.push_back(p);
          extend(remaining - sz);
          current.pop_back();
        }
      }
    };
    extend(n - 1);
  }
  std::vector<ThetaTerm> all;
  for (auto& group : by_size) all.insert(all.end(), group.begin(), group.end());
  return all;
}

std::optional<ThetaDescent> theta_descend_search(const BaseOrder& order, std::size_t budget,
                                                 std::size_t frontier_size) {
  if (budget == 0) throw Error(ErrorCode::OutOfRange, "descent budget must be at least 1");
  Comparator cmp(order);
  if (auto descent = base_descent(order)) {
    ThetaDescent out{ThetaDescent::Source::BaseDescent, {}};
    for (std::size_t i = 0; i < budget; ++i) out.chain.push_back(ThetaTerm::eps((*descent)(i)));
    return out;
  }
  auto shifts = base_shift_embeddings(order);
  if (shifts.empty()) return std::nullopt;
  for (const auto& t : theta_enumerate(order, frontier_size, 2)) {
    for (const auto& shift : shifts) {
      ThetaTerm next = map_indices(t, shift);
      if (cmp(next, t) >= 0) continue;
      ThetaDescent out{ThetaDescent::Source::ShiftCertificate, {t}};
      while (out.chain.size() < budget) out.chain.push_back(map_indices(out.chain.back(), shift));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace ordcomb
