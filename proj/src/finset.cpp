#include "ordcomb/finset.hpp"

#include <algorithm>

namespace ordcomb {

FinSet::FinSet(std::initializer_list<value_type> elements)
    : FinSet(std::vector<value_type>(elements)) {}

FinSet::FinSet(std::vector<value_type> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) {
      throw Error(ErrorCode::InvalidElement, "finite set must be strictly increasing");
    }
  }
}

FinSet FinSet::range(value_type first, value_type last) {
  FinSet out;
  for (value_type x = first; x < last; ++x) out.elements_.push_back(x);
  return out;
}

FinSet::value_type FinSet::min() const {
  if (empty()) throw Error(ErrorCode::OutOfRange, "min of empty set");
  return elements_.front();
}

FinSet::value_type FinSet::max() const {
  if (empty()) throw Error(ErrorCode::OutOfRange, "max of empty set");
  return elements_.back();
}

FinSet FinSet::prefix(std::size_t n) const {
  if (n > size()) {
    throw Error(ErrorCode::OutOfRange, "prefix " + std::to_string(n) + " of " + str());
  }
  FinSet out;
  out.elements_.assign(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

FinSet FinSet::drop(std::size_t i) const {
  if (i > size()) {
    throw Error(ErrorCode::OutOfRange, "cannot drop " + std::to_string(i) + " elements of " + str());
  }
  FinSet out;
  out.elements_.assign(elements_.begin() + static_cast<std::ptrdiff_t>(i), elements_.end());
  return out;
}

FinSet FinSet::above(const FinSet& s) const {
  if (s.empty()) return *this;
  FinSet out;
  auto it = std::upper_bound(elements_.begin(), elements_.end(), s.max());
  out.elements_.assign(it, elements_.end());
  return out;
}

FinSet FinSet::united(const FinSet& other) const {
  FinSet out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.elements_));
  return out;
}

bool FinSet::contains(value_type x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

std::string FinSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

bool finset_initial_segment(const FinSet& s, const FinSet& t) {
  return s.size() < t.size() && std::equal(s.begin(), s.end(), t.begin());
}

QuasiOrder::QuasiOrder(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  for (const auto& row : leq_) {
    if (row.size() != n) throw Error(ErrorCode::InvalidOrder, "quasi order table is not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw Error(ErrorCode::InvalidOrder, "quasi order is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[b][c] && !leq_[a][c]) {
          throw Error(ErrorCode::InvalidOrder, "quasi order is not transitive");
        }
      }
    }
  }
}

QuasiOrder QuasiOrder::antichain(std::size_t n) {
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) table[i][i] = true;
  return QuasiOrder(std::move(table));
}

QuasiOrder QuasiOrder::chain(std::size_t n) {
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) table[i][j] = true;
  return QuasiOrder(std::move(table));
}

bool QuasiOrder::leq(std::size_t a, std::size_t b) const {
  if (a >= size() || b >= size()) {
    throw Error(ErrorCode::OutOfRange, "value outside the quasi order");
  }
  return leq_[a][b];
}

}  // namespace ordcomb
