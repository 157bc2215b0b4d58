#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ordcomb/error.hpp"

namespace ordcomb {

/// Finite set of naturals kept as its increasing enumeration, so that
/// Y[n] is a prefix and Y^- drops the front.
class FinSet {
 public:
  using value_type = std::uint32_t;

  FinSet() = default;
  FinSet(std::initializer_list<value_type> elements);
  /// Throws InvalidElement unless `elements` is strictly increasing.
  explicit FinSet(std::vector<value_type> elements);

  /// {first, first+1, ..., last-1}
  static FinSet range(value_type first, value_type last);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  value_type operator[](std::size_t i) const { return elements_[i]; }
  value_type min() const;
  value_type max() const;
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const std::vector<value_type>& elements() const noexcept { return elements_; }

  /// Y[n], the n least elements. OutOfRange when n > size().
  FinSet prefix(std::size_t n) const;
  /// Y^{-i}, Y without its i least elements. OutOfRange when i > size().
  FinSet drop(std::size_t i) const;
  FinSet drop_min() const { return drop(1); }
  /// Y/s = {n in Y | m < n for all m in s}.
  FinSet above(const FinSet& s) const;
  FinSet united(const FinSet& other) const;
  bool contains(value_type x) const;
  bool is_subset_of(const FinSet& other) const;

  std::string str() const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<value_type> elements_;
};

/// s is a proper initial segment of t: s = t[m] for some m < |t|.
bool finset_initial_segment(const FinSet& s, const FinSet& t);
inline FinSet finset_above(const FinSet& y, const FinSet& s) { return y.above(s); }
inline FinSet finset_drop(const FinSet& y, std::size_t i) { return y.drop(i); }

/// Quasi order on {0, ..., size-1} given by its full relation table.
class QuasiOrder {
 public:
  /// Throws InvalidOrder unless the table is square, reflexive and transitive.
  explicit QuasiOrder(std::vector<std::vector<bool>> leq);

  static QuasiOrder antichain(std::size_t n);
  /// 0 <= 1 <= ... <= n-1
  static QuasiOrder chain(std::size_t n);

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<bool>> leq_;
};

}  // namespace ordcomb
