#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordcomb/finset.hpp"

namespace ordcomb {

using Color = std::uint32_t;

/// Finite-window truncation of an eventually constant f : [N]^{<w} -> Q.
///
/// A general array tabulates f on every subset of {0, ..., window-1} with
/// at most `depth` elements and promises stabilization from level
/// depth - guard on: f(t) = f(t minus its largest element) whenever
/// depth - guard < |t| <= depth, so the limit is
/// fbar(X) = f(X[depth]) = f(X[depth - guard]).
///
/// A uniform array of depth d tabulates f on d-subsets only and reads
/// f(s) = f(s[d]) for every |s| >= d, so fbar(X) = f(X[d]) exactly.
class StabilizingArray {
 public:
  using Function = std::function<Color(const FinSet&)>;

  /// Tabulates `f` on all subsets of size <= depth. Throws InvalidArray on
  /// bad parameters or a value outside [0, colors).
  static StabilizingArray general(std::uint32_t window, std::size_t depth, std::size_t guard,
                                  std::uint32_t colors, const Function& f);
  static StabilizingArray uniform(std::uint32_t window, std::size_t depth, std::uint32_t colors,
                                  const Function& f);
  static StabilizingArray constant(std::uint32_t window, std::size_t depth, std::size_t guard,
                                   std::uint32_t colors, Color value);

  std::uint32_t window() const noexcept { return window_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t guard() const noexcept { return guard_; }
  std::uint32_t colors() const noexcept { return colors_; }
  bool is_uniform() const noexcept { return uniform_; }

  /// Smallest set size on which f is defined: depth for uniform arrays.
  std::size_t min_length() const noexcept { return uniform_ ? depth_ : 0; }
  /// Number of leading elements that determine fbar: depth for uniform
  /// arrays, depth - guard otherwise.
  std::size_t limit_depth() const noexcept { return uniform_ ? depth_ : depth_ - guard_; }
  /// Largest size a stable root can need.
  std::size_t root_depth() const noexcept { return limit_depth(); }

  /// f(s). Throws OutOfRange when s leaves the window or its size is not
  /// covered by the table.
  Color value(const FinSet& s) const;

  /// First set (by size, then lexicographically) breaking the
  /// stabilization promise; none for uniform arrays.
  std::optional<FinSet> certificate_violation() const;
  /// Throws NotStabilized when certificate_violation() finds something.
  void validate() const;

  /// Every tabulated (subset, value) pair, ordered by size then lex.
  std::vector<std::pair<FinSet, Color>> entries() const;

 private:
  StabilizingArray() = default;
  std::uint64_t slot(const FinSet& s) const;

  std::uint32_t window_ = 0;
  std::size_t depth_ = 0;
  std::size_t guard_ = 1;
  std::uint32_t colors_ = 1;
  bool uniform_ = false;
  std::vector<std::uint64_t> offsets_;  // first slot of each size
  std::shared_ptr<const std::vector<std::uint8_t>> values_;
  std::shared_ptr<const std::vector<std::vector<std::uint64_t>>> binom_;
};

/// The stabilized value along X's prefix chain. Throws OutOfRange when X
/// has fewer than limit_depth() elements and NotStabilized when the values
/// f(X[depth-guard]), ..., f(X[min(|X|, depth)]) disagree.
Color fbar(const StabilizingArray& array, const FinSet& x);

/// Text form:
///
///   window M depth D guard g colors q [uniform d]
///   <subset as space-separated naturals> <value>
///   ...
///
/// Blank lines and '#' comments are ignored. A uniform array lists exactly
/// its d-subsets and must declare depth d. Throws InvalidArray with the
/// offending line number.
StabilizingArray read_array(std::istream& in);
StabilizingArray read_array_file(const std::string& path);
void write_array(std::ostream& out, const StabilizingArray& array);

}  // namespace ordcomb
