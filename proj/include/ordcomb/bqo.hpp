#pragma once

#include <optional>
#include <vector>

#include "ordcomb/array.hpp"
#include "ordcomb/finset.hpp"

namespace ordcomb {

/// Least X (as a (depth+1)-subset of the window, in lexicographic order)
/// with fbar(X) <=_Q fbar(X^-). Since fbar reads only X[depth], such an X
/// stands for every infinite set extending it. None means the window holds
/// no witness, nothing more.
std::optional<FinSet> good_pair_search(const StabilizingArray& array, const QuasiOrder& order,
                                       unsigned jobs = 1);

struct Homogeneous {
  FinSet set;
  Color color;
};

/// Least X with |X| = target on which f is constant on [X]^d, for a uniform
/// two-colour array of depth d. In the uniform model this is the finite
/// image of fbar being constant on the cofinite subsets of X: every d-subset
/// of X is (X minus a finite set)[d].
std::optional<Homogeneous> cofinite_homogeneous_search(const StabilizingArray& array,
                                                       std::size_t target, unsigned jobs = 1);

/// f is constant on [X]^d (vacuously when |X| < d).
bool verify_homogeneous(const StabilizingArray& array, const FinSet& x, std::size_t d);

/// Least s in [Z]^{<w} such that f(t) = f(s) for every t in [Z]^{<=depth}
/// with s a proper initial segment of t. Candidates have between
/// min_length() and root_depth() elements and are ordered by largest
/// element (the empty set first), then size, then lexicographically, which
/// keeps Z/s as large as possible. Throws WindowExhausted when none of them
/// qualifies.
FinSet find_stable_root(const StabilizingArray& array, const FinSet& z);

/// One inspected pair (U, U^-) of the extraction.
struct AdjacentPair {
  FinSet set;
  Color value;        // fbar(U)
  Color value_minus;  // fbar(U^-)
};

struct Extraction {
  enum class Exit { Homogeneous, AdjacentPair, RootTail };

  FinSet witness;
  Color value;
  Exit exit;
  FinSet z;
  FinSet root;                       // empty on the Homogeneous exit
  std::vector<AdjacentPair> scanned;  // every pair inspected, in scan order
};

/// Good pair for a 3-valued array under the 3-antichain, i.e. an X with
/// fbar(X) = fbar(X^-). Follows the argument that the cofinite Ramsey
/// theorem makes {0,1,2} a good order:
///
///  1. find Z homogeneous for "value is 2" versus "value in {0,1}" and
///     extend it greedily; if the value is 2 throughout, X = Z;
///  2. otherwise take a stable root s of Z, put V = s u Z/s and
///     W = s u (Z/s)^-, and try (V^{-i}, V^{-(i+1)}) then
///     (W^{-i}, W^{-(i+1)}) for i < |s|;
///  3. if every one of those pairs flips, fbar(V) = fbar(W) and a parity
///     count give fbar(Z/s) = fbar((Z/s)^-), so X = Z/s.
///
/// The witness is re-checked before returning. WindowExhausted means the
/// truncation is too small for steps 1 or 2.
Extraction three_antichain_good_pair(const StabilizingArray& array, unsigned jobs = 1);

}  // namespace ordcomb
