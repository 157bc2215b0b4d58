#pragma once

// Subset enumeration and ranking over {0, ..., n-1}. Internal to the library.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "ordcomb/finset.hpp"

namespace ordcomb::detail {

class Binomial {
 public:
  explicit Binomial(std::size_t n) : table_(n + 1, std::vector<std::uint64_t>(n + 1, 0)) {
    for (std::size_t i = 0; i <= n; ++i) {
      table_[i][0] = 1;
      for (std::size_t j = 1; j <= i; ++j) table_[i][j] = table_[i - 1][j - 1] + table_[i - 1][j];
    }
  }

  std::uint64_t operator()(std::size_t n, std::size_t k) const {
    if (k > n) return 0;
    return table_[n][k];
  }

 private:
  std::vector<std::vector<std::uint64_t>> table_;
};

/// Colex rank among the k-subsets, k = |s|.
inline std::uint64_t colex_rank(const Binomial& binom, const FinSet& s) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i) rank += binom(s[i], i + 1);
  return rank;
}

/// The r-th k-subset of {0..n-1} in lexicographic order.
inline FinSet lex_unrank(const Binomial& binom, std::size_t n, std::size_t k, std::uint64_t r) {
  std::vector<FinSet::value_type> out;
  out.reserve(k);
  std::size_t x = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    // Count the subsets that start with x at this slot; skip whole blocks.
    while (true) {
      std::uint64_t block = binom(n - x - 1, k - slot - 1);
      if (r < block) break;
      r -= block;
      ++x;
    }
    out.push_back(static_cast<FinSet::value_type>(x));
    ++x;
  }
  return FinSet(std::move(out));
}

/// Calls fn on every k-subset of `ground` in lexicographic order until fn
/// returns false. Returns false when stopped early.
template <class Fn>
bool for_each_subset(const std::vector<FinSet::value_type>& ground, std::size_t k, Fn&& fn) {
  const std::size_t n = ground.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<FinSet::value_type> buf(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = ground[idx[i]];
    if (!fn(FinSet(buf))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Least index in [0, count) satisfying pred, searched by `jobs` threads.
/// Blocks are claimed in increasing order and every index below the best
/// hit found so far is examined, so the answer does not depend on jobs.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t count, unsigned jobs, Pred&& pred) {
  if (jobs <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr std::uint64_t kBlock = 32;
  std::atomic<std::uint64_t> best{count};
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      while (true) {
        std::uint64_t start = next.fetch_add(kBlock);
        if (start >= count || start >= best.load()) return;
        std::uint64_t stop = std::min(count, start + kBlock);
        for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
          if (!pred(i)) continue;
          std::uint64_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  std::uint64_t result = best.load();
  if (result >= count) return std::nullopt;
  return result;
}

}  // namespace ordcomb::detail
