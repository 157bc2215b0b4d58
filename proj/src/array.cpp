#include "ordcomb/array.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "combinatorics.hpp"

namespace ordcomb {

namespace {

constexpr std::uint64_t kMaxEntries = 64ull << 20;

std::vector<FinSet::value_type> ground_set(std::uint32_t window) {
  std::vector<FinSet::value_type> out(window);
  for (std::uint32_t i = 0; i < window; ++i) out[i] = i;
  return out;
}

std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    table[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) table[i][j] = table[i - 1][j - 1] + table[i - 1][j];
  }
  return table;
}

}  // namespace

StabilizingArray StabilizingArray::general(std::uint32_t window, std::size_t depth,
                                           std::size_t guard, std::uint32_t colors,
                                           const Function& f) {
  if (guard < 1 || guard > depth) {
    throw Error(ErrorCode::InvalidArray, "guard must lie in [1, depth]");
  }
  if (colors < 1 || colors > 255) throw Error(ErrorCode::InvalidArray, "colors must lie in [1, 255]");
  if (depth > window) throw Error(ErrorCode::InvalidArray, "depth exceeds window");

  StabilizingArray a;
  a.window_ = window;
  a.depth_ = depth;
  a.guard_ = guard;
  a.colors_ = colors;
  a.uniform_ = false;
  auto binom = binomial_table(window);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= depth; ++k) {
    a.offsets_.push_back(total);
    total += binom[window][k];
    if (total > kMaxEntries) throw Error(ErrorCode::InvalidArray, "array table too large");
  }
  a.binom_ = std::make_shared<const std::vector<std::vector<std::uint64_t>>>(std::move(binom));

  auto values = std::make_shared<std::vector<std::uint8_t>>(total, 0);
  const auto ground = ground_set(window);
  for (std::size_t k = 0; k <= depth; ++k) {
    detail::for_each_subset(ground, k, [&](const FinSet& s) {
      Color c = f(s);
      if (c >= colors) {
        throw Error(ErrorCode::InvalidArray, "value " + std::to_string(c) + " on " + s.str() +
                                                 " is not below colors=" + std::to_string(colors));
      }
      (*values)[a.slot(s)] = static_cast<std::uint8_t>(c);
      return true;
    });
  }
  a.values_ = std::move(values);
  return a;
}

StabilizingArray StabilizingArray::uniform(std::uint32_t window, std::size_t depth,
                                           std::uint32_t colors, const Function& f) {
  if (colors < 1 || colors > 255) throw Error(ErrorCode::InvalidArray, "colors must lie in [1, 255]");
  if (depth > window) throw Error(ErrorCode::InvalidArray, "depth exceeds window");

  StabilizingArray a;
  a.window_ = window;
  a.depth_ = depth;
  a.guard_ = 1;
  a.colors_ = colors;
  a.uniform_ = true;
  auto binom = binomial_table(window);
  std::uint64_t total = binom[window][depth];
  if (total > kMaxEntries) throw Error(ErrorCode::InvalidArray, "array table too large");
  a.offsets_.assign(depth + 1, 0);
  a.binom_ = std::make_shared<const std::vector<std::vector<std::uint64_t>>>(std::move(binom));

  auto values = std::make_shared<std::vector<std::uint8_t>>(total, 0);
  detail::for_each_subset(ground_set(window), depth, [&](const FinSet& s) {
    Color c = f(s);
    if (c >= colors) {
      throw Error(ErrorCode::InvalidArray, "value " + std::to_string(c) + " on " + s.str() +
                                               " is not below colors=" + std::to_string(colors));
    }
    (*values)[a.slot(s)] = static_cast<std::uint8_t>(c);
    return true;
  });
  a.values_ = std::move(values);
  return a;
}

StabilizingArray StabilizingArray::constant(std::uint32_t window, std::size_t depth,
                                            std::size_t guard, std::uint32_t colors, Color value) {
  return general(window, depth, guard, colors, [value](const FinSet&) { return value; });
}

std::uint64_t StabilizingArray::slot(const FinSet& s) const {
  const auto& binom = *binom_;
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i) rank += binom[s[i]][i + 1];
  return offsets_[s.size()] + rank;
}

Color StabilizingArray::value(const FinSet& s) const {
  if (!s.empty() && s.max() >= window_) {
    throw Error(ErrorCode::OutOfRange, s.str() + " leaves the window of size " + std::to_string(window_));
  }
  if (uniform_) {
    if (s.size() < depth_) {
      throw Error(ErrorCode::OutOfRange, "uniform array of depth " + std::to_string(depth_) +
                                             " is undefined on " + s.str());
    }
    return (*values_)[slot(s.size() == depth_ ? s : s.prefix(depth_))];
  }
  if (s.size() > depth_) {
    throw Error(ErrorCode::OutOfRange, s.str() + " is longer than the array depth " + std::to_string(depth_));
  }
  return (*values_)[slot(s)];
}

std::optional<FinSet> StabilizingArray::certificate_violation() const {
  if (uniform_) return std::nullopt;
  std::optional<FinSet> bad;
  const auto ground = ground_set(window_);
  for (std::size_t k = depth_ - guard_ + 1; k <= depth_ && !bad; ++k) {
    detail::for_each_subset(ground, k, [&](const FinSet& t) {
      if (value(t) == value(t.prefix(k - 1))) return true;
      bad = t;
      return false;
    });
  }
  return bad;
}

void StabilizingArray::validate() const {
  if (auto bad = certificate_violation()) {
    throw Error(ErrorCode::NotStabilized, "array is not stable from level " +
                                              std::to_string(depth_ - guard_) + " on: value at " +
                                              bad->str() + " differs from its predecessor");
  }
}

std::vector<std::pair<FinSet, Color>> StabilizingArray::entries() const {
  std::vector<std::pair<FinSet, Color>> out;
  const auto ground = ground_set(window_);
  for (std::size_t k = min_length(); k <= depth_; ++k) {
    detail::for_each_subset(ground, k, [&](const FinSet& s) {
      out.emplace_back(s, value(s));
      return true;
    });
  }
  return out;
}

Color fbar(const StabilizingArray& array, const FinSet& x) {
  const std::size_t depth = array.limit_depth();
  if (x.size() < depth) {
    throw Error(ErrorCode::OutOfRange, x.str() + " has fewer than " + std::to_string(depth) +
                                           " elements; the limit is not determined");
  }
  const Color v = array.value(x.prefix(depth));
  if (array.is_uniform()) return v;
  for (std::size_t k = depth + 1; k <= std::min(x.size(), array.depth()); ++k) {
    if (array.value(x.prefix(k)) != v) {
      throw Error(ErrorCode::NotStabilized, "values along the prefixes of " + x.str() +
                                                " do not settle within the guard");
    }
  }
  return v;
}

StabilizingArray read_array(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::InvalidArray, "line " + std::to_string(line_no) + ": " + what);
  };
  auto strip = [](std::string s) {
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    return s;
  };

  std::map<std::string, std::uint64_t> header;
  bool have_header = false;
  std::map<FinSet, Color> table;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip(line));
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;

    auto number = [&](const std::string& w) -> std::uint64_t {
      if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos || w.size() > 18) {
        throw fail("expected a natural number, got '" + w + "'");
      }
      return std::stoull(w);
    };

    if (!have_header) {
      if (words.size() % 2 != 0) throw fail("header must be keyword/value pairs");
      for (std::size_t i = 0; i < words.size(); i += 2) {
        const auto& key = words[i];
        if (key != "window" && key != "depth" && key != "guard" && key != "colors" && key != "uniform") {
          throw fail("unknown header keyword '" + key + "'");
        }
        if (!header.emplace(key, number(words[i + 1])).second) throw fail("duplicate keyword '" + key + "'");
      }
      for (const char* key : {"window", "depth", "guard", "colors"}) {
        if (!header.count(key)) throw fail(std::string("header is missing '") + key + "'");
      }
      have_header = true;
      continue;
    }
    if (words.size() == 2 && words[0] == "uniform" && !header.count("uniform") && table.empty()) {
      header["uniform"] = number(words[1]);
      continue;
    }
    std::vector<FinSet::value_type> elems;
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      auto n = number(words[i]);
      if (n >= header["window"]) throw fail("element " + words[i] + " is outside the window");
      if (!elems.empty() && elems.back() >= n) throw fail("subset must be strictly increasing");
      elems.push_back(static_cast<FinSet::value_type>(n));
    }
    auto value = number(words.back());
    if (value >= header["colors"]) throw fail("value " + words.back() + " is not below colors");
    FinSet s(std::move(elems));
    if (!table.emplace(s, static_cast<Color>(value)).second) throw fail("duplicate entry for " + s.str());
  }
  if (!have_header) throw Error(ErrorCode::InvalidArray, "missing header line");

  const auto window = static_cast<std::uint32_t>(header["window"]);
  const auto depth = static_cast<std::size_t>(header["depth"]);
  const auto guard = static_cast<std::size_t>(header["guard"]);
  const auto colors = static_cast<std::uint32_t>(header["colors"]);
  auto lookup = [&](const FinSet& s) -> Color {
    auto it = table.find(s);
    if (it == table.end()) throw Error(ErrorCode::InvalidArray, "missing value for " + s.str());
    return it->second;
  };

  if (header.count("uniform")) {
    if (header["uniform"] != depth) {
      throw Error(ErrorCode::InvalidArray, "uniform depth must equal the declared depth");
    }
    for (const auto& [s, v] : table) {
      if (s.size() != depth) {
        throw Error(ErrorCode::InvalidArray, "uniform array lists " + s.str() + ", which is not a " +
                                                 std::to_string(depth) + "-subset");
      }
    }
    auto a = StabilizingArray::uniform(window, depth, colors, lookup);
    return a;
  }
  for (const auto& [s, v] : table) {
    if (s.size() > depth) throw Error(ErrorCode::InvalidArray, s.str() + " is longer than depth");
  }
  return StabilizingArray::general(window, depth, guard, colors, lookup);
}

StabilizingArray read_array_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArray, "cannot open array file " + path);
  return read_array(in);
}

void write_array(std::ostream& out, const StabilizingArray& array) {
  out << "window " << array.window() << " depth " << array.depth() << " guard " << array.guard()
      << " colors " << array.colors();
  if (array.is_uniform()) out << " uniform " << array.depth();
  out << '\n';
  for (const auto& [s, v] : array.entries()) {
    for (auto x : s) out << x << ' ';
    out << v << '\n';
  }
}

}  // namespace ordcomb
