#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "minpres/errors.hpp"

namespace minpres {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Canonical form stores no zero parts, so equality is sequence equality
/// and partitions can key sparse maps directly.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
        throw ParseError("not a partition: parts must be weakly decreasing and positive");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  /// Row length, 0 beyond the last row (rows are 0-indexed).
  int part(std::size_t row) const {
    return row < parts_.size() ? parts_[row] : 0;
  }

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Number of cells of the Young diagram.
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Transpose of the Young diagram.
  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj));
  }

  /// Diagram containment: inner_k <= this_k for every row.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t k = 0; k < inner.length(); ++k)
      if (inner.parts_[k] > parts_[k]) return false;
    return true;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A rows x cols rectangle; the diagram b^a is Box{a, b}.
struct Box {
  int rows;
  int cols;

  Box(int rows_, int cols_) : rows(rows_), cols(cols_) {
    if (rows < 1 || cols < 1) throw PreconditionError("box sides must be >= 1");
  }

  bool operator==(const Box&) const = default;
};

inline bool fits(const Partition& p, const Box& box) {
  return static_cast<int>(p.length()) <= box.rows && p.part(0) <= box.cols;
}

/// The canonical enumeration and rendering order: by size, then by parts
/// lexicographically descending.  Within one degree this lists, e.g.,
/// [3,1] before [2,2] before [2,1,1].
struct GradedOrder {
  bool operator()(const Partition& x, const Partition& y) const {
    int sx = x.size(), sy = y.size();
    if (sx != sy) return sx < sy;
    return std::lexicographical_compare(y.parts().begin(), y.parts().end(),
                                        x.parts().begin(), x.parts().end());
  }
};

namespace detail {

inline void gen_in_box(int max_rows, int max_part, int remaining_exact,
                       bool exact, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (!exact || remaining_exact == 0) out.push_back(Partition(cur));
  if (max_rows == 0) return;
  int hi = max_part;
  if (exact) hi = std::min(hi, remaining_exact);
  for (int p = hi; p >= 1; --p) {
    if (exact && remaining_exact - p > (max_rows - 1) * p) continue;
    cur.push_back(p);
    gen_in_box(max_rows - 1, p, remaining_exact - p, exact, cur, out);
    cur.pop_back();
  }
}

// Per-(box, size) enumerations are cached process-wide.
inline const std::vector<Partition>& cached_box_enum(int rows, int cols,
                                                     int size /* -1 = all */) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<Partition>> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_tuple(rows, cols, size);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  if (size < 0 || size <= rows * cols) {
    std::vector<int> cur;
    gen_in_box(rows, cols, size < 0 ? 0 : size, size >= 0, cur, out);
  }
  std::sort(out.begin(), out.end(), GradedOrder{});
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/// All partitions with at most box.rows rows and parts at most box.cols,
/// optionally filtered to one size; GradedOrder throughout.
inline std::vector<Partition> partitions_in_box(
    const Box& box, std::optional<int> size = std::nullopt) {
  return detail::cached_box_enum(box.rows, box.cols, size ? *size : -1);
}

/// All partitions of n, in GradedOrder.
inline std::vector<Partition> partitions_of(int n) {
  if (n == 0) return {Partition{}};
  return detail::cached_box_enum(n, n, n);
}

/// All subdiagrams lambda of nu, optionally of a fixed size, in GradedOrder.
inline std::vector<Partition> subpartitions(
    const Partition& nu, std::optional<int> size = std::nullopt) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t row, int prev, int left) -> void {
    if (!size || left == 0) out.push_back(Partition(cur));
    if (row >= nu.length()) return;
    int hi = std::min(prev, nu.part(row));
    if (size) hi = std::min(hi, left);
    for (int p = hi; p >= 1; --p) {
      cur.push_back(p);
      self(self, row + 1, p, left - p);
      cur.pop_back();
    }
  };
  rec(rec, 0, nu.part(0), size ? *size : 0);
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

/// The partition (width^height, tail): a height x width rectangle stacked on
/// top of tail.  Requires tail to be no wider than the rectangle.
inline Partition stack_rectangle(int width, int height, const Partition& tail) {
  if (width < 1 || height < 1)
    throw PreconditionError("stack_rectangle: rectangle sides must be >= 1");
  if (tail.part(0) > width)
    throw PreconditionError("stack_rectangle: tail is wider than the rectangle");
  std::vector<int> parts(static_cast<std::size_t>(height), width);
  parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
  return Partition(std::move(parts));
}

/// Text form used by the CLI and JSON output: "[3,1]"; "[]" for the empty
/// partition.
inline std::string to_text(const Partition& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.length(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.parts()[k]);
  }
  return s + "]";
}

inline Partition parse_partition(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("partition must look like [3,1] or []: got '" +
                     std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    int value = 0;
    std::size_t k = pos;
    if (k == end) throw ParseError("empty entry in partition '" + std::string(text) + "'");
    for (; k < end; ++k) {
      char c = body[k];
      if (c < '0' || c > '9')
        throw ParseError("bad character in partition '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw ParseError("partition part out of range");
    }
    parts.push_back(value);
    pos = end + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const ParseError&) {
    throw ParseError("parts must be weakly decreasing in '" + std::string(text) + "'");
  }
}

}  // namespace minpres
