#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "minpres/errors.hpp"
#include "minpres/numeric.hpp"
#include "minpres/partition.hpp"

namespace minpres {

namespace detail {

struct Cell {
  int row;
  int col;
};

// Cells of nu/lambda in reverse reading order: rows top to bottom, within a
// row right to left.  Filling in this order makes the sequence of entries
// exactly the reverse reading word.
inline std::vector<Cell> skew_cells(const Partition& nu, const Partition& la) {
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nu.length(); ++r)
    for (int c = nu.part(r) - 1; c >= la.part(r); --c)
      cells.push_back({static_cast<int>(r), c});
  return cells;
}

}  // namespace detail

/// The Littlewood--Richardson coefficient computed directly from the
/// tableau rule: skew semistandard fillings of nu/lambda with content mu
/// whose reverse reading word is a lattice word.  Backtracking with
/// row/column/lattice pruning; no memoization (see LrTable for that).
inline Int lr_coefficient_direct(const Partition& la, const Partition& mu,
                                 const Partition& nu) {
  if (nu.size() != la.size() + mu.size()) return 0;
  if (!nu.contains(la) || !nu.contains(mu)) return 0;
  if (mu.empty()) return 1;  // nu == la at this point

  auto cells = detail::skew_cells(nu, la);
  const int values = static_cast<int>(mu.length());
  std::vector<int> remaining(static_cast<std::size_t>(values));
  for (int e = 0; e < values; ++e) remaining[e] = mu.part(e);
  std::vector<int> placed(static_cast<std::size_t>(values), 0);
  // grid[r][c] holds the entry at (r,c); 0 where unfilled / outside.
  std::vector<std::vector<int>> grid(nu.length());
  for (std::size_t r = 0; r < nu.length(); ++r)
    grid[r].assign(static_cast<std::size_t>(nu.part(r)), 0);

  Int count = 0;
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[at];
    // Entry must be <= the cell to its right (filled first) and > the cell
    // above (previous row).
    int hi = (c + 1 < nu.part(r)) ? grid[r][static_cast<std::size_t>(c) + 1] : values;
    int lo = (r > 0 && c >= la.part(static_cast<std::size_t>(r) - 1))
                 ? grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1
                 : 1;
    for (int e = lo; e <= hi; ++e) {
      if (remaining[e - 1] == 0) continue;
      if (e > 1 && placed[e - 1] >= placed[e - 2]) continue;  // lattice word
      --remaining[e - 1];
      ++placed[e - 1];
      grid[r][static_cast<std::size_t>(c)] = e;
      self(self, at + 1);
      grid[r][static_cast<std::size_t>(c)] = 0;
      --placed[e - 1];
      ++remaining[e - 1];
    }
  };
  rec(rec, 0);
  return count;
}

/// Memoized Littlewood--Richardson coefficients.  The cache key sorts the
/// two lower partitions, exploiting commutativity; reads and writes are
/// mutex-guarded so concurrent engine workers share one table.
class LrTable {
 public:
  Int coefficient(const Partition& la, const Partition& mu,
                  const Partition& nu) const {
    const bool swap = mu < la;
    Key key{swap ? mu : la, swap ? la : mu, nu};
    {
      std::scoped_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Int value = lr_coefficient_direct(la, mu, nu);
    std::scoped_lock lock(mutex_);
    return cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  std::size_t entries() const {
    std::scoped_lock lock(mutex_);
    return cache_.size();
  }

 private:
  using Key = std::tuple<Partition, Partition, Partition>;
  mutable std::mutex mutex_;
  mutable std::map<Key, Int> cache_;
};

inline LrTable& lr_table() {
  static LrTable table;
  return table;
}

inline Int lr_coefficient(const Partition& la, const Partition& mu,
                          const Partition& nu) {
  return lr_table().coefficient(la, mu, nu);
}

inline constexpr int kDefaultPictureCellLimit = 10;

/// The same coefficient counted as pictures between nu/lambda and mu: a
/// bijection of boxes such that whenever A is weakly above and weakly left
/// of B in either diagram, the partners of A and B appear in that order in
/// the other diagram's reverse row numbering.  This is a raw bijection
/// search, kept as an independent small-instance oracle.
inline Int lr_via_pictures(const Partition& la, const Partition& mu,
                           const Partition& nu,
                           int cell_limit = kDefaultPictureCellLimit) {
  if (nu.size() != la.size() + mu.size() || !nu.contains(la)) return 0;
  auto left = detail::skew_cells(nu, la);
  auto right = detail::skew_cells(mu, Partition{});
  if (static_cast<int>(left.size()) > cell_limit)
    throw InstanceTooLargeError(
        "picture enumeration refused: " + std::to_string(left.size()) +
        " cells exceeds the limit of " + std::to_string(cell_limit));
  if (left.size() != right.size()) return 0;
  if (left.empty()) return 1;

  auto weakly_nw = [](const detail::Cell& a, const detail::Cell& b) {
    return a.row <= b.row && a.col <= b.col;
  };
  const std::size_t n = left.size();
  std::vector<int> target(n, -1);
  std::vector<bool> used(n, false);
  Int count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const std::size_t tk = static_cast<std::size_t>(target[k]);
        // Map direction: order constraints inside the left diagram.
        if (weakly_nw(left[k], left[i]) && !(tk < t)) ok = false;
        if (weakly_nw(left[i], left[k]) && !(t < tk)) ok = false;
        // Inverse direction: t's partner comes later than tk's.
        if (weakly_nw(right[t], right[tk])) ok = false;
      }
      if (!ok) continue;
      used[t] = true;
      target[i] = static_cast<int>(t);
      self(self, i + 1);
      target[i] = -1;
      used[t] = false;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace minpres
