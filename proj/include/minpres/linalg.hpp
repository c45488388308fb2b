#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "minpres/errors.hpp"
#include "minpres/numeric.hpp"

namespace minpres {

/// Dense matrix over the rationals; all elimination stays in Q.
struct RationalMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> rows;

  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t cols_) : cols(cols_) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(n);
      row[i] = 1;
      m.rows.push_back(std::move(row));
    }
    return m;
  }

  void add_row(std::vector<Rational> row) {
    if (row.size() != cols) throw PreconditionError("row width mismatch");
    rows.push_back(std::move(row));
  }

  std::size_t row_count() const { return rows.size(); }

  RationalMatrix transposed() const {
    RationalMatrix t(rows.size());
    t.rows.assign(cols, std::vector<Rational>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) t.rows[j][i] = rows[i][j];
    return t;
  }
};

namespace detail {

// Reduced row echelon form in place.  Pivot choice is the first nonzero
// entry in column order, so results are reproducible.  When track is
// non-null it receives the same row operations (starting from identity),
// giving E with E * original = rref.
inline std::vector<std::size_t> rref(RationalMatrix& m, RationalMatrix* track) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols && pivot_row < m.rows.size(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.rows.size() && m.rows[found][c] == 0) ++found;
    if (found == m.rows.size()) continue;
    std::swap(m.rows[pivot_row], m.rows[found]);
    if (track) std::swap(track->rows[pivot_row], track->rows[found]);
    Rational inv = m.rows[pivot_row][c];
    for (auto& x : m.rows[pivot_row]) x /= inv;
    if (track)
      for (auto& x : track->rows[pivot_row]) x /= inv;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (r == pivot_row || m.rows[r][c] == 0) continue;
      Rational factor = m.rows[r][c];
      for (std::size_t j = 0; j < m.cols; ++j)
        m.rows[r][j] -= factor * m.rows[pivot_row][j];
      if (track)
        for (std::size_t j = 0; j < track->cols; ++j)
          track->rows[r][j] -= factor * track->rows[pivot_row][j];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) {
  return detail::rref(m, nullptr).size();
}

/// Result of solving M x = rhs.  On failure, witness is y with yT M = 0 and
/// yT rhs != 0, certifying inconsistency.
struct Solution {
  bool consistent = false;
  std::vector<Rational> x;
  std::vector<Rational> witness;
};

inline Solution solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows.size())
    throw PreconditionError("solve: rhs length must equal the row count");
  RationalMatrix a = m;
  RationalMatrix e = RationalMatrix::identity(m.rows.size());
  auto pivots = detail::rref(a, &e);
  std::vector<Rational> b(rhs.size());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    Rational acc = 0;
    for (std::size_t k = 0; k < rhs.size(); ++k) acc += e.rows[r][k] * rhs[k];
    b[r] = acc;
  }
  for (std::size_t r = pivots.size(); r < a.rows.size(); ++r) {
    if (b[r] != 0) {
      Solution s;
      s.consistent = false;
      s.witness = e.rows[r];
      return s;
    }
  }
  Solution s;
  s.consistent = true;
  s.x.assign(m.cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = b[r];
  return s;
}

/// Decides whether v lies in the row span of M.  On success coeffs satisfies
/// sum_i coeffs[i] * row_i = v exactly; on failure witness is y with M y = 0
/// and v . y != 0.
struct SpanResult {
  bool in_span = false;
  std::vector<Rational> coeffs;
  std::vector<Rational> witness;
};

inline SpanResult in_row_span(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols) throw PreconditionError("in_row_span: dimension mismatch");
  Solution s = solve(m.transposed(), v);
  SpanResult r;
  r.in_span = s.consistent;
  if (s.consistent)
    r.coeffs = std::move(s.x);
  else
    r.witness = std::move(s.witness);
  return r;
}

/// Exact check that sum_i coeffs[i] * row_i = v; used to verify certificates.
inline bool combination_matches(const RationalMatrix& m,
                                const std::vector<Rational>& coeffs,
                                const std::vector<Rational>& v) {
  if (coeffs.size() != m.rows.size() || v.size() != m.cols) return false;
  for (std::size_t j = 0; j < m.cols; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < m.rows.size(); ++i) acc += coeffs[i] * m.rows[i][j];
    if (acc != v[j]) return false;
  }
  return true;
}

}  // namespace minpres
