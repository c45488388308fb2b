#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minpres/linalg.hpp"

using namespace minpres;

namespace {

RationalMatrix from_ints(std::vector<std::vector<int>> rows) {
  RationalMatrix m(rows.empty() ? 0 : rows[0].size());
  for (auto& r : rows) {
    std::vector<Rational> row(r.begin(), r.end());
    m.add_row(std::move(row));
  }
  return m;
}

std::vector<Rational> vec(std::vector<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(rank(from_ints({{0, 0}, {0, 0}})) == 0);
  CHECK(rank(from_ints({{1, 0}, {0, 1}, {1, 1}})) == 2);
}

TEST_CASE("solve basics") {
  auto s = solve(from_ints({{1, 0}, {0, 1}}), vec({5, 7}));
  REQUIRE(s.consistent);
  CHECK(s.x == vec({5, 7}));

  auto bad = solve(from_ints({{1, 1}, {1, 1}}), vec({0, 1}));
  REQUIRE_FALSE(bad.consistent);
  // The witness certifies inconsistency: y^T M = 0 but y^T rhs != 0.
  Rational dot = bad.witness[0] * 0 + bad.witness[1] * 1;
  CHECK(dot != 0);
  CHECK(bad.witness[0] + bad.witness[1] == 0);

  auto frac = solve(from_ints({{2}}), vec({1}));
  REQUIRE(frac.consistent);
  CHECK(frac.x[0] == Rational(1, 2));
}

TEST_CASE("in_row_span basics") {
  auto yes = in_row_span(from_ints({{1, 0}, {0, 1}}), vec({1, 1}));
  REQUIRE(yes.in_span);
  CHECK(yes.coeffs == vec({1, 1}));

  auto no = in_row_span(from_ints({{1, 1}}), vec({1, 0}));
  REQUIRE_FALSE(no.in_span);
  // Witness y has M y = 0 and v . y != 0.
  CHECK(no.witness[0] + no.witness[1] == 0);
  CHECK(no.witness[0] != 0);
}

TEST_CASE("empty row sets span only zero") {
  RationalMatrix empty(3);
  CHECK_FALSE(in_row_span(empty, vec({0, 1, 0})).in_span);
  auto zero = in_row_span(empty, vec({0, 0, 0}));
  CHECK(zero.in_span);
  CHECK(zero.coeffs.empty());
}

TEST_CASE("certificates verify by re-multiplication") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    RationalMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Rational> row(cols);
      for (auto& x : row) x = entry(rng);
      m.add_row(std::move(row));
    }
    // A vector built from the rows must come back with a verified certificate.
    std::vector<Rational> v(cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r) {
      Rational coeff = entry(rng);
      for (std::size_t c = 0; c < cols; ++c) v[c] += coeff * m.rows[r][c];
    }
    auto res = in_row_span(m, v);
    REQUIRE(res.in_span);
    CHECK(combination_matches(m, res.coeffs, v));
  }
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    RationalMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Rational> row(cols);
      for (auto& x : row) x = entry(rng);
      m.add_row(std::move(row));
    }
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("verdicts survive row permutation and scaling") {
  auto m = from_ints({{2, 4, 1}, {0, 3, 5}});
  auto scaled = from_ints({{0, 6, 10}, {6, 12, 3}});  // swapped and scaled
  for (auto v : {vec({2, 7, 6}), vec({1, 0, 0}), vec({4, 8, 2})}) {
    CHECK(in_row_span(m, v).in_span == in_row_span(scaled, v).in_span);
  }
  auto s1 = solve(m, vec({1, 1}));
  auto s2 = solve(scaled, vec({0, 0}));
  CHECK(s1.consistent);
  CHECK(s2.consistent);
}

TEST_CASE("dimension mismatches are rejected") {
  auto m = from_ints({{1, 2}});
  CHECK_THROWS_AS(solve(m, vec({1, 2})), PreconditionError);
  CHECK_THROWS_AS(in_row_span(m, vec({1})), PreconditionError);
}
