#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minpres/errors.hpp"
#include "minpres/linalg.hpp"
#include "minpres/littlewood_richardson.hpp"
#include "minpres/numeric.hpp"
#include "minpres/parallel.hpp"
#include "minpres/partition.hpp"
#include "minpres/schur.hpp"

namespace minpres {

/// Desk-scale resource guard.  Rank and LR growth are combinatorial in the
/// box, so oversized instances are refused unless forced.
struct Guard {
  bool force = false;
  int max_box_cols = 8;   // refuse when n - r exceeds this
  int max_cells = 40;     // refuse when i*j + a*b exceeds this
};

/// The parameter pack phi = (n, r, i, j, a, b, N) under which the syzygy
/// question is posed.  Construct through make_valid_tuple.
struct ValidTuple {
  int n, r, i, j, a, b, N;

  Box quotient_box() const { return Box(r, n - r); }        // (n-r)^r
  Box generator_box() const { return Box(a, b); }           // b^a
  Box strip_box() const { return Box(j, n - r - i); }       // (n-r-i)^j

  bool operator==(const ValidTuple&) const = default;
};

inline std::vector<std::string> tuple_violations(long long n, long long r,
                                                 long long i, long long j,
                                                 long long a, long long b,
                                                 long long N) {
  std::vector<std::string> bad;
  auto require = [&](bool ok, const std::string& name) {
    if (!ok) bad.push_back(name);
  };
  require(n >= 1 && r >= 1 && i >= 1 && j >= 1 && a >= 1 && b >= 1 && N >= 1,
          "all entries >= 1");
  require(r < n, "r < n");
  require(a + j <= r, "a+j <= r");
  require(a + i <= n - r, "a+i <= n-r");
  require(b <= i, "b <= i");
  require(b <= j, "b <= j");
  require(N <= a * b, "N <= a*b");
  return bad;
}

inline ValidTuple make_valid_tuple(int n, int r, int i, int j, int a, int b, int N) {
  auto bad = tuple_violations(n, r, i, j, a, b, N);
  if (!bad.empty()) throw InvalidTupleError(std::move(bad));
  return ValidTuple{n, r, i, j, a, b, N};
}

inline void guard_check(int box_cols, int cells, const Guard& guard) {
  if (guard.force) return;
  if (box_cols > guard.max_box_cols)
    throw GuardError("guard exceeded: box side " + std::to_string(box_cols) + " > " +
                     std::to_string(guard.max_box_cols) + " (use force to override)");
  if (cells > guard.max_cells)
    throw GuardError("guard exceeded: i*j + a*b = " + std::to_string(cells) + " > " +
                     std::to_string(guard.max_cells) + " (use force to override)");
}

inline void guard_check(const ValidTuple& phi, const Guard& guard) {
  guard_check(phi.n - phi.r, phi.i * phi.j + phi.a * phi.b, guard);
}

// ---------------------------------------------------------------------------
// Bigrassmannian parameters and the generating set.

struct BigrassmannianParams {
  int i, j, a, b;
  bool operator==(const BigrassmannianParams&) const = default;
};

inline void check_bigrassmannian_indices(int r, int s, int t, int n) {
  std::vector<std::string> bad;
  if (!(1 <= t && t <= r && t <= s)) bad.push_back("1 <= t <= r,s");
  if (!(r <= n && s <= n)) bad.push_back("r,s <= n");
  if (!(t > r + s - n)) bad.push_back("t > r+s-n");
  if (!bad.empty()) throw InvalidTupleError(std::move(bad));
}

inline BigrassmannianParams params_from_bigrassmannian(int r, int s, int t, int n) {
  check_bigrassmannian_indices(r, s, t, n);
  int i = s - t + 1;
  int j = r - t + 1;
  int a = std::min(n - r - i, r - j);
  int b = std::min(i, j);
  return {i, j, a, b};
}

/// The generating set {(i^j, lambda) : lambda inside b^a}, in enumeration
/// order; C(a+b, a) elements.  When a = 0 (the degenerate case i = n-r or
/// j = r) the list collapses to the single rectangle i^j.
inline std::vector<Partition> generator_set(int r, int s, int t, int n) {
  auto [i, j, a, b] = params_from_bigrassmannian(r, s, t, n);
  if (a == 0) return {stack_rectangle(i, j, Partition{})};
  std::vector<Partition> out;
  for (const auto& la : partitions_in_box(Box(a, b)))
    out.push_back(stack_rectangle(i, j, la));
  return out;
}

// ---------------------------------------------------------------------------
// Allowable and decomposable partitions.

/// Partitions nu with i^j inside nu inside (n-r)^r and |nu| = ij + N.
inline std::vector<Partition> allowable_partitions(const ValidTuple& phi) {
  Partition rect = stack_rectangle(phi.i, phi.j, Partition{});
  std::vector<Partition> out;
  for (const auto& nu : partitions_in_box(phi.quotient_box(), phi.i * phi.j + phi.N))
    if (nu.contains(rect)) out.push_back(nu);
  return out;
}

inline bool is_allowable(const ValidTuple& phi, const Partition& nu) {
  return nu.size() == phi.i * phi.j + phi.N && fits(nu, phi.quotient_box()) &&
         nu.contains(stack_rectangle(phi.i, phi.j, Partition{}));
}

/// The three-piece decomposition of an allowable partition: nu_R is what the
/// first j rows carry beyond the i^j rectangle, nu_B is everything below.
/// tall means nu_1 = i, i.e. nu_R is empty.
struct Decomposition {
  Partition nu_b;  // inside b^a
  Partition nu_r;  // inside (n-r-i)^j
  bool tall = false;

  bool operator==(const Decomposition&) const = default;
};

/// Splits an allowable nu, or returns nullopt when nu is not decomposable
/// (row j+1 wider than b, or more than j+a rows).
inline std::optional<Decomposition> decompose(const ValidTuple& phi, const Partition& nu) {
  if (!is_allowable(phi, nu))
    throw PreconditionError("decompose: partition is not allowable for this tuple");
  if (nu.part(static_cast<std::size_t>(phi.j)) > phi.b) return std::nullopt;
  if (static_cast<int>(nu.length()) > phi.j + phi.a) return std::nullopt;
  std::vector<int> top, bottom;
  for (int k = 0; k < phi.j; ++k) top.push_back(nu.part(static_cast<std::size_t>(k)) - phi.i);
  for (std::size_t k = static_cast<std::size_t>(phi.j); k < nu.length(); ++k)
    bottom.push_back(nu.part(k));
  Decomposition dec{Partition(std::move(bottom)), Partition(std::move(top)), false};
  dec.tall = dec.nu_r.empty();
  return dec;
}

/// Inverse of decompose: rebuilds nu from its pieces under phi.
inline Partition compose(const ValidTuple& phi, const Decomposition& dec) {
  std::vector<int> parts;
  for (int k = 0; k < phi.j; ++k)
    parts.push_back(phi.i + dec.nu_r.part(static_cast<std::size_t>(k)));
  for (int p : dec.nu_b.parts()) parts.push_back(p);
  return Partition(std::move(parts));
}

/// All decomposable partitions with their decompositions, in enumeration
/// order.
inline std::vector<std::pair<Partition, Decomposition>> decomposables(const ValidTuple& phi) {
  std::vector<std::pair<Partition, Decomposition>> out;
  for (const auto& nu : allowable_partitions(phi))
    if (auto dec = decompose(phi, nu)) out.emplace_back(nu, *dec);
  return out;
}

// ---------------------------------------------------------------------------
// Linear forms.

/// One equation of the decomposable system: the coefficient of the variable
/// A_{lambda,theta} is the LR coefficient of ((i^j,lambda), theta) at nu.
struct LinearForm {
  std::map<PartitionPair, Int, PairGradedOrder> coeffs;
  Partition label;  // the nu this row came from
  bool tall = false;

  bool operator==(const LinearForm&) const = default;
};

inline LinearForm linear_form(const ValidTuple& phi, const Partition& nu) {
  auto dec = decompose(phi, nu);
  if (!dec) throw PreconditionError("linear_form: partition is not decomposable");
  LinearForm f;
  f.label = nu;
  f.tall = dec->tall;
  for (const auto& la : partitions_in_box(phi.generator_box())) {
    if (la.size() >= phi.N) continue;
    Partition gen = stack_rectangle(phi.i, phi.j, la);
    for (const auto& theta : partitions_in_box(phi.quotient_box(), phi.N - la.size())) {
      Int c = lr_coefficient(gen, theta, nu);
      if (c != 0) f.coeffs.emplace(PartitionPair{la, theta}, std::move(c));
    }
  }
  return f;
}

/// The T-image of a form: A_{lambda,theta} -> s_lambda (x) s_theta.
inline TensorElement tensor_of_linear_form(const LinearForm& f, const Box& box) {
  TensorElement t(box);
  for (const auto& [key, c] : f.coeffs) t.add(key.first, key.second, c);
  return t;
}

/// The CP route to the same tensor: CP(s_{nu_B} (x) s_{nu_R}) expanded in the
/// box quotient.  Equality with tensor_of_linear_form(linear_form(...)) is a
/// tested identity, not an assumption.
inline TensorElement tensor_of_form(const ValidTuple& phi, const Partition& nu) {
  auto dec = decompose(phi, nu);
  if (!dec) throw PreconditionError("tensor_of_form: partition is not decomposable");
  std::vector<Partition> factors;
  if (!dec->nu_r.empty()) factors.push_back(dec->nu_r);
  return expand_formal_tensor(cp_map(dec->nu_b, factors, phi.quotient_box()));
}

// ---------------------------------------------------------------------------
// The CP reduction.

struct ReduceOptions {
  enum class Order { deterministic, random };
  Order order = Order::deterministic;
  std::uint64_t seed = 0;
  /// Forced first eliminations (consumed in order before the strategy kicks
  /// in); each must name a live term.
  std::vector<FormalKey> forced;
  bool record_trace = false;
};

struct ReduceStep {
  FormalKey chosen;
  Int gamma;
  FormalTensor state;  // xi after this elimination
};

struct ReduceResult {
  FormalTensor initial;   // xi(0)
  FormalTensor terminal;  // the fixed point, left factors all empty
  TensorElement expanded;
  int steps = 0;
  std::vector<ReduceStep> trace;  // populated when record_trace
};

namespace detail {

// Deterministic elimination rule: maximal |left|, then reverse-lexicographic
// greatest left, then least factor multiset.
inline bool better_candidate(const FormalKey& x, const FormalKey& y) {
  if (x.left.size() != y.left.size()) return x.left.size() > y.left.size();
  if (x.left != y.left)
    return std::lexicographical_compare(y.left.parts().begin(), y.left.parts().end(),
                                        x.left.parts().begin(), x.left.parts().end());
  return std::lexicographical_compare(x.factors.begin(), x.factors.end(),
                                      y.factors.begin(), y.factors.end(), GradedOrder{});
}

}  // namespace detail

/// Algorithm: start from CP(s_{nu_B} (x) 1) and repeatedly eliminate a term
/// with nonempty left factor by subtracting gamma * CP(term), keeping right
/// products unexpanded.  Terminates because each elimination replaces a term
/// by terms with strictly smaller left factors; the terminal state and its
/// expansion are independent of the elimination order.
inline ReduceResult reduce_tall(const ValidTuple& phi, const Partition& nu,
                                const ReduceOptions& options = {}) {
  auto dec = decompose(phi, nu);
  if (!dec) throw PreconditionError("reduce_tall: partition is not decomposable");
  if (!dec->tall) throw PreconditionError("reduce_tall: partition is not tall");
  const Box box = phi.quotient_box();

  ReduceResult result{FormalTensor(box), FormalTensor(box), TensorElement(box), 0, {}};
  FormalTensor xi = cp_map(dec->nu_b, {}, box);
  result.initial = xi;
  std::mt19937_64 rng(options.seed);
  std::size_t forced_at = 0;

  while (true) {
    std::vector<FormalKey> candidates;
    for (const auto& [key, c] : xi.terms)
      if (!key.left.empty()) candidates.push_back(key);
    if (candidates.empty()) break;

    FormalKey chosen = candidates.front();
    if (forced_at < options.forced.size()) {
      chosen = options.forced[forced_at++];
      if (xi.coefficient(chosen) == 0)
        throw PreconditionError("reduce_tall: forced term is not present: " + to_text(chosen));
    } else if (options.order == ReduceOptions::Order::random) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      chosen = candidates[pick(rng)];
    } else {
      for (const auto& key : candidates)
        if (detail::better_candidate(key, chosen)) chosen = key;
    }

    Int gamma = xi.coefficient(chosen);
    FormalTensor delta = cp_map(chosen.left, chosen.factors, box);
    for (const auto& [key, c] : delta.terms) xi.add(key, -gamma * c);
    if (xi.coefficient(chosen) != 0)
      throw std::logic_error("reduce_tall: eliminated term failed to cancel");
    ++result.steps;
    if (options.record_trace) result.trace.push_back({chosen, gamma, xi});
    if (result.steps > 1'000'000)
      throw std::logic_error("reduce_tall: runaway iteration");
  }

  result.terminal = xi;
  result.expanded = expand_formal_tensor(xi);
  return result;
}

/// The closed form the reduction must reach: (-1)^{N+1} (1 (x) s_{nu_B'}).
inline TensorElement reduce_closed_form(const ValidTuple& phi, const Partition& nu) {
  auto dec = decompose(phi, nu);
  if (!dec || !dec->tall) throw PreconditionError("reduce_closed_form: not a tall partition");
  TensorElement t(phi.quotient_box());
  t.add(Partition{}, dec->nu_b.conjugate(), dec->nu_b.size() % 2 == 0 ? Int(-1) : Int(1));
  return t;
}

// ---------------------------------------------------------------------------
// The decomposable system and the span certificate.

struct DecomposableSystem {
  ValidTuple phi;
  std::vector<PartitionPair> variables;  // (lambda, theta) column order
  std::vector<LinearForm> rows;          // one per decomposable nu, in order
  std::vector<std::size_t> tall_rows;
  std::vector<std::size_t> wide_rows;

  std::vector<Rational> row_vector(std::size_t k) const {
    std::vector<Rational> v(variables.size(), Rational(0));
    const auto& form = rows[k];
    for (std::size_t c = 0; c < variables.size(); ++c) {
      auto it = form.coeffs.find(variables[c]);
      if (it != form.coeffs.end()) v[c] = Rational(it->second);
    }
    return v;
  }

  RationalMatrix matrix_of(const std::vector<std::size_t>& which) const {
    RationalMatrix m(variables.size());
    for (std::size_t k : which) m.add_row(row_vector(k));
    return m;
  }

  RationalMatrix full_matrix() const {
    std::vector<std::size_t> all(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) all[k] = k;
    return matrix_of(all);
  }
};

inline DecomposableSystem build_system(const ValidTuple& phi, const Guard& guard = {},
                                       int threads = 1) {
  guard_check(phi, guard);
  DecomposableSystem sys{phi, {}, {}, {}, {}};
  for (const auto& la : partitions_in_box(phi.generator_box())) {
    if (la.size() >= phi.N) continue;
    for (const auto& theta : partitions_in_box(phi.quotient_box(), phi.N - la.size()))
      sys.variables.emplace_back(la, theta);
  }
  auto decs = decomposables(phi);
  sys.rows.resize(decs.size());
  parallel_for(decs.size(), threads, [&](std::size_t k) {
    sys.rows[k] = linear_form(phi, decs[k].first);
  });
  for (std::size_t k = 0; k < sys.rows.size(); ++k)
    (sys.rows[k].tall ? sys.tall_rows : sys.wide_rows).push_back(k);
  return sys;
}

struct TallSpanCheck {
  Partition nu;
  bool in_span = false;
  std::vector<Rational> coeffs;   // over the wide rows, when in span
  std::vector<Rational> witness;  // separating kernel vector, when not
};

struct SpanCertificate {
  bool all_in_span = false;
  std::vector<Partition> wide_labels;
  std::vector<TallSpanCheck> checks;  // one per tall row, in row order
};

/// Decides whether every tall equation lies in the rational row span of the
/// wide equations, with explicit certificates.  A true verdict makes the
/// decomposable system with zero wide right sides and any nonzero tall right
/// side inconsistent, which is what rules out syzygies.
inline SpanCertificate tall_in_wide_span(const ValidTuple& phi, const Guard& guard = {},
                                         int threads = 1) {
  DecomposableSystem sys = build_system(phi, guard, threads);
  RationalMatrix wide = sys.matrix_of(sys.wide_rows);
  SpanCertificate cert;
  for (std::size_t k : sys.wide_rows) cert.wide_labels.push_back(sys.rows[k].label);
  cert.checks.resize(sys.tall_rows.size());
  parallel_for(sys.tall_rows.size(), threads, [&](std::size_t t) {
    std::size_t k = sys.tall_rows[t];
    std::vector<Rational> v = sys.row_vector(k);
    SpanResult res = in_row_span(wide, v);
    if (res.in_span && !combination_matches(wide, res.coeffs, v))
      throw std::logic_error("tall_in_wide_span: certificate failed verification");
    cert.checks[t] = TallSpanCheck{sys.rows[k].label, res.in_span, std::move(res.coeffs),
                                   std::move(res.witness)};
  });
  cert.all_in_span = std::all_of(cert.checks.begin(), cert.checks.end(),
                                 [](const TallSpanCheck& c) { return c.in_span; });
  return cert;
}

// ---------------------------------------------------------------------------
// Blow-up tuples and restriction.

/// The blow-up (4^q n, 2^q r, i, 2^q j, a, b, N); always valid again.
inline ValidTuple blowup_tuple(const ValidTuple& phi, int q) {
  if (q < 0) throw PreconditionError("blowup_tuple: q must be >= 0");
  if (q > 14) throw PreconditionError("blowup_tuple: q out of desk-scale range");
  long long n = (1LL << (2 * q)) * phi.n;
  long long r = (1LL << q) * phi.r;
  long long j = (1LL << q) * phi.j;
  if (n > 1'000'000'000LL) throw PreconditionError("blowup_tuple: blown-up n overflows");
  return make_valid_tuple(static_cast<int>(n), static_cast<int>(r), phi.i,
                          static_cast<int>(j), phi.a, phi.b, phi.N);
}

/// Smallest q with N <= min(2^q j, 4^q n - 2^q r - i).
inline int minimal_blowup_exponent(const ValidTuple& phi) {
  for (int q = 0;; ++q) {
    long long jq = (1LL << q) * phi.j;
    long long cols = (1LL << (2 * q)) * phi.n - (1LL << q) * phi.r - phi.i;
    if (phi.N <= std::min(jq, cols)) return q;
    if (q > 14) throw std::logic_error("minimal_blowup_exponent: no q found");
  }
}

/// The partition nu-hat in decomp of the blow-up with the same nu_B, nu_R.
inline Partition blowup_partition(const ValidTuple& phi, int q, const Partition& nu) {
  auto dec = decompose(phi, nu);
  if (!dec) throw PreconditionError("blowup_partition: partition is not decomposable");
  return compose(blowup_tuple(phi, q), *dec);
}

namespace detail {

inline bool is_blowup_of(const ValidTuple& hat, const ValidTuple& base) {
  if (hat.i != base.i || hat.a != base.a || hat.b != base.b || hat.N != base.N)
    return false;
  if (hat.r % base.r != 0) return false;
  long long factor = hat.r / base.r;
  if ((factor & (factor - 1)) != 0) return false;  // power of two
  return hat.j == factor * base.j && hat.n == factor * factor * base.n;
}

}  // namespace detail

/// Restriction of a blow-up row to the base tuple: coefficients of
/// A_{lambda,theta} with lambda outside b^a or theta outside (n-r-i)^j are
/// zeroed, and the row is re-labelled by the base partition.
inline LinearForm restrict_form(const LinearForm& f, const ValidTuple& phi_hat,
                                const ValidTuple& phi) {
  if (!detail::is_blowup_of(phi_hat, phi))
    throw PreconditionError("restrict_form: tuples are not related by a blow-up");
  auto dec = decompose(phi_hat, f.label);
  if (!dec) throw PreconditionError("restrict_form: form label is not decomposable");
  if (!fits(dec->nu_r, phi.strip_box()) && !dec->nu_r.empty())
    throw PreconditionError("restrict_form: label is not the blow-up of a base row");
  LinearForm out;
  out.label = compose(phi, *dec);
  out.tall = f.tall;
  const Box gen_box = phi.generator_box();
  const Box strip = phi.strip_box();
  for (const auto& [key, c] : f.coeffs)
    if (fits(key.first, gen_box) && fits(key.second, strip)) out.coeffs.emplace(key, c);
  return out;
}

// ---------------------------------------------------------------------------
// Direct minimality check.

struct GeneratorVerdict {
  Partition rho;        // the tail inside b^a
  Partition generator;  // (i^j, rho)
  bool essential = false;
  struct Term {
    Partition lambda;
    Partition theta;
    Rational coeff;
  };
  /// When redundant over Q: the explicit combination of products
  /// s_{(i^j,lambda)} * s_theta that reproduces the generator.
  std::vector<Term> combination;
};

struct MinimalityReport {
  int r = 0, s = 0, t = 0, n = 0;
  BigrassmannianParams params{};
  bool degenerate = false;  // a = 0: single generator, trivially minimal
  bool all_essential = false;
  std::vector<GeneratorVerdict> generators;
};

/// For each generator (i^j, rho), decides whether it lies in the rational
/// span, inside the degree-(ij+|rho|) slice of the box ring, of all products
/// of the other generators with arbitrary Schur factors of complementary
/// degree.  Rational non-membership certifies that no integral combination
/// exists either, i.e. the generator is essential.
inline MinimalityReport check_minimality_at(int n, int r, BigrassmannianParams params,
                                            const Guard& guard = {}, int threads = 1) {
  MinimalityReport report;
  report.n = n;
  report.r = r;
  report.params = params;
  const int i = params.i, j = params.j, a = params.a, b = params.b;

  if (a == 0) {
    report.degenerate = true;
    report.all_essential = true;
    GeneratorVerdict v;
    v.rho = Partition{};
    v.generator = stack_rectangle(i, j, Partition{});
    v.essential = true;
    report.generators.push_back(std::move(v));
    return report;
  }

  guard_check(n - r, i * j + a * b, guard);
  const Box qbox(r, n - r);
  const auto rhos = partitions_in_box(Box(a, b));
  report.generators.resize(rhos.size());

  std::size_t at = 0;
  while (at < rhos.size()) {
    const int N = rhos[at].size();
    std::size_t upto = at;
    while (upto < rhos.size() && rhos[upto].size() == N) ++upto;

    // Shared per degree: the Schur-basis slice and one row per product.
    const auto basis = partitions_in_box(qbox, i * j + N);
    std::map<Partition, std::size_t, GradedOrder> basis_index;
    for (std::size_t k = 0; k < basis.size(); ++k) basis_index.emplace(basis[k], k);

    struct ProductRow {
      Partition lambda, theta;
      std::vector<Rational> coords;
    };
    std::vector<ProductRow> products;
    for (const auto& la : partitions_in_box(Box(a, b))) {
      if (la.size() > N) continue;
      for (const auto& theta : partitions_in_box(qbox, N - la.size()))
        products.push_back({la, theta, {}});
    }
    parallel_for(products.size(), threads, [&](std::size_t k) {
      auto& row = products[k];
      SchurElement p = multiply(schur(stack_rectangle(i, j, row.lambda)),
                                schur(row.theta), qbox);
      row.coords.assign(basis.size(), Rational(0));
      for (const auto& [part, c] : p.coeffs) row.coords[basis_index.at(part)] = Rational(c);
    });

    parallel_for(upto - at, threads, [&](std::size_t offset) {
      const Partition& rho = rhos[at + offset];
      GeneratorVerdict verdict;
      verdict.rho = rho;
      verdict.generator = stack_rectangle(i, j, rho);

      RationalMatrix m(basis.size());
      std::vector<const ProductRow*> used;
      for (const auto& row : products) {
        if (row.lambda == rho) continue;
        m.add_row(row.coords);
        used.push_back(&row);
      }
      std::vector<Rational> v(basis.size(), Rational(0));
      v[basis_index.at(verdict.generator)] = 1;

      SpanResult res = in_row_span(m, v);
      verdict.essential = !res.in_span;
      if (res.in_span) {
        if (!combination_matches(m, res.coeffs, v))
          throw std::logic_error("check_minimality: combination failed verification");
        for (std::size_t k = 0; k < used.size(); ++k)
          if (res.coeffs[k] != 0)
            verdict.combination.push_back({used[k]->lambda, used[k]->theta, res.coeffs[k]});
      }
      report.generators[at + offset] = std::move(verdict);
    });
    at = upto;
  }

  report.all_essential =
      std::all_of(report.generators.begin(), report.generators.end(),
                  [](const GeneratorVerdict& g) { return g.essential; });
  return report;
}

inline MinimalityReport check_minimality(int r, int s, int t, int n,
                                         const Guard& guard = {}, int threads = 1) {
  MinimalityReport report =
      check_minimality_at(n, r, params_from_bigrassmannian(r, s, t, n), guard, threads);
  report.s = s;
  report.t = t;
  return report;
}

// ---------------------------------------------------------------------------
// Text rendering of the equation system.

inline std::string variable_text(const PartitionPair& v) {
  return "A(" + to_text(v.first) + "," + to_text(v.second) + ")";
}

inline std::string to_text(const LinearForm& f) {
  if (f.coeffs.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : f.coeffs)
    detail::append_term(s, s.empty(), c, variable_text(key));
  return s;
}

/// The system laid out as text, split into its tall and wide halves.
inline std::string render_system(const DecomposableSystem& sys) {
  std::string out;
  auto emit = [&](const std::vector<std::size_t>& which, const char* title) {
    out += title;
    out += ":\n";
    for (std::size_t k : which) {
      out += "  " + to_text(sys.rows[k].label) + ": " + to_text(sys.rows[k]) + "\n";
    }
  };
  emit(sys.tall_rows, "tall equations");
  emit(sys.wide_rows, "wide equations");
  return out;
}

}  // namespace minpres
