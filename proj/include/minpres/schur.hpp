#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minpres/errors.hpp"
#include "minpres/littlewood_richardson.hpp"
#include "minpres/numeric.hpp"
#include "minpres/partition.hpp"

namespace minpres {

/// Element of the ring of symmetric functions in the Schur basis: a sparse
/// integer vector indexed by partitions.  Zero coefficients are never stored.
struct SchurElement {
  std::map<Partition, Int, GradedOrder> coeffs;

  void add(const Partition& p, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  bool is_zero() const { return coeffs.empty(); }
  Int coefficient(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Int(0) : it->second;
  }

  SchurElement& operator+=(const SchurElement& o) {
    for (const auto& [p, c] : o.coeffs) add(p, c);
    return *this;
  }
  SchurElement& operator-=(const SchurElement& o) {
    for (const auto& [p, c] : o.coeffs) add(p, -c);
    return *this;
  }
  SchurElement& operator*=(const Int& k) {
    if (k == 0) {
      coeffs.clear();
      return *this;
    }
    for (auto& [p, c] : coeffs) c *= k;
    return *this;
  }

  bool operator==(const SchurElement&) const = default;
};

inline SchurElement schur(const Partition& p) {
  SchurElement e;
  e.add(p, 1);
  return e;
}

inline SchurElement schur_one() { return schur(Partition{}); }

/// Quotient map onto the box ring: drops every term whose partition does
/// not fit in the box.
inline SchurElement project_to_box(const SchurElement& f, const Box& box) {
  SchurElement out;
  for (const auto& [p, c] : f.coeffs)
    if (fits(p, box)) out.add(p, c);
  return out;
}

/// Expansion of s_lambda * s_mu in the ambient ring.
inline SchurElement schur_product_expand(const Partition& la, const Partition& mu) {
  SchurElement out;
  if (la.empty()) return schur(mu);
  if (mu.empty()) return schur(la);
  // Candidates are bounded by the envelope of the two diagrams.
  Box envelope(static_cast<int>(la.length() + mu.length()), la.part(0) + mu.part(0));
  for (const auto& nu : partitions_in_box(envelope, la.size() + mu.size())) {
    if (!nu.contains(la) || !nu.contains(mu)) continue;
    out.add(nu, lr_coefficient(la, mu, nu));
  }
  return out;
}

/// Bilinear product; truncated to the box when one is given.  With a box the
/// factors must already live in it.
inline SchurElement multiply(const SchurElement& f, const SchurElement& g,
                             const std::optional<Box>& box = std::nullopt) {
  if (box) {
    for (const auto& [p, c] : f.coeffs)
      if (!fits(p, *box)) throw PreconditionError("multiply: left factor leaves the box");
    for (const auto& [p, c] : g.coeffs)
      if (!fits(p, *box)) throw PreconditionError("multiply: right factor leaves the box");
  }
  SchurElement out;
  for (const auto& [la, cf] : f.coeffs) {
    for (const auto& [mu, cg] : g.coeffs) {
      Int weight = cf * cg;
      if (box) {
        for (const auto& nu : partitions_in_box(*box, la.size() + mu.size())) {
          if (!nu.contains(la) || !nu.contains(mu)) continue;
          out.add(nu, weight * lr_coefficient(la, mu, nu));
        }
      } else {
        SchurElement term = schur_product_expand(la, mu);
        term *= weight;
        out += term;
      }
    }
  }
  return out;
}

using PartitionPair = std::pair<Partition, Partition>;

/// Rendering/iteration order on tensor keys: total grade, then the left
/// factor in GradedOrder, then the right.
struct PairGradedOrder {
  bool operator()(const PartitionPair& x, const PartitionPair& y) const {
    int gx = x.first.size() + x.second.size();
    int gy = y.first.size() + y.second.size();
    if (gx != gy) return gx < gy;
    GradedOrder less;
    if (x.first != y.first) return less(x.first, y.first);
    return less(x.second, y.second);
  }
};

/// Element of the tensor square of the ring (of the box quotient when box is
/// set, of the ambient ring otherwise).
struct TensorElement {
  std::optional<Box> box;
  std::map<PartitionPair, Int, PairGradedOrder> coeffs;

  explicit TensorElement(std::optional<Box> b = std::nullopt) : box(std::move(b)) {}

  void add(const Partition& left, const Partition& right, const Int& c) {
    if (c == 0) return;
    if (box && (!fits(left, *box) || !fits(right, *box))) return;
    PartitionPair key{left, right};
    auto [it, inserted] = coeffs.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  bool is_zero() const { return coeffs.empty(); }
  Int coefficient(const Partition& l, const Partition& r) const {
    auto it = coeffs.find({l, r});
    return it == coeffs.end() ? Int(0) : it->second;
  }

  bool operator==(const TensorElement& o) const {
    return box == o.box && coeffs == o.coeffs;
  }
};

/// Coproduct on a Schur function, in the ambient tensor square:
/// every splitting of nu weighted by the matching LR coefficient.
inline TensorElement coproduct(const Partition& nu) {
  TensorElement out;
  for (const auto& la : subpartitions(nu))
    for (const auto& mu : subpartitions(nu, nu.size() - la.size()))
      out.add(la, mu, lr_coefficient(la, mu, nu));
  return out;
}

inline TensorElement project_to_box(const TensorElement& t, const Box& box) {
  TensorElement out(box);
  for (const auto& [key, c] : t.coeffs) out.add(key.first, key.second, c);
  return out;
}

/// Componentwise product on the tensor square (same box on both sides).
inline TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) {
  if (x.box != y.box) throw PreconditionError("tensor_multiply: box mismatch");
  TensorElement out(x.box);
  for (const auto& [kx, cx] : x.coeffs) {
    for (const auto& [ky, cy] : y.coeffs) {
      SchurElement left = multiply(schur(kx.first), schur(ky.first), x.box);
      SchurElement right = multiply(schur(kx.second), schur(ky.second), x.box);
      Int weight = cx * cy;
      for (const auto& [lp, lc] : left.coeffs)
        for (const auto& [rp, rc] : right.coeffs)
          out.add(lp, rp, weight * lc * rc);
    }
  }
  return out;
}

/// Antipode: s_lambda -> (-1)^|lambda| s_lambda', extended linearly.
inline SchurElement antipode(const SchurElement& f) {
  SchurElement out;
  for (const auto& [p, c] : f.coeffs)
    out.add(p.conjugate(), p.size() % 2 == 0 ? c : -c);
  return out;
}

/// multiplication . (antipode x id) . coproduct applied to s_nu; vanishes in
/// positive degree and gives 1 on s_0.
inline SchurElement hopf_convolution(const Partition& nu) {
  SchurElement out;
  for (const auto& [key, c] : coproduct(nu).coeffs) {
    SchurElement term = schur_product_expand(key.first.conjugate(), key.second);
    term *= (key.first.size() % 2 == 0 ? c : -c);
    out += term;
  }
  return out;
}

/// A term of the CP iteration state: a left Schur factor tensored with an
/// unexpanded product of right factors.  Factors are kept as a sorted
/// multiset since the ring is commutative.
struct FormalKey {
  Partition left;
  std::vector<Partition> factors;  // sorted by GradedOrder

  bool operator==(const FormalKey&) const = default;
};

inline FormalKey make_formal_key(Partition left, std::vector<Partition> factors) {
  std::sort(factors.begin(), factors.end(), GradedOrder{});
  return FormalKey{std::move(left), std::move(factors)};
}

struct FormalKeyOrder {
  bool operator()(const FormalKey& x, const FormalKey& y) const {
    auto grade = [](const FormalKey& k) {
      int g = k.left.size();
      for (const auto& f : k.factors) g += f.size();
      return g;
    };
    int gx = grade(x), gy = grade(y);
    if (gx != gy) return gx < gy;
    GradedOrder less;
    if (x.left != y.left) return less(x.left, y.left);
    return std::lexicographical_compare(x.factors.begin(), x.factors.end(),
                                        y.factors.begin(), y.factors.end(), less);
  }
};

/// State of the CP-driven reduction: right factors stay as formal products
/// until the run finishes.
struct FormalTensor {
  Box box;
  std::map<FormalKey, Int, FormalKeyOrder> terms;

  explicit FormalTensor(Box b) : box(b) {}

  void add(FormalKey key, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Int coefficient(const FormalKey& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? Int(0) : it->second;
  }

  bool operator==(const FormalTensor& o) const {
    return box == o.box && terms == o.terms;
  }
};

/// The CP endomorphism on a simple tensor, acting on the formal
/// representation.  With no right factors this is the boxed coproduct of the
/// left factor minus the term (left x 1); otherwise the boxed coproduct times
/// (1 x product of factors), which just appends each coproduct's right leg to
/// the factor multiset.  Terms leaving the box are dropped immediately.
inline FormalTensor cp_map(const Partition& left,
                           const std::vector<Partition>& right_factors,
                           const Box& box) {
  if (!fits(left, box)) throw PreconditionError("cp_map: left factor leaves the box");
  for (const auto& f : right_factors)
    if (!fits(f, box)) throw PreconditionError("cp_map: right factor leaves the box");

  FormalTensor out(box);
  const bool bare = right_factors.empty();
  for (const auto& [key, c] : coproduct(left).coeffs) {
    const Partition& rho = key.first;
    const Partition& tau = key.second;
    if (!fits(rho, box) || !fits(tau, box)) continue;
    if (bare && rho == left && tau.empty()) continue;  // subtract (left x 1)
    std::vector<Partition> factors = right_factors;
    if (!tau.empty()) factors.push_back(tau);
    out.add(make_formal_key(rho, std::move(factors)), c);
  }
  return out;
}

/// Multiplies out every right factor multiset inside the box quotient and
/// collects like terms.
inline TensorElement expand_formal_tensor(const FormalTensor& t) {
  TensorElement out(t.box);
  for (const auto& [key, c] : t.terms) {
    SchurElement product = schur_one();
    for (const auto& f : key.factors) product = multiply(product, schur(f), t.box);
    for (const auto& [theta, d] : product.coeffs) out.add(key.left, theta, c * d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering.  Term order is the map order: graded, then reverse
// lexicographic on the left factor, then on the right.

namespace detail {

inline std::string schur_symbol(const Partition& p) {
  return p.empty() ? "1" : "s" + to_text(p);
}

inline void append_term(std::string& s, bool first, const Int& c,
                        const std::string& body) {
  Int a = c < 0 ? Int(-c) : c;
  if (first)
    s += (c < 0 ? "-" : "");
  else
    s += (c < 0 ? " - " : " + ");
  if (a != 1 || body == "1")
    s += a.str() + (body == "1" ? "" : "*");
  if (body != "1") s += body;
}

}  // namespace detail

inline std::string to_text(const SchurElement& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [p, c] : f.coeffs)
    detail::append_term(s, s.empty(), c, detail::schur_symbol(p));
  return s;
}

inline std::string to_text(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : t.coeffs)
    detail::append_term(s, s.empty(), c,
                        detail::schur_symbol(key.first) + "(x)" +
                            detail::schur_symbol(key.second));
  return s;
}

inline std::string to_text(const FormalKey& k) {
  std::string right;
  for (const auto& f : k.factors) {
    if (!right.empty()) right += "*";
    right += detail::schur_symbol(f);
  }
  if (right.empty()) right = "1";
  return detail::schur_symbol(k.left) + "(x)" + right;
}

inline std::string to_text(const FormalTensor& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : t.terms)
    detail::append_term(s, s.empty(), c, to_text(key));
  return s;
}

}  // namespace minpres
