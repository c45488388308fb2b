#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "minpres/errors.hpp"

namespace minpres {

/// Permutation of {1,...,n} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v) - 1])
        throw ParseError("not a permutation of 1..n");
      seen[static_cast<std::size_t>(v) - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(word_.size()); }

  /// Image of k (1-based).
  int operator()(int k) const { return word_[static_cast<std::size_t>(k) - 1]; }

  const std::vector<int>& one_line() const { return word_; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t k = 0; k < word_.size(); ++k)
      inv[static_cast<std::size_t>(word_[k]) - 1] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
  }

  /// Positions k (1-based) with w(k) > w(k+1).
  std::vector<int> descents() const {
    std::vector<int> d;
    for (std::size_t k = 0; k + 1 < word_.size(); ++k)
      if (word_[k] > word_[k + 1]) d.push_back(static_cast<int>(k) + 1);
    return d;
  }

  /// Coxeter length = inversion count.
  int length() const {
    int inv = 0;
    for (std::size_t p = 0; p < word_.size(); ++p)
      for (std::size_t q = p + 1; q < word_.size(); ++q)
        if (word_[p] > word_[q]) ++inv;
    return inv;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

inline std::string to_text(const Permutation& w) {
  std::string s = "[";
  for (int k = 1; k <= w.n(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(w(k));
  }
  return s + "]";
}

inline Permutation parse_permutation(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("permutation must look like [2,1,3]: got '" + std::string(text) + "'");
  std::vector<int> w;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    if (pos == end) throw ParseError("empty entry in permutation");
    int value = 0;
    for (std::size_t k = pos; k < end; ++k) {
      char c = body[k];
      if (c < '0' || c > '9') throw ParseError("bad character in permutation");
      value = value * 10 + (c - '0');
      if (value > 100000) throw ParseError("permutation entry out of range");
    }
    w.push_back(value);
    pos = end + 1;
  }
  if (w.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(w));
}

/// Exactly one descent.  The identity has none and does not count.
inline bool is_grassmannian(const Permutation& w) {
  return w.descents().size() == 1;
}

inline bool is_bigrassmannian(const Permutation& w) {
  return is_grassmannian(w) && is_grassmannian(w.inverse());
}

/// Strong Bruhat order via the rank criterion:
/// u <= w iff #{k <= p : u(k) >= q} <= #{k <= p : w(k) >= q} for all p,q.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw PreconditionError("bruhat_leq: size mismatch");
  const int n = u.n();
  // cnt[q] tracks #{k <= p : .(k) >= q} as p sweeps left to right.
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> cw(static_cast<std::size_t>(n) + 2, 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = u(p); q >= 1; --q) ++cu[static_cast<std::size_t>(q)];
    for (int q = w(p); q >= 1; --q) ++cw[static_cast<std::size_t>(q)];
    for (int q = 1; q <= n; ++q)
      if (cu[static_cast<std::size_t>(q)] > cw[static_cast<std::size_t>(q)]) return false;
  }
  return true;
}

/// The bigrassmannian permutation with unique descent at r, inverse descent
/// at s, and value s+1 at position t.  Constructed from its one-line word
/// and then validated against those three characterizing properties.
inline Permutation bigrassmannian_v(int r, int s, int t, int n) {
  std::vector<std::string> bad;
  if (!(1 <= t)) bad.push_back("t >= 1");
  if (!(t <= r)) bad.push_back("t <= r");
  if (!(t <= s)) bad.push_back("t <= s");
  if (!(r <= n)) bad.push_back("r <= n");
  if (!(s <= n)) bad.push_back("s <= n");
  if (!(t > r + s - n)) bad.push_back("t > r+s-n");
  if (!bad.empty()) throw InvalidTupleError(std::move(bad));

  std::vector<int> w;
  for (int v = 1; v <= t - 1; ++v) w.push_back(v);
  for (int v = s + 1; v <= s + r - t + 1; ++v) w.push_back(v);
  for (int v = t; v <= s; ++v) w.push_back(v);
  for (int v = s + r - t + 2; v <= n; ++v) w.push_back(v);
  Permutation perm(std::move(w));

  if (perm.descents() != std::vector<int>{r} ||
      perm.inverse().descents() != std::vector<int>{s} || perm(t) != s + 1)
    throw std::logic_error("bigrassmannian_v: constructed word failed validation");
  return perm;
}

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline constexpr int kDefaultPermutationBound = 7;

namespace detail {

inline void check_perm_bound(int n, int bound, const char* what) {
  if (n > bound)
    throw InstanceTooLargeError(std::string(what) + " refused: n = " + std::to_string(n) +
                                " exceeds the brute-force bound " + std::to_string(bound));
}

// Full <=-relation table for S_n, built once per n and shared.
struct BruhatRelation {
  std::vector<Permutation> perms;             // lex order
  std::map<std::vector<int>, std::size_t> index;
  std::vector<bool> leq;                      // leq[i * n! + j] = (perms[i] <= perms[j])

  bool le(std::size_t i, std::size_t j) const { return leq[i * perms.size() + j]; }
};

inline const BruhatRelation& bruhat_relation(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BruhatRelation>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto rel = std::make_unique<BruhatRelation>();
  rel->perms = all_permutations(n);
  for (std::size_t i = 0; i < rel->perms.size(); ++i)
    rel->index.emplace(rel->perms[i].one_line(), i);
  rel->leq.resize(rel->perms.size() * rel->perms.size());
  for (std::size_t i = 0; i < rel->perms.size(); ++i)
    for (std::size_t j = 0; j < rel->perms.size(); ++j)
      rel->leq[i * rel->perms.size() + j] = bruhat_leq(rel->perms[i], rel->perms[j]);
  return *cache.emplace(n, std::move(rel)).first->second;
}

// Lower covers of u: position swaps that drop the length by exactly one.
inline std::vector<Permutation> lower_covers(const Permutation& u) {
  std::vector<Permutation> covers;
  const int len = u.length();
  for (int p = 1; p <= u.n(); ++p) {
    for (int q = p + 1; q <= u.n(); ++q) {
      if (u(p) <= u(q)) continue;
      std::vector<int> w = u.one_line();
      std::swap(w[static_cast<std::size_t>(p) - 1], w[static_cast<std::size_t>(q) - 1]);
      Permutation v(std::move(w));
      if (v.length() == len - 1) covers.push_back(std::move(v));
    }
  }
  return covers;
}

}  // namespace detail

/// The essential set of w: minimal elements, in Bruhat order, among the
/// permutations not below w.  Since {u : u <!= w} is an up-set, u is minimal
/// there iff u <!= w and every lower cover of u is <= w.
inline std::vector<Permutation> essential_set(const Permutation& w,
                                              int bound = kDefaultPermutationBound) {
  detail::check_perm_bound(w.n(), bound, "essential_set");
  std::vector<Permutation> out;
  for (const auto& u : all_permutations(w.n())) {
    if (bruhat_leq(u, w)) continue;
    bool minimal = true;
    for (const auto& v : detail::lower_covers(u)) {
      if (!bruhat_leq(v, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  return out;
}

/// All w in S_n whose essential set is exactly {v}, i.e. with
/// {u : u <!= w} = {u : u >= v}; the set equality is checked directly, so
/// every returned w is a verified witness.  Empty output is a legitimate
/// answer, not an error.
inline std::vector<Permutation> find_w_for_v(const Permutation& v, int n,
                                             int bound = kDefaultPermutationBound) {
  detail::check_perm_bound(n, bound, "find_w_for_v");
  if (v.n() != n) throw PreconditionError("find_w_for_v: v must live in S_n");
  if (!is_bigrassmannian(v)) throw PreconditionError("find_w_for_v: v must be bigrassmannian");
  const auto& rel = detail::bruhat_relation(n);
  const std::size_t iv = rel.index.at(v.one_line());
  std::vector<Permutation> out;
  for (std::size_t iw = 0; iw < rel.perms.size(); ++iw) {
    bool match = true;
    for (std::size_t iu = 0; iu < rel.perms.size() && match; ++iu)
      if (!rel.le(iu, iw) != rel.le(iv, iu)) match = false;
    if (match) out.push_back(rel.perms[iw]);
  }
  return out;
}

}  // namespace minpres
