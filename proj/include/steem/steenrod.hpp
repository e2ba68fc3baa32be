#pragma once

// The mod 2 Steenrod algebra in the admissible basis.

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "f2.hpp"

namespace steem {

/// Composite Sq^{w[0]} Sq^{w[1]} ... ; entries are positive, empty is the unit.
using SqWord = std::vector<int>;
/// An admissible word: w[j] >= 2 w[j+1].
using Monomial = std::vector<int>;

/// C(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of those of n.
constexpr bool binom_mod2(long n, long k) {
  if (n < 0 || k < 0 || k > n) return false;
  return (k & n) == k;
}

inline int word_degree(const SqWord& w) { return std::accumulate(w.begin(), w.end(), 0); }

inline bool is_admissible(const SqWord& w) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] < 2 * w[j + 1]) return false;
  return true;
}

inline int excess(const Monomial& m) {
  if (m.empty()) return 0;
  return m[0] - (word_degree(m) - m[0]);
}

inline std::string format_word(const SqWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += ' ';
    s += "Sq" + std::to_string(w[j]);
  }
  return s;
}

/// A homogeneous F2-combination of admissible monomials.
class SteenrodElement {
 public:
  explicit SteenrodElement(int degree = 0) : degree_(degree) {}

  static SteenrodElement unit() {
    SteenrodElement e(0);
    e.terms_.insert(Monomial{});
    return e;
  }

  static SteenrodElement of(const Monomial& m) {
    if (!is_admissible(m)) throw InvalidArgument("SteenrodElement::of: inadmissible " + format_word(m));
    SteenrodElement e(word_degree(m));
    e.terms_.insert(m);
    return e;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::set<Monomial>& terms() const { return terms_; }

  /// Adds (mod 2) one admissible monomial of the element's degree.
  void toggle(const Monomial& m) {
    if (word_degree(m) != degree_) throw InvalidArgument("SteenrodElement: inhomogeneous term");
    if (!terms_.erase(m)) terms_.insert(m);
  }

  SteenrodElement& operator+=(const SteenrodElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (o.degree_ != degree_) throw InvalidArgument("SteenrodElement: adding different degrees");
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  friend SteenrodElement operator+(SteenrodElement a, const SteenrodElement& b) { return a += b; }

  bool operator==(const SteenrodElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  /// Canonical text: terms in lexicographic order joined by " + ", or "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& m : terms_) {
      if (!first) s += " + ";
      first = false;
      s += format_word(m);
    }
    return s;
  }

 private:
  int degree_;
  std::set<Monomial> terms_;
};

enum class RewriteOrder { LeftmostFirst, RightmostFirst };

/// Rewrites a word into the admissible basis with the Adem relations
///   Sq^a Sq^b = sum_{c=0}^{a/2} C(b-c-1, a-2c) Sq^{a+b-c} Sq^c   (a < 2b).
inline SteenrodElement adem_reduce(const SqWord& word, RewriteOrder order = RewriteOrder::LeftmostFirst) {
  for (int e : word)
    if (e <= 0) throw InvalidArgument("adem_reduce: exponents must be positive");
  const int deg = word_degree(word);
  std::set<SqWord> pending{word};
  SteenrodElement out(deg);
  while (!pending.empty()) {
    SqWord w = *pending.begin();
    pending.erase(pending.begin());
    std::optional<std::size_t> pos;
    if (order == RewriteOrder::LeftmostFirst) {
      for (std::size_t j = 0; j + 1 < w.size() && !pos; ++j)
        if (w[j] < 2 * w[j + 1]) pos = j;
    } else {
      for (std::size_t j = w.size(); j-- > 1 && !pos;)
        if (w[j - 1] < 2 * w[j]) pos = j - 1;
    }
    if (!pos) {
      out.toggle(w);
      continue;
    }
    const int a = w[*pos], b = w[*pos + 1];
    for (int c = 0; 2 * c <= a; ++c) {
      if (!binom_mod2(b - c - 1, a - 2 * c)) continue;
      SqWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
      next.push_back(a + b - c);
      if (c > 0) next.push_back(c);
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
      if (!pending.erase(next)) pending.insert(next);
    }
  }
  return out;
}

/// Cached reduction of Sq^a Sq^b (a, b >= 1).
inline const SteenrodElement& adem_pair(int a, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SteenrodElement> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({a, b});
  if (it == cache.end()) it = cache.emplace(std::pair{a, b}, adem_reduce({a, b})).first;
  return it->second;
}

inline SteenrodElement multiply(const SteenrodElement& x, const SteenrodElement& y) {
  SteenrodElement out(x.degree() + y.degree());
  for (const auto& p : x.terms())
    for (const auto& q : y.terms()) {
      SqWord w = p;
      w.insert(w.end(), q.begin(), q.end());
      out += adem_reduce(w);
    }
  return out;
}

inline SteenrodElement sq(int k) {
  if (k < 0) throw InvalidArgument("sq: negative exponent");
  return k == 0 ? SteenrodElement::unit() : SteenrodElement::of({k});
}

/// All admissible monomials of degree d, lexicographically sorted.
inline std::vector<Monomial> admissible_monomials(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (d == 0) return {Monomial{}};
  // build from the right: each new leftmost entry is at least twice the last
  std::vector<int> rev;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    const int lo = rev.empty() ? 1 : 2 * rev.back();
    for (int v = lo; v <= remaining; ++v) {
      rev.push_back(v);
      self(self, remaining - v);
      rev.pop_back();
    }
  };
  rec(rec, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Indexing of the admissible basis in one degree.
class AdmissibleBasis {
 public:
  explicit AdmissibleBasis(int d) : degree_(d), monomials_(admissible_monomials(d)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
  }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  BitVec coords(const SteenrodElement& x) const {
    BitVec v(size());
    if (x.is_zero()) return v;
    if (x.degree() != degree_) throw InvalidArgument("AdmissibleBasis::coords: wrong degree");
    for (const auto& m : x.terms()) v.set(index_.at(m));
    return v;
  }

  SteenrodElement element(const BitVec& v) const {
    SteenrodElement e(degree_);
    for (auto i : v.ones()) e.toggle(monomials_[i]);
    return e;
  }

 private:
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// A(n): the subalgebra generated by Sq^{2^i}, 0 <= i <= n-1.
struct SubalgebraSpec {
  int n;
  explicit SubalgebraSpec(int n_) : n(n_) {
    if (n < 1) throw InvalidArgument("SubalgebraSpec: n must be >= 1");
  }
};

/// F2 basis of the degree-d part of A(n), in reduced echelon form with
/// respect to the lexicographic admissible basis.
inline std::vector<SteenrodElement> an_basis(const SubalgebraSpec& spec, int d) {
  if (d < 0) throw InvalidArgument("an_basis: negative degree");
  // span_d = sum_i Sq^{2^i} * span_{d - 2^i}
  std::vector<std::vector<SteenrodElement>> by_degree(static_cast<std::size_t>(d) + 1);
  by_degree[0] = {SteenrodElement::unit()};
  for (int e = 1; e <= d; ++e) {
    AdmissibleBasis basis(e);
    Echelon ech(basis.size());
    for (int i = 0; i < spec.n && (1 << i) <= e; ++i)
      for (const auto& b : by_degree[static_cast<std::size_t>(e - (1 << i))])
        ech.insert(basis.coords(multiply(sq(1 << i), b)));
    for (const auto& v : ech.basis()) by_degree[static_cast<std::size_t>(e)].push_back(basis.element(v));
  }
  return by_degree[static_cast<std::size_t>(d)];
}

struct WitnessTerm {
  SteenrodElement left;
  int middle = 0;  // exponent of the middle factor Sq^{2^n}
  SteenrodElement right;
};

/// Sq^{2^n} Sq^{2^n} = sum left * Sq^{2^n} * right with left, right of
/// positive degree in A(n).
struct Witness {
  int n = 0;
  SteenrodElement target;
  std::vector<WitnessTerm> terms;
};

inline bool verify_witness(const Witness& w) {
  if (w.n < 1) return false;
  const int p = 1 << w.n;
  SteenrodElement total(2 * p);
  for (const auto& t : w.terms) {
    if (t.middle != p || t.left.degree() < 1 || t.right.degree() < 1) return false;
    total += multiply(multiply(t.left, sq(t.middle)), t.right);
  }
  return total == adem_reduce({p, p}) && total == w.target;
}

/// Searches a decomposition of Sq^{2^n} Sq^{2^n} in Abar(n) Sq^{2^n} Abar(n).
/// The outer factors have degrees d1 + d2 = 2^n, d1, d2 >= 1, and the
/// coefficients solve an F2 linear system over all basis triple products.
/// `search_bound` caps the total degree 2^{n+1} that may be examined.
inline std::optional<Witness> decompose_sq2n_sq2n(int n, int search_bound) {
  if (n < 1) throw InvalidArgument("decompose_sq2n_sq2n: n must be >= 1");
  if (n > 20) return std::nullopt;
  const int p = 1 << n;
  if (2 * p > search_bound) return std::nullopt;
  const SubalgebraSpec spec(n);
  const SteenrodElement target = adem_reduce({p, p});
  AdmissibleBasis basis(2 * p);

  std::vector<std::vector<SteenrodElement>> an(static_cast<std::size_t>(p));
  for (int d = 1; d < p; ++d) an[static_cast<std::size_t>(d)] = an_basis(spec, d);

  std::vector<WitnessTerm> candidates;
  std::vector<BitVec> rows;
  for (int d1 = 1; d1 < p; ++d1)
    for (const auto& l : an[static_cast<std::size_t>(d1)])
      for (const auto& r : an[static_cast<std::size_t>(p - d1)]) {
        candidates.push_back({l, p, r});
        rows.push_back(basis.coords(multiply(multiply(l, sq(p)), r)));
      }
  if (rows.empty()) return std::nullopt;
  auto x = solve(matrix_of(basis.size(), rows), basis.coords(target));
  if (!x) return std::nullopt;
  Witness w{n, target, {}};
  for (auto i : x->ones()) w.terms.push_back(candidates[i]);
  return w;
}

/// Parses "Sq2 Sq2" (whitespace separated Sq<k>, k >= 1) or "1".
inline SqWord parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  SqWord w;
  bool unit = false;
  std::size_t count = 0;
  while (in >> tok) {
    ++count;
    if (tok == "1") {
      unit = true;
      continue;
    }
    if (tok.size() < 3 || tok.compare(0, 2, "Sq") != 0) throw ParseError("bad token '" + tok + "'");
    const std::string digits = tok.substr(2);
    if (digits.empty() || digits.size() > 6 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad exponent in '" + tok + "'");
    const int k = std::stoi(digits);
    if (k <= 0) throw ParseError("exponent must be positive in '" + tok + "'");
    w.push_back(k);
  }
  if (count == 0) throw ParseError("empty Steenrod word");
  if (unit && count > 1) throw ParseError("'1' must stand alone");
  return w;
}

/// Parses a '+'-separated sum of words and reduces it; "0" is zero.
inline SteenrodElement parse_element(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::optional<SteenrodElement> total;
  for (const auto& part : parts) {
    std::istringstream probe(part);
    std::string only;
    probe >> only;
    std::string extra;
    SteenrodElement term(0);
    if (only == "0" && !(probe >> extra)) {
      continue;
    } else {
      term = adem_reduce(parse_word(part));
    }
    if (!total)
      total = term;
    else
      *total += term;
  }
  return total ? *total : SteenrodElement(0);
}

}  // namespace steem
