#pragma once

// Finite simplicial sets (all simplices through a level bound, degenerate ones
// included), normalized mod-2 cochains, cohomology and the Alexander-Whitney
// cup product.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "f2.hpp"
#include "graded_algebra.hpp"

namespace steem {

/// Simplices of levels 0..n_max with face maps d_i: X_n -> X_{n-1} and
/// degeneracies s_j: X_n -> X_{n+1} (n + 1 <= n_max), as index arrays.
class FiniteSimplicialSet {
 public:
  using Maps = std::vector<std::vector<std::vector<int>>>;  // [n][i][simplex]

  FiniteSimplicialSet() = default;
  FiniteSimplicialSet(int n_max, std::vector<int> counts, Maps faces, Maps degens,
                      std::optional<int> basepoint = std::nullopt, std::string name = {})
      : n_max_(n_max), counts_(std::move(counts)), faces_(std::move(faces)), degens_(std::move(degens)),
        basepoint_(basepoint), name_(std::move(name)) {
    if (n_max < 0) throw InvalidArgument("simplicial set level bound must be non-negative");
    if (counts_.size() != detail::sz(n_max) + 1) throw InvalidArgument("simplicial set: wrong number of levels");
    if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= counts_[0]))
      throw InvalidArgument("simplicial set: basepoint out of range");
    check_shapes();
    if (auto v = identity_violation()) throw SimplicialIdentityViolation(name_ + ": " + *v);
    index_nondegenerate();
  }

  int n_max() const { return n_max_; }
  int count(int n) const { return counts_[detail::sz(n)]; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::optional<int> basepoint() const { return basepoint_; }

  int face(int n, int i, int x) const { return faces_[detail::sz(n)][detail::sz(i)][detail::sz(x)]; }
  int degen(int n, int j, int x) const { return degens_[detail::sz(n)][detail::sz(j)][detail::sz(x)]; }
  const Maps& faces() const { return faces_; }
  const Maps& degens() const { return degens_; }

  /// The basepoint's (degenerate) simplex at level n.
  int base_at(int n) const {
    if (!basepoint_) throw MissingBasepoint(name_ + " has no basepoint");
    int b = *basepoint_;
    for (int l = 0; l < n; ++l) b = degen(l, 0, b);
    return b;
  }

  bool degenerate(int n, int x) const { return nondeg_index_[detail::sz(n)][detail::sz(x)] < 0; }
  const std::vector<int>& nondegenerate(int n) const { return nondeg_[detail::sz(n)]; }
  int nondeg_count(int n) const { return static_cast<int>(nondeg_[detail::sz(n)].size()); }
  /// Position of x among the nondegenerate n-simplices, or -1.
  int nondeg_index(int n, int x) const { return nondeg_index_[detail::sz(n)][detail::sz(x)]; }

  /// Highest level with a nondegenerate simplex.
  int dimension() const {
    for (int n = n_max_; n >= 0; --n)
      if (nondeg_count(n) > 0) return n;
    return -1;
  }

  std::optional<std::string> identity_violation() const {
    auto tag = [](const char* what, int n, int i, int j, int x) {
      return std::string(what) + " at level " + std::to_string(n) + " (i=" + std::to_string(i) +
             ", j=" + std::to_string(j) + ", simplex " + std::to_string(x) + ")";
    };
    for (int n = 2; n <= n_max_; ++n)
      for (int x = 0; x < count(n); ++x)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x))) return tag("d_i d_j", n, i, j, x);
    for (int n = 0; n + 2 <= n_max_; ++n)
      for (int x = 0; x < count(n); ++x)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (degen(n + 1, i, degen(n, j, x)) != degen(n + 1, j + 1, degen(n, i, x)))
              return tag("s_i s_j", n, i, j, x);
    for (int n = 0; n + 1 <= n_max_; ++n)
      for (int x = 0; x < count(n); ++x)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const int lhs = face(n + 1, i, degen(n, j, x));
            int rhs;
            if (i < j) rhs = degen(n - 1, j - 1, face(n, i, x));
            else if (i == j || i == j + 1) rhs = x;
            else rhs = degen(n - 1, j, face(n, i - 1, x));
            if (lhs != rhs) return tag("d_i s_j", n, i, j, x);
          }
    return std::nullopt;
  }

 private:
  void check_shapes() const {
    if (faces_.size() != counts_.size() || degens_.size() != counts_.size())
      throw InvalidArgument("simplicial set: face/degeneracy tables need one entry per level");
    for (int n = 0; n <= n_max_; ++n) {
      const auto& f = faces_[detail::sz(n)];
      if (f.size() != (n == 0 ? 0U : detail::sz(n) + 1)) throw InvalidArgument("simplicial set: wrong face count");
      for (const auto& m : f) {
        if (m.size() != detail::sz(count(n))) throw InvalidArgument("simplicial set: face table size");
        for (int v : m)
          if (v < 0 || v >= count(n - 1)) throw InvalidArgument("simplicial set: face out of range");
      }
      const auto& s = degens_[detail::sz(n)];
      if (s.size() != (n < n_max_ ? detail::sz(n) + 1 : 0U))
        throw InvalidArgument("simplicial set: wrong degeneracy count");
      for (const auto& m : s) {
        if (m.size() != detail::sz(count(n))) throw InvalidArgument("simplicial set: degeneracy table size");
        for (int v : m)
          if (v < 0 || v >= count(n + 1)) throw InvalidArgument("simplicial set: degeneracy out of range");
      }
    }
  }

  void index_nondegenerate() {
    nondeg_.assign(counts_.size(), {});
    nondeg_index_.assign(counts_.size(), {});
    for (int n = 0; n <= n_max_; ++n) {
      std::vector<bool> deg(detail::sz(count(n)), false);
      if (n >= 1)
        for (int j = 0; j < n; ++j)
          for (int y = 0; y < count(n - 1); ++y) deg[detail::sz(degen(n - 1, j, y))] = true;
      auto& idx = nondeg_index_[detail::sz(n)];
      idx.assign(detail::sz(count(n)), -1);
      for (int x = 0; x < count(n); ++x)
        if (!deg[detail::sz(x)]) {
          idx[detail::sz(x)] = static_cast<int>(nondeg_[detail::sz(n)].size());
          nondeg_[detail::sz(n)].push_back(x);
        }
    }
  }

  int n_max_ = 0;
  std::vector<int> counts_;
  Maps faces_, degens_;
  std::optional<int> basepoint_;
  std::string name_;
  std::vector<std::vector<int>> nondeg_;
  std::vector<std::vector<int>> nondeg_index_;
};

/// Levelwise map of simplicial sets.
struct SimplicialMap {
  std::vector<std::vector<int>> at;  // [n][simplex]
  int operator()(int n, int x) const { return at[detail::sz(n)][detail::sz(x)]; }
};

inline std::optional<std::string> simplicial_map_violation(const SimplicialMap& f, const FiniteSimplicialSet& a,
                                                           const FiniteSimplicialSet& b) {
  const int L = std::min(a.n_max(), b.n_max());
  if (f.at.size() < detail::sz(L) + 1) return "too few levels";
  for (int n = 0; n <= L; ++n) {
    if (f.at[detail::sz(n)].size() != detail::sz(a.count(n))) return "wrong size at level " + std::to_string(n);
    for (int x = 0; x < a.count(n); ++x) {
      const int y = f(n, x);
      if (y < 0 || y >= b.count(n)) return "out of range at level " + std::to_string(n);
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          if (f(n - 1, a.face(n, i, x)) != b.face(n, i, y))
            return "does not commute with d_" + std::to_string(i) + " at level " + std::to_string(n);
      if (n + 1 <= L)
        for (int j = 0; j <= n; ++j)
          if (f(n + 1, a.degen(n, j, x)) != b.degen(n, j, y))
            return "does not commute with s_" + std::to_string(j) + " at level " + std::to_string(n);
    }
  }
  return std::nullopt;
}

inline SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  for (std::size_t n = 0; n < std::min(f.at.size(), g.at.size()); ++n) {
    std::vector<int> row;
    for (int y : f.at[n]) row.push_back(g.at[n][detail::sz(y)]);
    h.at.push_back(std::move(row));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

/// Builds a simplicial set whose n-simplices are keyed by values of type K,
/// from per-level key lists and face/degeneracy functions on keys.
template <class K, class FaceFn, class DegenFn>
FiniteSimplicialSet from_keys(int n_max, const std::vector<std::vector<K>>& keys, FaceFn face, DegenFn degen,
                              std::optional<int> basepoint, std::string name) {
  std::vector<std::map<K, int>> index(sz(n_max) + 1);
  std::vector<int> counts;
  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t i = 0; i < keys[sz(n)].size(); ++i) index[sz(n)][keys[sz(n)][i]] = static_cast<int>(i);
    counts.push_back(static_cast<int>(keys[sz(n)].size()));
  }
  FiniteSimplicialSet::Maps faces(sz(n_max) + 1), degens(sz(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> m;
        for (const auto& k : keys[sz(n)]) m.push_back(index[sz(n - 1)].at(face(n, i, k)));
        faces[sz(n)].push_back(std::move(m));
      }
    if (n < n_max)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> m;
        for (const auto& k : keys[sz(n)]) m.push_back(index[sz(n + 1)].at(degen(n, j, k)));
        degens[sz(n)].push_back(std::move(m));
      }
  }
  return FiniteSimplicialSet(n_max, counts, faces, degens, basepoint, std::move(name));
}

inline void monotone(int len, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    monotone(len, v, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// The standard simplex Delta^n through level n_max: m-simplices are
/// nondecreasing maps [m] -> [n]. Basepoint: vertex 0.
inline FiniteSimplicialSet standard_simplex(int n, int n_max) {
  if (n < 0) throw InvalidArgument("standard_simplex: negative dimension");
  std::vector<std::vector<std::vector<int>>> keys;
  for (int m = 0; m <= n_max; ++m) {
    std::vector<std::vector<int>> lv;
    std::vector<int> cur;
    detail::monotone(m + 1, 0, n, cur, lv);
    keys.push_back(std::move(lv));
  }
  auto face = [](int, int i, const std::vector<int>& k) {
    auto r = k;
    r.erase(r.begin() + i);
    return r;
  };
  auto degen = [](int, int j, const std::vector<int>& k) {
    auto r = k;
    r.insert(r.begin() + j, k[detail::sz(j)]);
    return r;
  };
  return detail::from_keys(n_max, keys, face, degen, 0, "Delta(" + std::to_string(n) + ")");
}

inline FiniteSimplicialSet point(int n_max) {
  auto p = standard_simplex(0, n_max);
  p.set_name("pt");
  return p;
}

/// Sub-simplicial set given by per-level membership (must be closed under
/// faces and degeneracies). The basepoint is kept if it is a member.
inline FiniteSimplicialSet subcomplex(const FiniteSimplicialSet& x, const std::vector<std::vector<bool>>& member,
                                      std::string name = {}) {
  std::vector<std::vector<int>> newid(detail::sz(x.n_max()) + 1);
  std::vector<int> counts;
  for (int n = 0; n <= x.n_max(); ++n) {
    int c = 0;
    for (int s = 0; s < x.count(n); ++s) newid[detail::sz(n)].push_back(member[detail::sz(n)][detail::sz(s)] ? c++ : -1);
    counts.push_back(c);
  }
  FiniteSimplicialSet::Maps faces(detail::sz(x.n_max()) + 1), degens(detail::sz(x.n_max()) + 1);
  for (int n = 0; n <= x.n_max(); ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> m;
        for (int s = 0; s < x.count(n); ++s)
          if (member[detail::sz(n)][detail::sz(s)]) {
            const int t = newid[detail::sz(n - 1)][detail::sz(x.face(n, i, s))];
            if (t < 0) throw InvalidArgument("subcomplex: not closed under faces");
            m.push_back(t);
          }
        faces[detail::sz(n)].push_back(std::move(m));
      }
    if (n < x.n_max())
      for (int j = 0; j <= n; ++j) {
        std::vector<int> m;
        for (int s = 0; s < x.count(n); ++s)
          if (member[detail::sz(n)][detail::sz(s)]) {
            const int t = newid[detail::sz(n + 1)][detail::sz(x.degen(n, j, s))];
            if (t < 0) throw InvalidArgument("subcomplex: not closed under degeneracies");
            m.push_back(t);
          }
        degens[detail::sz(n)].push_back(std::move(m));
      }
  }
  std::optional<int> bp;
  if (x.basepoint() && newid[0][detail::sz(*x.basepoint())] >= 0) bp = newid[0][detail::sz(*x.basepoint())];
  return FiniteSimplicialSet(x.n_max(), counts, faces, degens, bp, name.empty() ? x.name() : std::move(name));
}

/// X / A: the sub-simplicial set A (nonempty) collapsed to the basepoint.
inline FiniteSimplicialSet collapse(const FiniteSimplicialSet& x, const std::vector<std::vector<bool>>& a,
                                    std::string name) {
  std::vector<std::vector<int>> newid(detail::sz(x.n_max()) + 1);
  std::vector<int> counts;
  for (int n = 0; n <= x.n_max(); ++n) {
    int c = 1;
    bool any = false;
    for (int s = 0; s < x.count(n); ++s) {
      const bool in = a[detail::sz(n)][detail::sz(s)];
      any = any || in;
      newid[detail::sz(n)].push_back(in ? 0 : c++);
    }
    if (!any) throw InvalidArgument("collapse: the collapsed subcomplex must be nonempty in every level");
    counts.push_back(c);
  }
  FiniteSimplicialSet::Maps faces(detail::sz(x.n_max()) + 1), degens(detail::sz(x.n_max()) + 1);
  for (int n = 0; n <= x.n_max(); ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> m(detail::sz(counts[detail::sz(n)]), 0);
        for (int s = 0; s < x.count(n); ++s) {
          const int t = newid[detail::sz(n)][detail::sz(s)];
          const int f = newid[detail::sz(n - 1)][detail::sz(x.face(n, i, s))];
          if (t == 0 && f != 0) throw InvalidArgument("collapse: subcomplex not closed under faces");
          m[detail::sz(t)] = f;
        }
        faces[detail::sz(n)].push_back(std::move(m));
      }
    if (n < x.n_max())
      for (int j = 0; j <= n; ++j) {
        std::vector<int> m(detail::sz(counts[detail::sz(n)]), 0);
        for (int s = 0; s < x.count(n); ++s) {
          const int t = newid[detail::sz(n)][detail::sz(s)];
          const int g = newid[detail::sz(n + 1)][detail::sz(x.degen(n, j, s))];
          if (t == 0 && g != 0) throw InvalidArgument("collapse: subcomplex not closed under degeneracies");
          m[detail::sz(t)] = g;
        }
        degens[detail::sz(n)].push_back(std::move(m));
      }
  }
  return FiniteSimplicialSet(x.n_max(), counts, faces, degens, 0, std::move(name));
}

/// Boundary of Delta^n: simplices whose vertex map is not onto.
inline std::vector<std::vector<bool>> simplex_boundary(int n, int n_max) {
  std::vector<std::vector<bool>> out;
  for (int m = 0; m <= n_max; ++m) {
    std::vector<std::vector<int>> lv;
    std::vector<int> cur;
    detail::monotone(m + 1, 0, n, cur, lv);
    std::vector<bool> row;
    for (const auto& k : lv) {
      std::vector<bool> hit(detail::sz(n) + 1, false);
      for (int v : k) hit[detail::sz(v)] = true;
      bool onto = true;
      for (bool h : hit) onto = onto && h;
      row.push_back(!onto);
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// S^n = Delta^n / boundary (n >= 1).
inline FiniteSimplicialSet sphere(int n, int n_max) {
  if (n < 1) throw InvalidArgument("sphere: dimension must be positive");
  return collapse(standard_simplex(n, n_max), simplex_boundary(n, n_max), n == 1 ? "S1" : "S" + std::to_string(n));
}

inline FiniteSimplicialSet circle(int n_max) { return sphere(1, n_max); }

/// Levelwise product; simplex (a, b) has index a * |Y_n| + b.
inline FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  const int L = std::min(x.n_max(), y.n_max());
  std::vector<int> counts;
  for (int n = 0; n <= L; ++n) counts.push_back(x.count(n) * y.count(n));
  FiniteSimplicialSet::Maps faces(detail::sz(L) + 1), degens(detail::sz(L) + 1);
  for (int n = 0; n <= L; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> m;
        for (int a = 0; a < x.count(n); ++a)
          for (int b = 0; b < y.count(n); ++b) m.push_back(x.face(n, i, a) * y.count(n - 1) + y.face(n, i, b));
        faces[detail::sz(n)].push_back(std::move(m));
      }
    if (n < L)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> m;
        for (int a = 0; a < x.count(n); ++a)
          for (int b = 0; b < y.count(n); ++b) m.push_back(x.degen(n, j, a) * y.count(n + 1) + y.degen(n, j, b));
        degens[detail::sz(n)].push_back(std::move(m));
      }
  }
  std::optional<int> bp;
  if (x.basepoint() && y.basepoint()) bp = *x.basepoint() * y.count(0) + *y.basepoint();
  return FiniteSimplicialSet(L, counts, faces, degens, bp, "prod(" + x.name() + "," + y.name() + ")");
}

/// Projections out of product(x, y).
inline SimplicialMap projection(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int which) {
  const int L = std::min(x.n_max(), y.n_max());
  SimplicialMap p;
  for (int n = 0; n <= L; ++n) {
    std::vector<int> row;
    for (int a = 0; a < x.count(n); ++a)
      for (int b = 0; b < y.count(n); ++b) row.push_back(which == 0 ? a : b);
    p.at.push_back(std::move(row));
  }
  return p;
}

/// X v Y inside X x Y.
inline std::vector<std::vector<bool>> wedge_in_product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  if (!x.basepoint() || !y.basepoint()) throw MissingBasepoint("wedge needs basepoints on both factors");
  const int L = std::min(x.n_max(), y.n_max());
  std::vector<std::vector<bool>> out;
  for (int n = 0; n <= L; ++n) {
    std::vector<bool> row;
    const int bx = x.base_at(n), by = y.base_at(n);
    for (int a = 0; a < x.count(n); ++a)
      for (int b = 0; b < y.count(n); ++b) row.push_back(a == bx || b == by);
    out.push_back(std::move(row));
  }
  return out;
}

inline FiniteSimplicialSet smash(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  return collapse(product(x, y), wedge_in_product(x, y), "smash(" + x.name() + "," + y.name() + ")");
}

/// Sigma X = S^1 smash X.
inline FiniteSimplicialSet suspension(const FiniteSimplicialSet& x) {
  auto s = smash(circle(x.n_max()), x);
  s.set_name("Sigma(" + x.name() + ")");
  return s;
}

/// The sub-simplicial set generated by nondegenerate simplices of dimension <= n.
inline FiniteSimplicialSet skeleton(const FiniteSimplicialSet& x, int n) {
  if (n < 0) throw InvalidArgument("skeleton: negative dimension");
  std::vector<std::vector<bool>> member;
  for (int m = 0; m <= x.n_max(); ++m) {
    std::vector<bool> row(detail::sz(x.count(m)), m <= n);
    if (m > n)
      for (int j = 0; j < m; ++j)
        for (int s = 0; s < x.count(m - 1); ++s)
          if (member[detail::sz(m - 1)][detail::sz(s)]) row[detail::sz(x.degen(m - 1, j, s))] = true;
    member.push_back(std::move(row));
  }
  return subcomplex(x, member, "Sk" + std::to_string(n) + "(" + x.name() + ")");
}

/// The map sending everything to the basepoint of y.
inline SimplicialMap constant_map(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
  SimplicialMap f;
  for (int n = 0; n <= std::min(x.n_max(), y.n_max()); ++n)
    f.at.emplace_back(detail::sz(x.count(n)), y.base_at(n));
  return f;
}

inline SimplicialMap identity_map(const FiniteSimplicialSet& x) {
  SimplicialMap f;
  for (int n = 0; n <= x.n_max(); ++n) {
    std::vector<int> row;
    for (int s = 0; s < x.count(n); ++s) row.push_back(s);
    f.at.push_back(std::move(row));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Normalized cochains and cohomology

/// Coboundary C^n -> C^{n+1} on normalized cochains (functions on
/// nondegenerate simplices), row convention.
inline F2Matrix coboundary(const FiniteSimplicialSet& x, int n) {
  if (n + 1 > x.n_max()) throw OutOfBound("coboundary: level " + std::to_string(n + 1) + " beyond the level bound");
  F2Matrix d(detail::sz(x.nondeg_count(n)), detail::sz(x.nondeg_count(n + 1)));
  for (int c = 0; c < x.nondeg_count(n + 1); ++c) {
    const int s = x.nondegenerate(n + 1)[detail::sz(c)];
    for (int i = 0; i <= n + 1; ++i) {
      const int r = x.nondeg_index(n, x.face(n + 1, i, s));
      if (r >= 0) d.flip(detail::sz(r), detail::sz(c));
    }
  }
  return d;
}

struct SimplicialCohomology {
  int d_max = 0;
  std::vector<HomologyGroup> groups;  // [n], cocycle representatives in nondegenerate coordinates
  std::vector<int> dims() const {
    std::vector<int> out;
    for (const auto& g : groups) out.push_back(static_cast<int>(g.dim()));
    return out;
  }
  int dim(int n) const { return n < 0 || n > d_max ? 0 : static_cast<int>(groups[detail::sz(n)].dim()); }
  const std::vector<BitVec>& reps(int n) const { return groups[detail::sz(n)].quotient.reps(); }
  BitVec coords(int n, const BitVec& cocycle) const { return groups[detail::sz(n)].quotient.coords(cocycle); }
};

inline SimplicialCohomology cohomology(const FiniteSimplicialSet& x, int d_max) {
  if (d_max < 0) throw InvalidArgument("cohomology: negative degree");
  if (d_max + 1 > x.n_max())
    throw OutOfBound("cohomology through degree " + std::to_string(d_max) + " needs level " +
                     std::to_string(d_max + 1) + " (have " + std::to_string(x.n_max()) + ")");
  SimplicialCohomology h;
  h.d_max = d_max;
  std::vector<F2Matrix> d;
  for (int n = 0; n <= d_max; ++n) d.push_back(coboundary(x, n));
  for (int n = 0; n <= d_max; ++n)
    h.groups.push_back(homology(detail::sz(x.nondeg_count(n)), n > 0 ? &d[detail::sz(n - 1)] : nullptr, &d[detail::sz(n)]));
  return h;
}

/// Pullback of a normalized n-cochain on y along f: x -> y.
inline BitVec pullback(const SimplicialMap& f, const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, int n,
                       const BitVec& c) {
  BitVec out(detail::sz(x.nondeg_count(n)));
  for (int i = 0; i < x.nondeg_count(n); ++i) {
    const int j = y.nondeg_index(n, f(n, x.nondegenerate(n)[detail::sz(i)]));
    if (j >= 0 && c.get(detail::sz(j))) out.set(detail::sz(i));
  }
  return out;
}

/// Alexander-Whitney cup product of a p-cochain and a q-cochain.
inline BitVec cup(const FiniteSimplicialSet& x, const BitVec& a, int p, const BitVec& b, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("cup: negative degree");
  if (p + q > x.n_max()) throw OutOfBound("cup: degree " + std::to_string(p + q) + " beyond the level bound");
  if (a.size() != detail::sz(x.nondeg_count(p)) || b.size() != detail::sz(x.nondeg_count(q)))
    throw InvalidArgument("cup: cochain sizes do not match the simplicial set");
  BitVec out(detail::sz(x.nondeg_count(p + q)));
  for (int i = 0; i < x.nondeg_count(p + q); ++i) {
    int front = x.nondegenerate(p + q)[detail::sz(i)], back = front;
    for (int l = p + q; l > p; --l) front = x.face(l, l, front);  // drop the last vertex
    for (int l = p + q; l > q; --l) back = x.face(l, 0, back);    // drop the first vertex
    const int fi = x.nondeg_index(p, front), bi = x.nondeg_index(q, back);
    if (fi >= 0 && bi >= 0 && a.get(detail::sz(fi)) && b.get(detail::sz(bi))) out.set(detail::sz(i));
  }
  return out;
}

/// The unit cochain (1 on every vertex).
inline BitVec unit_cochain(const FiniteSimplicialSet& x) {
  BitVec u(detail::sz(x.nondeg_count(0)));
  for (int i = 0; i < x.nondeg_count(0); ++i) u.set(detail::sz(i));
  return u;
}

/// H*(X) through degree d_max as a graded algebra (basis: the cohomology
/// representatives, product: cup). X must be connected.
inline GradedAlgebra algebra_from_space(const FiniteSimplicialSet& x, int d_max,
                                        const SimplicialCohomology* precomputed = nullptr) {
  const SimplicialCohomology h = precomputed ? *precomputed : cohomology(x, d_max);
  if (h.dim(0) != 1) throw InvalidArgument("algebra_from_space: " + x.name() + " is not connected");
  std::vector<int> dims = h.dims();
  dims.resize(detail::sz(d_max) + 1);
  // normalize the degree-0 basis to the unit class
  std::vector<std::vector<BitVec>> reps;
  for (int n = 0; n <= d_max; ++n) reps.push_back(h.reps(n));
  reps[0] = {unit_cochain(x)};
  return GradedAlgebra(
      d_max, dims,
      [&](int a, int i, int b, int j) {
        const BitVec c = cup(x, reps[detail::sz(a)][detail::sz(i)], a, reps[detail::sz(b)][detail::sz(j)], b);
        if (a + b == 0) return BitVec::unit(1, 0);
        return h.coords(a + b, c);
      },
      x.name());
}

}  // namespace steem
