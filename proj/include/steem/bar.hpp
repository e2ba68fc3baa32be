#pragma once

// Bigraded chain complexes, bar constructions, Tor, and normalized complexes
// of simplicial graded vector spaces.

#include <map>
#include <string>
#include <vector>

#include "graded_algebra.hpp"

namespace steem {

/// Spaces C^{-s,t} for 0 <= s <= s_max, 0 <= t <= t_max with differentials
/// d: C^{-s,t} -> C^{-s+1,t} (s >= 1), row convention.
struct BigradedComplex {
  int s_max = 0;
  int t_max = 0;
  std::vector<std::vector<int>> dims;       // [s][t]
  std::vector<std::vector<F2Matrix>> diff;  // [s][t], empty row for s = 0

  int dim(int s, int t) const {
    if (s < 0 || s > s_max || t < 0 || t > t_max) return 0;
    return dims[detail::sz(s)][detail::sz(t)];
  }
  const F2Matrix& d(int s, int t) const { return diff[detail::sz(s)][detail::sz(t)]; }

  /// First (s, t) where d o d != 0.
  std::optional<std::pair<int, int>> dd_violation() const {
    for (int s = 2; s <= s_max; ++s)
      for (int t = 0; t <= t_max; ++t)
        if (!d(s, t).then(d(s - 1, t)).is_zero()) return std::make_pair(s, t);
    return std::nullopt;
  }
  void validate() const {
    if (auto v = dd_violation())
      throw InvariantViolation("d o d != 0 at (" + std::to_string(-v->first) + "," + std::to_string(v->second) + ")");
  }
};

/// Homology of a bigraded complex for s <= s_max - 1 (the top row has no
/// incoming differential inside the complex and is not reported).
struct BigradedHomology {
  int s_max = 0;
  int t_max = 0;
  std::vector<std::vector<HomologyGroup>> groups;  // [s][t]

  int dim(int s, int t) const {
    if (s < 0 || s > s_max || t < 0 || t > t_max) return 0;
    return static_cast<int>(groups[detail::sz(s)][detail::sz(t)].dim());
  }
  const HomologyGroup& at(int s, int t) const { return groups[detail::sz(s)][detail::sz(t)]; }
  std::map<std::pair<int, int>, int> table() const {
    std::map<std::pair<int, int>, int> out;
    for (int s = 0; s <= s_max; ++s)
      for (int t = 0; t <= t_max; ++t) out[{s, t}] = dim(s, t);
    return out;
  }
};

inline BigradedHomology homology(const BigradedComplex& c) {
  if (c.s_max < 1) throw InvalidArgument("homology needs at least two rows");
  BigradedHomology h;
  h.s_max = c.s_max - 1;
  h.t_max = c.t_max;
  for (int s = 0; s <= h.s_max; ++s) {
    std::vector<HomologyGroup> row;
    for (int t = 0; t <= c.t_max; ++t)
      row.push_back(homology(detail::sz(c.dim(s, t)), &c.d(s + 1, t), s > 0 ? &c.d(s, t) : nullptr));
    h.groups.push_back(std::move(row));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Bar constructions

namespace detail {

inline std::vector<TensorBasis::Factor> bar_factors(const GradedModule& m, const GradedAlgebra& a,
                                                    const GradedModule& n, int s, bool reduced) {
  std::vector<TensorBasis::Factor> f;
  f.push_back({m.dims(), 0});
  for (int i = 0; i < s; ++i) f.push_back({a.dims(), reduced ? 1 : 0});
  f.push_back({n.dims(), 0});
  return f;
}

/// Applies the bar differential to one basis tuple, accumulating into `out`
/// (indexed by the (s-1, t) basis).
inline void bar_boundary(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n, int s,
                         const std::vector<int>& tup, const TensorBasis& target, BitVec& out) {
  // tup = (deg, idx) pairs: M, A_1..A_s, N
  auto emit_single = [&](std::vector<int> base, std::size_t pos, int deg, const BitVec& coords) {
    for (auto c : coords.ones()) {
      base[2 * pos] = deg;
      base[2 * pos + 1] = static_cast<int>(c);
      if (auto k = target.find(base)) out.flip(*k);
    }
  };
  const std::size_t r = static_cast<std::size_t>(s) + 2;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    // merge factor i and i+1
    const int da = tup[2 * i], ia = tup[2 * i + 1], db = tup[2 * i + 2], ib = tup[2 * i + 3];
    BitVec prod;
    if (i == 0) {
      prod = m.basis_act(db, ib, da, ia);  // m . a_1
    } else if (i + 2 == r) {
      prod = n.basis_act(da, ia, db, ib);  // a_s . n
    } else {
      prod = a.basis_product(da, ia, db, ib);
    }
    if (prod.none()) continue;
    std::vector<int> base;
    base.reserve(2 * (r - 1));
    for (std::size_t q = 0; q < r; ++q) {
      if (q == i + 1) continue;
      base.push_back(tup[2 * q]);
      base.push_back(tup[2 * q + 1]);
    }
    emit_single(base, i, da + db, prod);
  }
}

}  // namespace detail

/// The bar complex with terms M (x) Abar^{(x) s} (x) N (reduced) or
/// M (x) A^{(x) s} (x) N (unreduced) and the alternating-face differential.
inline BigradedComplex bar_complex(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n, int s_max,
                                   int t_max, bool reduced = true) {
  if (s_max < 0 || t_max < 0) throw InvalidArgument("bar_complex: negative window");
  if (t_max > a.bound() || t_max > m.bound() || t_max > n.bound())
    throw OutOfBound("bar_complex: t_max " + std::to_string(t_max) + " exceeds an input bound");
  BigradedComplex c;
  c.s_max = s_max;
  c.t_max = t_max;
  std::vector<std::vector<TensorBasis>> bases(detail::sz(s_max) + 1);
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) bases[detail::sz(s)].emplace_back(detail::bar_factors(m, a, n, s, reduced), t);
  c.dims.resize(detail::sz(s_max) + 1);
  c.diff.resize(detail::sz(s_max) + 1);
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) {
      const auto& src = bases[detail::sz(s)][detail::sz(t)];
      c.dims[detail::sz(s)].push_back(static_cast<int>(src.size()));
      if (s == 0) {
        c.diff[0].emplace_back(src.size(), 0);
        continue;
      }
      const auto& dst = bases[detail::sz(s - 1)][detail::sz(t)];
      F2Matrix d(src.size(), dst.size());
      for (std::size_t i = 0; i < src.size(); ++i) detail::bar_boundary(a, m, n, s, src.tuple(i), dst, d.row(i));
      c.diff[detail::sz(s)].push_back(std::move(d));
    }
  c.validate();
  return c;
}

/// Basis tuple of the bar term (s, t) at index i; same enumeration as
/// bar_complex.
inline TensorBasis bar_basis(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n, int s, int t,
                             bool reduced = true) {
  return TensorBasis(detail::bar_factors(m, a, n, s, reduced), t);
}

struct TorResult {
  BigradedComplex complex;
  BigradedHomology homology;
  int dim(int s, int t) const { return homology.dim(s, t); }
  std::map<std::pair<int, int>, int> table() const { return homology.table(); }
};

/// Tor^A_{s,t}(M, N) for s <= s_max, t <= t_max via the bar complex.
inline TorResult tor(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n, int s_max, int t_max,
                     bool reduced = true) {
  TorResult r;
  r.complex = bar_complex(a, m, n, s_max + 1, t_max, reduced);
  r.homology = homology(r.complex);
  return r;
}

/// M (x)_A N in degrees <= t_max computed directly as a cokernel of
/// m a (x) n - m (x) a n, independent of the bar complex.
inline std::vector<int> tensor_over(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n, int t_max) {
  std::vector<int> out;
  for (int t = 0; t <= t_max; ++t) {
    TensorBasis mn({{m.dims(), 0}, {n.dims(), 0}}, t);
    std::vector<BitVec> rel;
    for (int x = 1; x <= t; ++x)
      for (int dm = 0; dm + x <= t; ++dm) {
        const int dn = t - x - dm;
        for (int i = 0; i < a.dim(x); ++i)
          for (int j = 0; j < m.dim(dm); ++j)
            for (int k = 0; k < n.dim(dn); ++k) {
              BitVec v(mn.size());
              for (auto c : m.basis_act(x, i, dm, j).ones()) v.flip(mn.index({dm + x, static_cast<int>(c), dn, k}));
              for (auto c : n.basis_act(x, i, dn, k).ones()) v.flip(mn.index({dm, j, dn + x, static_cast<int>(c)}));
              rel.push_back(v);
            }
      }
    out.push_back(static_cast<int>(mn.size() - rref(mn.size(), rel).size()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial graded vector spaces

/// Levels 0..n_max, each graded through t_max, with faces d_i: level n ->
/// n - 1 (0 <= i <= n) and degeneracies s_j: level n -> n + 1 (0 <= j <= n,
/// n + 1 <= n_max).
struct SimplicialGradedVS {
  int n_max = 0;
  int t_max = 0;
  std::vector<std::vector<int>> dims;                             // [n][t]
  std::vector<std::vector<std::vector<F2Matrix>>> faces;          // [n][i][t]
  std::vector<std::vector<std::vector<F2Matrix>>> degeneracies;   // [n][j][t]

  int dim(int n, int t) const { return dims[detail::sz(n)][detail::sz(t)]; }
  const F2Matrix& face(int n, int i, int t) const { return faces[detail::sz(n)][detail::sz(i)][detail::sz(t)]; }
  const F2Matrix& degen(int n, int j, int t) const {
    return degeneracies[detail::sz(n)][detail::sz(j)][detail::sz(t)];
  }

  std::optional<std::string> identity_violation() const {
    auto tag = [](const char* what, int n, int i, int j, int t) {
      return std::string(what) + " at level " + std::to_string(n) + " (i=" + std::to_string(i) +
             ", j=" + std::to_string(j) + ", t=" + std::to_string(t) + ")";
    };
    for (int t = 0; t <= t_max; ++t) {
      // d_i d_j = d_{j-1} d_i for i < j  (row convention: first d_j then d_i)
      for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (!(face(n, j, t).then(face(n - 1, i, t)) == face(n, i, t).then(face(n - 1, j - 1, t))))
              return tag("d_i d_j", n, i, j, t);
      // s_i s_j = s_{j+1} s_i for i <= j
      for (int n = 0; n + 2 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (!(degen(n, j, t).then(degen(n + 1, i, t)) == degen(n, i, t).then(degen(n + 1, j + 1, t))))
              return tag("s_i s_j", n, i, j, t);
      // mixed
      for (int n = 0; n + 1 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const F2Matrix lhs = degen(n, j, t).then(face(n + 1, i, t));
            F2Matrix rhs;
            if (i < j) {
              if (n < 1) continue;
              rhs = face(n, i, t).then(degen(n - 1, j - 1, t));
            } else if (i == j || i == j + 1) {
              rhs = F2Matrix::identity(detail::sz(dim(n, t)));
            } else {
              if (n < 1) continue;
              rhs = face(n, i - 1, t).then(degen(n - 1, j, t));
            }
            if (!(lhs == rhs)) return tag("d_i s_j", n, i, j, t);
          }
    }
    return std::nullopt;
  }
};

/// The simplicial bar construction B_n = M (x) A^{(x) n} (x) N.
inline SimplicialGradedVS simplicial_bar(const GradedAlgebra& a, const GradedModule& m, const GradedModule& n,
                                         int n_max, int t_max) {
  if (t_max > a.bound() || t_max > m.bound() || t_max > n.bound()) throw OutOfBound("simplicial_bar: t_max too large");
  SimplicialGradedVS x;
  x.n_max = n_max;
  x.t_max = t_max;
  std::vector<std::vector<TensorBasis>> bases(detail::sz(n_max) + 1);
  for (int l = 0; l <= n_max; ++l) {
    std::vector<int> row;
    for (int t = 0; t <= t_max; ++t) {
      bases[detail::sz(l)].emplace_back(detail::bar_factors(m, a, n, l, false), t);
      row.push_back(static_cast<int>(bases[detail::sz(l)].back().size()));
    }
    x.dims.push_back(row);
  }
  x.faces.resize(detail::sz(n_max) + 1);
  x.degeneracies.resize(detail::sz(n_max) + 1);
  for (int l = 0; l <= n_max; ++l) {
    const std::size_t r = detail::sz(l) + 2;
    if (l >= 1)
      for (int i = 0; i <= l; ++i) {
        std::vector<F2Matrix> per_t;
        for (int t = 0; t <= t_max; ++t) {
          const auto& src = bases[detail::sz(l)][detail::sz(t)];
          const auto& dst = bases[detail::sz(l - 1)][detail::sz(t)];
          F2Matrix f(src.size(), dst.size());
          const std::size_t q = detail::sz(i);  // merge factors q and q+1
          for (std::size_t row = 0; row < src.size(); ++row) {
            const auto& tup = src.tuple(row);
            const int da = tup[2 * q], ia = tup[2 * q + 1], db = tup[2 * q + 2], ib = tup[2 * q + 3];
            BitVec prod;
            if (q == 0) prod = m.basis_act(db, ib, da, ia);
            else if (q + 2 == r) prod = n.basis_act(da, ia, db, ib);
            else prod = a.basis_product(da, ia, db, ib);
            std::vector<int> base;
            for (std::size_t p = 0; p < r; ++p) {
              if (p == q + 1) continue;
              base.push_back(tup[2 * p]);
              base.push_back(tup[2 * p + 1]);
            }
            for (auto c : prod.ones()) {
              base[2 * q] = da + db;
              base[2 * q + 1] = static_cast<int>(c);
              f.flip(row, dst.index(base));
            }
          }
          per_t.push_back(std::move(f));
        }
        x.faces[detail::sz(l)].push_back(std::move(per_t));
      }
    else
      x.faces[0].clear();
    if (l + 1 <= n_max)
      for (int j = 0; j <= l; ++j) {
        std::vector<F2Matrix> per_t;
        for (int t = 0; t <= t_max; ++t) {
          const auto& src = bases[detail::sz(l)][detail::sz(t)];
          const auto& dst = bases[detail::sz(l + 1)][detail::sz(t)];
          F2Matrix s(src.size(), dst.size());
          for (std::size_t row = 0; row < src.size(); ++row) {
            std::vector<int> tup = src.tuple(row);
            // insert the unit after factor j (factor j+1 of the result)
            tup.insert(tup.begin() + 2 * (j + 1), {0, 0});
            s.set(row, dst.index(tup));
          }
          per_t.push_back(std::move(s));
        }
        x.degeneracies[detail::sz(l)].push_back(std::move(per_t));
      }
  }
  if (auto v = x.identity_violation()) throw SimplicialIdentityViolation("simplicial_bar: " + *v);
  return x;
}

struct NormalizedResult {
  BigradedComplex normalized;  // N_n = cap_{i>=1} ker d_i with d_0, in coordinates of a basis
  std::vector<std::vector<std::vector<BitVec>>> basis;  // [n][t]: basis of N_n inside level n
  BigradedComplex quotient;    // C_n / D_n with sum of faces
  bool isomorphic = false;     // N -> C -> C/D is an isomorphism of complexes
};

/// The normalized complex of a simplicial graded space, its model as the
/// quotient by degeneracies, and a check that the canonical map between them
/// is an isomorphism of complexes.
inline NormalizedResult normalized_complex(const SimplicialGradedVS& x) {
  if (auto v = x.identity_violation()) throw SimplicialIdentityViolation("normalized_complex: " + *v);
  NormalizedResult r;
  r.normalized.s_max = r.quotient.s_max = x.n_max;
  r.normalized.t_max = r.quotient.t_max = x.t_max;
  r.basis.resize(detail::sz(x.n_max) + 1);
  std::vector<std::vector<Quotient>> quots(detail::sz(x.n_max) + 1);
  for (int n = 0; n <= x.n_max; ++n) {
    std::vector<int> nd, qd;
    for (int t = 0; t <= x.t_max; ++t) {
      const auto dim = detail::sz(x.dim(n, t));
      std::vector<BitVec> cur;
      for (std::size_t i = 0; i < dim; ++i) cur.push_back(BitVec::unit(dim, i));
      for (int i = 1; i <= n; ++i) cur = intersect(dim, cur, kernel(x.face(n, i, t)));
      r.basis[detail::sz(n)].push_back(rref(dim, cur));
      nd.push_back(static_cast<int>(r.basis[detail::sz(n)].back().size()));
      std::vector<BitVec> degenerate;
      if (n >= 1)
        for (int j = 0; j < n; ++j)
          for (const auto& v : gaussian(x.degen(n - 1, j, t)).image) degenerate.push_back(v);
      std::vector<BitVec> all;
      for (std::size_t i = 0; i < dim; ++i) all.push_back(BitVec::unit(dim, i));
      quots[detail::sz(n)].emplace_back(dim, all, degenerate);
      qd.push_back(static_cast<int>(quots[detail::sz(n)].back().dim()));
    }
    r.normalized.dims.push_back(nd);
    r.quotient.dims.push_back(qd);
  }
  r.normalized.diff.resize(detail::sz(x.n_max) + 1);
  r.quotient.diff.resize(detail::sz(x.n_max) + 1);
  bool iso = true;
  for (int n = 0; n <= x.n_max; ++n)
    for (int t = 0; t <= x.t_max; ++t) {
      const auto& nb = r.basis[detail::sz(n)][detail::sz(t)];
      const auto& q = quots[detail::sz(n)][detail::sz(t)];
      // canonical map N_n -> C_n / D_n
      F2Matrix can(nb.size(), q.dim());
      for (std::size_t i = 0; i < nb.size(); ++i) can.row(i) = q.coords(nb[i]);
      if (rank(can) != nb.size() || nb.size() != q.dim()) iso = false;
      if (n == 0) {
        r.normalized.diff[0].emplace_back(nb.size(), 0);
        r.quotient.diff[0].emplace_back(q.dim(), 0);
        continue;
      }
      const auto& nb1 = r.basis[detail::sz(n - 1)][detail::sz(t)];
      const auto& q1 = quots[detail::sz(n - 1)][detail::sz(t)];
      const auto dim1 = detail::sz(x.dim(n - 1, t));
      Echelon e(dim1);
      e.reserve_tracking(nb1.size());
      for (const auto& v : nb1) e.insert(v);
      F2Matrix dn(nb.size(), nb1.size());
      for (std::size_t i = 0; i < nb.size(); ++i) {
        auto [rem, combo] = e.reduce_tracked(x.face(n, 0, t).apply(nb[i]));
        if (rem.any()) throw InvariantViolation("d_0 does not preserve the normalized complex");
        for (std::size_t k = 0; k < nb1.size(); ++k)
          if (combo.get(k)) dn.set(i, k);
      }
      r.normalized.diff[detail::sz(n)].push_back(dn);
      F2Matrix dq(q.dim(), q1.dim());
      for (std::size_t i = 0; i < q.dim(); ++i) {
        BitVec img(dim1);
        for (int f = 0; f <= n; ++f) img ^= x.face(n, f, t).apply(q.reps()[i]);
        dq.row(i) = q1.coords(img);
      }
      r.quotient.diff[detail::sz(n)].push_back(dq);
      // naturality of the canonical map: can_n . dq = dn . can_{n-1}
      const auto& nb_prev = r.basis[detail::sz(n - 1)][detail::sz(t)];
      F2Matrix can1(nb_prev.size(), q1.dim());
      for (std::size_t i = 0; i < nb_prev.size(); ++i) can1.row(i) = q1.coords(nb_prev[i]);
      if (!(can.then(dq) == dn.then(can1))) iso = false;
    }
  r.normalized.validate();
  r.quotient.validate();
  r.isomorphic = iso;
  return r;
}

}  // namespace steem
