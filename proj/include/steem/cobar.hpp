#pragma once

// The geometric cobar construction B^n = X x Y^n x Z of a diagram
// X -f-> Y <-g- Z, its levelwise cohomology in Kunneth coordinates, and the
// comparison of the resulting row with the algebraic bar E1.
//
// Conventions: coface d^0 inserts f(x) in front of the Y factors, d^i
// (1 <= i <= n) repeats y_i, d^{n+1} appends g(z); codegeneracy s^j deletes
// y_{j+1}. The identities are verified on construction.

#include <functional>
#include <string>
#include <vector>

#include "bar.hpp"
#include "simplicial.hpp"

namespace steem {

struct CosimplicialSpace {
  std::vector<FiniteSimplicialSet> levels;             // B^0..B^N
  std::vector<std::vector<SimplicialMap>> cofaces;     // [n][i]: B^n -> B^{n+1}
  std::vector<std::vector<SimplicialMap>> codegens;    // [n][j]: B^{n+1} -> B^n

  int top() const { return static_cast<int>(levels.size()) - 1; }

  std::optional<std::string> identity_violation() const {
    auto same = [](const SimplicialMap& a, const SimplicialMap& b) { return a.at == b.at; };
    auto tag = [](const char* what, int n, int i, int j) {
      return std::string(what) + " at level " + std::to_string(n) + " (i=" + std::to_string(i) +
             ", j=" + std::to_string(j) + ")";
    };
    const int N = top();
    for (int n = 0; n + 2 <= N; ++n)
      for (int j = 1; j <= n + 2; ++j)
        for (int i = 0; i < j; ++i)
          if (!same(compose(cofaces[detail::sz(n)][detail::sz(i)], cofaces[detail::sz(n + 1)][detail::sz(j)]),
                    compose(cofaces[detail::sz(n)][detail::sz(j - 1)], cofaces[detail::sz(n + 1)][detail::sz(i)])))
            return tag("d^j d^i", n, i, j);
    for (int n = 0; n + 2 <= N; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (!same(compose(codegens[detail::sz(n + 1)][detail::sz(i)], codegens[detail::sz(n)][detail::sz(j)]),
                    compose(codegens[detail::sz(n + 1)][detail::sz(j + 1)], codegens[detail::sz(n)][detail::sz(i)])))
            return tag("s^j s^i", n, i, j);
    for (int n = 0; n + 1 <= N; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          const auto lhs = compose(cofaces[detail::sz(n)][detail::sz(i)], codegens[detail::sz(n)][detail::sz(j)]);
          if (i == j || i == j + 1) {
            if (!same(lhs, identity_map(levels[detail::sz(n)]))) return tag("s^j d^i", n, i, j);
          } else if (n >= 1) {
            const auto rhs =
                i < j ? compose(codegens[detail::sz(n - 1)][detail::sz(j - 1)], cofaces[detail::sz(n - 1)][detail::sz(i)])
                      : compose(codegens[detail::sz(n - 1)][detail::sz(j)], cofaces[detail::sz(n - 1)][detail::sz(i - 1)]);
            if (!same(lhs, rhs)) return tag("s^j d^i", n, i, j);
          }
        }
    return std::nullopt;
  }
};

namespace detail {

/// Mixed-radix coding of simplex tuples of an iterated product.
struct TupleCode {
  std::vector<const FiniteSimplicialSet*> factors;
  int encode(int level, const std::vector<int>& t) const {
    int id = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) id = id * factors[i]->count(level) + t[i];
    return id;
  }
  std::vector<int> decode(int level, int id) const {
    std::vector<int> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      const int c = factors[i]->count(level);
      t[i] = id % c;
      id /= c;
    }
    return t;
  }
  int count(int level) const {
    int c = 1;
    for (auto* f : factors) c *= f->count(level);
    return c;
  }
};

inline FiniteSimplicialSet iterated_product(const std::vector<const FiniteSimplicialSet*>& fs) {
  FiniteSimplicialSet p = *fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) p = product(p, *fs[i]);
  return p;
}

inline SimplicialMap tuple_map(const TupleCode& src, const TupleCode& dst, int L,
                               const std::function<std::vector<int>(int, const std::vector<int>&)>& fn) {
  SimplicialMap m;
  for (int l = 0; l <= L; ++l) {
    std::vector<int> row;
    for (int id = 0; id < src.count(l); ++id) row.push_back(dst.encode(l, fn(l, src.decode(l, id))));
    m.at.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

struct CobarDiagram {
  FiniteSimplicialSet x, y, z;
  SimplicialMap f, g;  // f: X -> Y, g: Z -> Y
};

/// pt -> Y <- pt through the basepoint.
inline CobarDiagram path_loop_diagram(const FiniteSimplicialSet& y) {
  auto pt = point(y.n_max());
  return {pt, y, pt, constant_map(pt, y), constant_map(pt, y)};
}

inline CosimplicialSpace geometric_cobar(const CobarDiagram& dg, int levels) {
  if (auto v = simplicial_map_violation(dg.f, dg.x, dg.y)) throw InvalidArgument("geometric_cobar: f " + *v);
  if (auto v = simplicial_map_violation(dg.g, dg.z, dg.y)) throw InvalidArgument("geometric_cobar: g " + *v);
  const int L = std::min({dg.x.n_max(), dg.y.n_max(), dg.z.n_max()});
  CosimplicialSpace c;
  std::vector<detail::TupleCode> codes;
  for (int n = 0; n <= levels; ++n) {
    detail::TupleCode code;
    code.factors.push_back(&dg.x);
    for (int i = 0; i < n; ++i) code.factors.push_back(&dg.y);
    code.factors.push_back(&dg.z);
    auto b = detail::iterated_product(code.factors);
    b.set_name("B^" + std::to_string(n));
    c.levels.push_back(std::move(b));
    codes.push_back(code);
  }
  for (int n = 0; n + 1 <= levels; ++n) {
    std::vector<SimplicialMap> cf, cd;
    for (int i = 0; i <= n + 1; ++i)
      cf.push_back(detail::tuple_map(codes[detail::sz(n)], codes[detail::sz(n + 1)], L,
                                     [&, i, n](int l, const std::vector<int>& t) {
                                       std::vector<int> r = t;
                                       if (i == 0) r.insert(r.begin() + 1, dg.f(l, t.front()));
                                       else if (i == n + 1) r.insert(r.end() - 1, dg.g(l, t.back()));
                                       else r.insert(r.begin() + i + 1, t[detail::sz(i)]);
                                       return r;
                                     }));
    for (int j = 0; j <= n; ++j)
      cd.push_back(detail::tuple_map(codes[detail::sz(n + 1)], codes[detail::sz(n)], L,
                                     [j](int, const std::vector<int>& t) {
                                       std::vector<int> r = t;
                                       r.erase(r.begin() + j + 1);
                                       return r;
                                     }));
    c.cofaces.push_back(std::move(cf));
    c.codegens.push_back(std::move(cd));
  }
  if (auto v = c.identity_violation()) throw SimplicialIdentityViolation("geometric_cobar: " + *v);
  return c;
}

/// The homotopy-invariant-free fiber product X x_Y Z (pairs with f(x) = g(z))
/// and its coaugmentation into B^0 = X x Z.
struct Coaugmentation {
  FiniteSimplicialSet fiber_product;
  SimplicialMap into_b0;
};

inline Coaugmentation coaugmentation(const CobarDiagram& dg) {
  auto xz = product(dg.x, dg.z);
  const int L = xz.n_max();
  std::vector<std::vector<bool>> member;
  for (int l = 0; l <= L; ++l) {
    std::vector<bool> row;
    for (int a = 0; a < dg.x.count(l); ++a)
      for (int b = 0; b < dg.z.count(l); ++b) row.push_back(dg.f(l, a) == dg.g(l, b));
    member.push_back(std::move(row));
  }
  Coaugmentation c;
  c.fiber_product = subcomplex(xz, member, "fiber(" + dg.x.name() + "," + dg.z.name() + ")");
  for (int l = 0; l <= L; ++l) {
    std::vector<int> row;
    for (int s = 0; s < xz.count(l); ++s)
      if (member[detail::sz(l)][detail::sz(s)]) row.push_back(s);
    c.into_b0.at.push_back(std::move(row));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Cohomology of the cobar levels

/// H^t(B^n) with the Kunneth basis: tuples of cohomology basis classes of
/// X, Y (n times), Z, ordered as TensorBasis (all factors from degree 0).
struct CobarRow {
  int n_max = 0;
  int t_max = 0;
  SimplicialCohomology hx, hy, hz;
  std::vector<std::vector<TensorBasis>> bases;   // [n][t]
  std::vector<std::vector<F2Matrix>> kunneth;    // [n][t]: tuple -> class coordinates
  bool kunneth_iso = true;
  SimplicialGradedVS row;                        // faces/degeneracies in Kunneth coordinates
};

namespace detail {

/// Cross product of the given cocycles (one per factor) on the nondegenerate
/// t-simplices of the iterated product.
inline BitVec cross_product(const FiniteSimplicialSet& b, const TupleCode& code, int t,
                            const std::vector<const BitVec*>& cocycles, const std::vector<int>& degrees) {
  BitVec out(sz(b.nondeg_count(t)));
  for (int i = 0; i < b.nondeg_count(t); ++i) {
    const auto tup = code.decode(t, b.nondegenerate(t)[sz(i)]);
    bool v = true;
    int start = 0;
    for (std::size_t q = 0; q < tup.size() && v; ++q) {
      const auto& f = *code.factors[q];
      const int p = degrees[q];
      // the face of tup[q] spanned by vertices start .. start + p
      int s = tup[q];
      for (int l = t; l > start + p; --l) s = f.face(l, l, s);
      for (int l = start + p; l > p; --l) s = f.face(l, 0, s);
      const int k = f.nondeg_index(p, s);
      v = k >= 0 && cocycles[q]->get(sz(k));
      start += p;
    }
    if (v) out.set(sz(i));
  }
  return out;
}

}  // namespace detail

inline CobarRow cobar_row(const CobarDiagram& dg, const CosimplicialSpace& c, int t_max) {
  const int N = c.top();
  CobarRow r;
  r.n_max = N;
  r.t_max = t_max;
  r.hx = cohomology(dg.x, t_max);
  r.hy = cohomology(dg.y, t_max);
  r.hz = cohomology(dg.z, t_max);
  std::vector<detail::TupleCode> codes;
  std::vector<SimplicialCohomology> hb;
  std::vector<std::vector<std::vector<BitVec>>> cocycles(detail::sz(N) + 1);  // [n][t][tuple]
  std::vector<std::vector<F2Matrix>> kinv(detail::sz(N) + 1);
  for (int n = 0; n <= N; ++n) {
    detail::TupleCode code;
    std::vector<const SimplicialCohomology*> hs{&r.hx};
    code.factors.push_back(&dg.x);
    for (int i = 0; i < n; ++i) {
      code.factors.push_back(&dg.y);
      hs.push_back(&r.hy);
    }
    code.factors.push_back(&dg.z);
    hs.push_back(&r.hz);
    codes.push_back(code);
    hb.push_back(cohomology(c.levels[detail::sz(n)], t_max));
    std::vector<TensorBasis::Factor> factors;
    for (auto* h : hs) factors.push_back({h->dims(), 0});
    r.bases.emplace_back();
    r.kunneth.emplace_back();
    for (int t = 0; t <= t_max; ++t) {
      TensorBasis tb(factors, t);
      F2Matrix k(tb.size(), detail::sz(hb.back().dim(t)));
      std::vector<BitVec> cs;
      for (std::size_t u = 0; u < tb.size(); ++u) {
        const auto& tup = tb.tuple(u);
        std::vector<const BitVec*> reps;
        std::vector<int> degs;
        for (std::size_t q = 0; q < hs.size(); ++q) {
          degs.push_back(tup[2 * q]);
          reps.push_back(&hs[q]->reps(tup[2 * q])[detail::sz(tup[2 * q + 1])]);
        }
        cs.push_back(detail::cross_product(c.levels[detail::sz(n)], code, t, reps, degs));
        k.row(u) = hb.back().coords(t, cs.back());
      }
      auto inv = inverse(k);
      if (!inv) {
        r.kunneth_iso = false;
        inv = F2Matrix(k.cols(), k.rows());
      }
      kinv[detail::sz(n)].push_back(*inv);
      r.kunneth[detail::sz(n)].push_back(std::move(k));
      r.bases[detail::sz(n)].push_back(std::move(tb));
      cocycles[detail::sz(n)].push_back(std::move(cs));
    }
  }
  if (!r.kunneth_iso) throw InvariantViolation("cobar_row: Kunneth map is not an isomorphism");
  auto& v = r.row;
  v.n_max = N;
  v.t_max = t_max;
  for (int n = 0; n <= N; ++n) {
    std::vector<int> d;
    for (int t = 0; t <= t_max; ++t) d.push_back(static_cast<int>(r.bases[detail::sz(n)][detail::sz(t)].size()));
    v.dims.push_back(d);
  }
  v.faces.resize(detail::sz(N) + 1);
  v.degeneracies.resize(detail::sz(N) + 1);
  // face i at level n+1 is (d^i)^*: H(B^{n+1}) -> H(B^n); degeneracy j at
  // level n is (s^j)^*: H(B^n) -> H(B^{n+1})
  for (int n = 0; n + 1 <= N; ++n) {
    const auto& src = c.levels[detail::sz(n + 1)];
    const auto& dst = c.levels[detail::sz(n)];
    for (int i = 0; i <= n + 1; ++i) {
      std::vector<F2Matrix> per_t;
      for (int t = 0; t <= t_max; ++t) {
        const auto& cs = cocycles[detail::sz(n + 1)][detail::sz(t)];
        F2Matrix m(cs.size(), detail::sz(v.dim(n, t)));
        for (std::size_t u = 0; u < cs.size(); ++u)
          m.row(u) = kinv[detail::sz(n)][detail::sz(t)].apply(
              hb[detail::sz(n)].coords(t, pullback(c.cofaces[detail::sz(n)][detail::sz(i)], dst, src, t, cs[u])));
        per_t.push_back(std::move(m));
      }
      v.faces[detail::sz(n + 1)].push_back(std::move(per_t));
    }
    for (int j = 0; j <= n; ++j) {
      std::vector<F2Matrix> per_t;
      for (int t = 0; t <= t_max; ++t) {
        const auto& cs = cocycles[detail::sz(n)][detail::sz(t)];
        F2Matrix m(cs.size(), detail::sz(v.dim(n + 1, t)));
        for (std::size_t u = 0; u < cs.size(); ++u)
          m.row(u) = kinv[detail::sz(n + 1)][detail::sz(t)].apply(
              hb[detail::sz(n + 1)].coords(t, pullback(c.codegens[detail::sz(n)][detail::sz(j)], src, dst, t, cs[u])));
        per_t.push_back(std::move(m));
      }
      v.degeneracies[detail::sz(n)].push_back(std::move(per_t));
    }
  }
  if (auto w = v.identity_violation()) throw SimplicialIdentityViolation("cobar_row: " + *w);
  return r;
}

/// f^*: H*Y -> H*X as an algebra map in cohomology-basis coordinates.
inline AlgebraMap induced_algebra_map(const SimplicialMap& f, const FiniteSimplicialSet& x,
                                      const FiniteSimplicialSet& y, const SimplicialCohomology& hx,
                                      const SimplicialCohomology& hy) {
  AlgebraMap m;
  for (int t = 0; t <= std::min(hx.d_max, hy.d_max); ++t) {
    F2Matrix a(detail::sz(hy.dim(t)), detail::sz(hx.dim(t)));
    for (int i = 0; i < hy.dim(t); ++i) a.row(detail::sz(i)) = hx.coords(t, pullback(f, x, y, t, hy.reps(t)[detail::sz(i)]));
    m.mats.push_back(std::move(a));
  }
  return m;
}

struct CobarComparison {
  bool kunneth_iso = false;
  bool degeneracies_span_units = false;  // degenerate part = tuples with a unit Y factor
  bool normalized_iso = false;           // normalized complex = quotient by degeneracies
  bool dims_equal = false;
  bool d1_equal = false;
  std::string witness;
  BigradedComplex geometric;  // quotient model in the positive-tuple basis
  BigradedComplex algebraic;  // reduced bar complex of the cohomology algebra
  bool pass() const { return kunneth_iso && degeneracies_span_units && normalized_iso && dims_equal && d1_equal; }
};

/// Builds B^0..B^{s_max}, the cohomology row in Kunneth coordinates, and
/// compares its normalized complex (dims and d1 matrices) with the reduced bar
/// complex of H*X, H*Y, H*Z for s <= s_max, t <= t_max.
inline CobarComparison compare_cobar_with_bar(const CobarDiagram& dg, int s_max, int t_max) {
  if (std::min({dg.x.n_max(), dg.y.n_max(), dg.z.n_max()}) < t_max + 1)
    throw OutOfBound("compare_cobar_with_bar: simplicial levels must reach t_max + 1");
  CobarComparison out;
  auto c = geometric_cobar(dg, s_max);
  auto r = cobar_row(dg, c, t_max);
  out.kunneth_iso = r.kunneth_iso;

  auto ay = algebra_from_space(dg.y, t_max, &r.hy);
  auto ax = algebra_from_space(dg.x, t_max, &r.hx);
  auto az = algebra_from_space(dg.z, t_max, &r.hz);
  auto fx = induced_algebra_map(dg.f, dg.x, dg.y, r.hx, r.hy);
  auto gz = induced_algebra_map(dg.g, dg.z, dg.y, r.hz, r.hy);
  auto mx = module_via(ay, ax, fx, t_max);
  auto mz = module_via(ay, az, gz, t_max);
  out.algebraic = bar_complex(ay, mx, mz, s_max, t_max, true);

  // degenerate part and the positive-tuple basis
  auto& g = out.geometric;
  g.s_max = s_max;
  g.t_max = t_max;
  g.dims.resize(detail::sz(s_max) + 1);
  g.diff.resize(detail::sz(s_max) + 1);
  out.degeneracies_span_units = true;
  std::vector<std::vector<std::vector<int>>> positive(detail::sz(s_max) + 1);  // [s][t] -> tuple indices
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) {
      const auto& tb = r.bases[detail::sz(s)][detail::sz(t)];
      std::vector<int> pos;
      std::vector<BitVec> units;
      for (std::size_t u = 0; u < tb.size(); ++u) {
        bool unit = false;
        for (int q = 1; q <= s; ++q) unit = unit || tb.tuple(u)[detail::sz(2 * q)] == 0;
        if (unit) units.push_back(BitVec::unit(tb.size(), u));
        else pos.push_back(static_cast<int>(u));
      }
      std::vector<BitVec> degenerate;
      if (s >= 1)
        for (int j = 0; j < s; ++j)
          for (const auto& w : gaussian(r.row.degen(s - 1, j, t)).image) degenerate.push_back(w);
      Echelon eu(tb.size()), ed(tb.size());
      for (const auto& w : units) eu.insert(w);
      for (const auto& w : degenerate) ed.insert(w);
      bool same = eu.dim() == ed.dim();
      for (const auto& w : degenerate) same = same && eu.contains(w);
      if (!same && out.degeneracies_span_units) {
        out.degeneracies_span_units = false;
        out.witness = "degenerate classes differ from unit tuples at (" + std::to_string(-s) + "," +
                      std::to_string(t) + ")";
      }
      g.dims[detail::sz(s)].push_back(static_cast<int>(pos.size()));
      positive[detail::sz(s)].push_back(std::move(pos));
    }
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) {
      const auto& pos = positive[detail::sz(s)][detail::sz(t)];
      if (s == 0) {
        g.diff[0].emplace_back(pos.size(), 0);
        continue;
      }
      const auto& pos1 = positive[detail::sz(s - 1)][detail::sz(t)];
      std::vector<int> where(r.bases[detail::sz(s - 1)][detail::sz(t)].size(), -1);
      for (std::size_t k = 0; k < pos1.size(); ++k) where[detail::sz(pos1[k])] = static_cast<int>(k);
      F2Matrix d(pos.size(), pos1.size());
      for (std::size_t k = 0; k < pos.size(); ++k) {
        BitVec img(r.bases[detail::sz(s - 1)][detail::sz(t)].size());
        for (int i = 0; i <= s; ++i) img ^= r.row.face(s, i, t).row(detail::sz(pos[k]));
        for (auto c2 : img.ones())
          if (where[c2] >= 0) d.flip(k, detail::sz(where[c2]));
      }
      g.diff[detail::sz(s)].push_back(std::move(d));
    }
  g.validate();
  out.normalized_iso = normalized_complex(r.row).isomorphic;

  out.dims_equal = true;
  out.d1_equal = true;
  for (int s = 0; s <= s_max; ++s)
    for (int t = 0; t <= t_max; ++t) {
      if (g.dim(s, t) != out.algebraic.dim(s, t)) {
        if (out.dims_equal && out.witness.empty())
          out.witness = "dims differ at (" + std::to_string(-s) + "," + std::to_string(t) + ")";
        out.dims_equal = false;
        out.d1_equal = false;
      } else if (s >= 1 && !(g.d(s, t) == out.algebraic.d(s, t))) {
        if (out.d1_equal && out.witness.empty())
          out.witness = "d1 differs at (" + std::to_string(-s) + "," + std::to_string(t) + ")";
        out.d1_equal = false;
      }
    }
  return out;
}

}  // namespace steem
