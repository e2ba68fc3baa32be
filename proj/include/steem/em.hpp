#pragma once

// E1 and E2 of the Eilenberg-Moore spectral sequence of X -> Y <- Z from
// cohomology data, collapse certificates, corner maps, the loop-space module
// of a sphere and the loop-space nilpotency checks.

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "bar.hpp"
#include "exactness.hpp"
#include "filtration.hpp"
#include "report.hpp"

namespace steem {

/// Modules over a Steenrod algebra action: Sq^k(a m) = sum Sq^p a Sq^q m.
inline std::optional<std::string> module_cartan_violation(const GradedAlgebra& a, const BoundedUnstableModule& sa,
                                                          const GradedModule& m, const BoundedUnstableModule& sm) {
  const int bound = std::min({a.bound(), m.bound(), sa.bound(), sm.bound()});
  for (int d = 0; d <= bound; ++d)
    if (m.dim(d) != sm.dim(d)) return "module dimension mismatch in degree " + std::to_string(d);
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; x + y <= bound; ++y)
      for (int k = 1; x + y + k <= bound; ++k) {
        const auto& lhs_op = sm.sq_entry(k, x + y);
        if (!lhs_op) continue;
        for (int i = 0; i < a.dim(x); ++i)
          for (int j = 0; j < m.dim(y); ++j) {
            const BitVec lhs = lhs_op->apply(m.basis_act(x, i, y, j));
            BitVec rhs(detail::sz(m.dim(x + y + k)));
            bool known = true;
            for (int p = 0; p <= k; ++p) {
              BitVec u = BitVec::unit(detail::sz(a.dim(x)), detail::sz(i));
              BitVec w = BitVec::unit(detail::sz(m.dim(y)), detail::sz(j));
              if (p > 0) {
                const auto& e = sa.sq_entry(p, x);
                if (!e) { known = false; break; }
                u = e->apply(u);
              }
              if (k - p > 0) {
                const auto& e = sm.sq_entry(k - p, y);
                if (!e) { known = false; break; }
                w = e->apply(w);
              }
              rhs ^= m.act(x + p, u, y + k - p, w);
            }
            if (known && !(lhs == rhs))
              return "Cartan formula fails for Sq^" + std::to_string(k) + " on degrees " + std::to_string(x) + ", " +
                     std::to_string(y);
          }
      }
  return std::nullopt;
}

struct SteenrodData {
  BoundedUnstableModule y, x, z;
};

/// H*X and H*Z as modules over H*Y, optionally with Steenrod actions.
struct EMInput {
  GradedAlgebra y;
  GradedModule x, z;
  std::optional<SteenrodData> steenrod;

  int bound() const { return std::min({y.bound(), x.bound(), z.bound()}); }

  /// Module axioms are checked by the module constructors; this checks the
  /// Steenrod data (shapes and Cartan compatibility).
  void validate() const {
    if (!steenrod) return;
    if (auto v = cartan_violation(y, steenrod->y)) throw InvariantViolation("EMInput: H*Y: " + *v);
    if (auto v = module_cartan_violation(y, steenrod->y, x, steenrod->x))
      throw InvariantViolation("EMInput: H*X: " + *v);
    if (auto v = module_cartan_violation(y, steenrod->y, z, steenrod->z))
      throw InvariantViolation("EMInput: H*Z: " + *v);
  }

  /// X = Z = pt.
  bool pointed() const {
    for (const auto* m : {&x, &z})
      for (int d = 0; d <= m->bound(); ++d)
        if (m->dim(d) != (d == 0 ? 1 : 0)) return false;
    return true;
  }
};

/// The path-loop fibration input pt -> Y <- pt.
inline EMInput path_loop_input(const GradedAlgebra& y, std::optional<BoundedUnstableModule> sy = std::nullopt) {
  EMInput in{y, augmentation_module(y, y.bound()), augmentation_module(y, y.bound()), std::nullopt};
  if (sy) {
    auto pt = trivial_module(0, sy->bound());
    in.steenrod = SteenrodData{*sy, pt, pt};
  }
  in.validate();
  return in;
}

/// Model of a sphere S^m: H*S^m = Lambda(x_m) with the trivial action.
inline EMInput sphere_input(int m, int bound) {
  if (m < 1) throw InvalidArgument("sphere_input: dimension must be positive");
  auto sy = direct_sum(trivial_module(0, bound), trivial_module(m, bound));
  return path_loop_input(exterior(m, bound), sy);
}

struct EMPage {
  int r = 1;
  int s_max = 0;
  int t_max = 0;
  EMInput input;
  BigradedComplex e1;  // rows 0..s_max+1 (the extra row computes E2 at s_max)
  std::optional<BigradedHomology> e2;
  /// E1 columns as unstable modules (tensor-product action), s = 0..s_max+1.
  std::vector<BoundedUnstableModule> columns;
  /// E2 action on representatives: e2_sq[s][t][k], Sq^k: E2^{-s,t} -> E2^{-s,t+k}.
  std::vector<std::vector<std::vector<std::optional<F2Matrix>>>> e2_sq;
  /// Window in which E2 was compared with Tor over the unreduced bar complex.
  std::pair<int, int> cross_checked{-1, -1};

  int dim(int s, int t) const {
    if (s < 0 || s > s_max || t < 0 || t > t_max) return 0;
    return r == 1 ? e1.dim(s, t) : e2->dim(s, t);
  }
  /// The differential d_r has bidegree (r, 1 - r) in (-s, t) coordinates.
  std::pair<int, int> differential_bidegree() const { return {r, 1 - r}; }
  bool has_steenrod() const { return !columns.empty(); }

  std::map<std::pair<int, int>, int> table() const {
    std::map<std::pair<int, int>, int> out;
    for (int s = 0; s <= s_max; ++s)
      for (int t = 0; t <= t_max; ++t) out[{s, t}] = dim(s, t);
    return out;
  }

  /// Lowest positive degree of Hbar*Y (INT_MAX if Hbar*Y vanishes in-bound).
  int connectivity() const {
    for (int d = 1; d <= input.y.bound(); ++d)
      if (input.y.dim(d) > 0) return d;
    return INT_MAX;
  }

  /// Largest total degree k = t - s for which the window holds every nonzero
  /// E^{-s,t}: E1^{-s,t} = 0 for t < s c (c the connectivity), so total
  /// degree k only involves s <= k / (c - 1).
  int complete_through() const {
    const int c = connectivity();
    if (c == INT_MAX) return t_max;
    if (c < 2) throw InvalidArgument("complete_through: Hbar*Y must be simply connected (nothing in degree 1)");
    // need s_max >= k / (c - 1) and t_max >= k + k / (c - 1)
    int k = 0;
    while (k + 1 <= (c - 1) * s_max + (c - 2) && (k + 1) + (k + 1) / (c - 1) <= t_max) ++k;
    return k;
  }

  /// dims sum_s E^{-s, k+s} for k <= D; throws OutOfBound when the window
  /// cannot certify them.
  std::vector<int> total_dims(int D) const {
    if (D > complete_through())
      throw OutOfBound("total degree " + std::to_string(D) + " not complete in the window (s_max=" +
                       std::to_string(s_max) + ", t_max=" + std::to_string(t_max) + ")");
    std::vector<int> out;
    for (int k = 0; k <= D; ++k) {
      int n = 0;
      for (int s = 0; s <= s_max && k + s <= t_max; ++s) n += dim(s, k + s);
      out.push_back(n);
    }
    return out;
  }

  /// dims of F_{-s} H^k = sum_{s' <= s} E^{-s', k+s'} (meaningful after collapse).
  int filtration_dim(int s, int k) const {
    int n = 0;
    for (int q = 0; q <= std::min(s, s_max); ++q) n += dim(q, k + q);
    return n;
  }
};

/// E1^{-s,t} = (H*X (x) Hbar*Y^{(x)s} (x) H*Z)^t with the bar differential as
/// d1; with Steenrod data, columns carry the Cartan action, which is checked
/// to commute with d1.
inline EMPage e1_page(const EMInput& in, int s_max, int t_max) {
  if (s_max < 0 || t_max < 0) throw InvalidArgument("e1_page: negative window");
  if (t_max > in.bound()) throw OutOfBound("e1_page: t_max exceeds the input bound");
  EMPage p;
  p.r = 1;
  p.s_max = s_max;
  p.t_max = t_max;
  p.input = in;
  p.e1 = bar_complex(in.y, in.x, in.z, s_max + 1, t_max, true);
  if (in.steenrod) {
    if (in.steenrod->y.bound() < t_max || in.steenrod->x.bound() < t_max || in.steenrod->z.bound() < t_max)
      throw OutOfBound("e1_page: Steenrod data bound below t_max");
    for (int s = 0; s <= s_max + 1; ++s) {
      std::vector<const BoundedUnstableModule*> fs{&in.steenrod->x};
      std::vector<int> mins{0};
      for (int i = 0; i < s; ++i) {
        fs.push_back(&in.steenrod->y);
        mins.push_back(1);
      }
      fs.push_back(&in.steenrod->z);
      mins.push_back(0);
      p.columns.push_back(tensor_modules(fs, mins, t_max));
    }
    for (int s = 1; s <= s_max + 1; ++s)
      for (int t = 0; t <= t_max; ++t)
        for (int k = 1; t + k <= t_max; ++k) {
          const auto& a = p.columns[detail::sz(s)].sq_entry(k, t);
          const auto& b = p.columns[detail::sz(s - 1)].sq_entry(k, t);
          if (!a || !b) continue;
          if (!(a->then(p.e1.d(s, t + k)) == p.e1.d(s, t).then(*b)))
            throw InvariantViolation("e1_page: Sq^" + std::to_string(k) + " does not commute with d1 at (" +
                                     std::to_string(-s) + "," + std::to_string(t) + ")");
        }
  }
  return p;
}

/// E2 = H(E1, d1). The dims are compared with Tor over the unreduced bar
/// complex in the window s <= check_s, t <= check_t (an independent
/// resolution); the Steenrod action descends to cycle representatives.
inline EMPage e2_page(const EMPage& p1, int check_s = 4, int check_t = 12) {
  if (p1.r != 1) throw InvalidArgument("e2_page: expected an E1 page");
  EMPage p = p1;
  p.r = 2;
  p.e2 = homology(p1.e1);
  const int cs = std::min(check_s, p.s_max), ct = std::min(check_t, p.t_max);
  if (cs >= 0 && ct >= 0) {
    auto un = tor(p.input.y, p.input.x, p.input.z, cs, ct, false);
    for (int s = 0; s <= cs; ++s)
      for (int t = 0; t <= ct; ++t)
        if (un.dim(s, t) != p.e2->dim(s, t))
          throw InvariantViolation("e2_page: E2 and Tor disagree at (" + std::to_string(-s) + "," +
                                   std::to_string(t) + ")");
    p.cross_checked = {cs, ct};
  }
  if (p.has_steenrod()) {
    p.e2_sq.resize(detail::sz(p.s_max) + 1);
    for (int s = 0; s <= p.s_max; ++s) {
      p.e2_sq[detail::sz(s)].resize(detail::sz(p.t_max) + 1);
      for (int t = 0; t <= p.t_max; ++t) {
        auto& row = p.e2_sq[detail::sz(s)][detail::sz(t)];
        row.resize(detail::sz(p.t_max - t) + 1);
        const auto& src = p.e2->at(s, t).quotient;
        for (int k = 1; t + k <= p.t_max; ++k) {
          const auto& a = p.columns[detail::sz(s)].sq_entry(k, t);
          if (!a) continue;
          const auto& dst = p.e2->at(s, t + k).quotient;
          F2Matrix m(src.dim(), dst.dim());
          for (std::size_t i = 0; i < src.dim(); ++i) m.row(i) = dst.coords(a->apply(src.reps()[i]));
          row[detail::sz(k)] = m;
        }
      }
    }
  }
  return p;
}

struct CollapseCertificate {
  bool collapses = true;
  std::vector<std::pair<int, int>> examined;  // source bidegrees (s, t) with E2 != 0
  std::string witness;
};

/// True iff every d_r (2 <= r <= s_max) from a nonzero E2^{-s,t} in the
/// window lands in a zero bidegree.
inline CollapseCertificate detect_collapse(const EMPage& p) {
  if (p.r != 2) throw InvalidArgument("detect_collapse: expected an E2 page");
  CollapseCertificate c;
  for (int s = 0; s <= p.s_max; ++s)
    for (int t = 0; t <= p.t_max; ++t) {
      if (p.dim(s, t) == 0) continue;
      c.examined.emplace_back(s, t);
      for (int r = 2; r <= s; ++r) {
        const int ts = t - r + 1;
        if (ts >= 0 && p.dim(s - r, ts) > 0 && c.collapses) {
          c.collapses = false;
          c.witness = "d_" + std::to_string(r) + ": (" + std::to_string(-s) + "," + std::to_string(t) + ") -> (" +
                      std::to_string(-(s - r)) + "," + std::to_string(ts) + ")";
        }
      }
    }
  return c;
}

struct CornerMaps {
  F2Matrix unit;               // F2 -> E2^{0,0}
  std::vector<F2Matrix> edge;  // [t]: Hbar^t Y = E1^{-1,t} -> E2^{-1,t}
  /// E2^{-1,t} is identified with (F_{-1} Hbar*Omega Y)^{t-1}.
  int loop_degree(int t) const { return t - 1; }
};

/// Corner morphisms of a collapsing path-loop page.
inline CornerMaps corner_maps(const EMPage& p, const CollapseCertificate& c) {
  if (!c.collapses) throw NoCollapse("corner_maps: " + c.witness);
  if (!p.input.pointed()) throw InvalidArgument("corner_maps: need X = Z = pt");
  if (p.r != 2 || p.s_max < 1) throw InvalidArgument("corner_maps: need an E2 page with s_max >= 1");
  CornerMaps m;
  m.unit = F2Matrix(1, static_cast<std::size_t>(p.dim(0, 0)));
  if (p.dim(0, 0) == 1) m.unit.set(0, 0);
  for (int t = 0; t <= p.t_max; ++t) {
    // with X = Z = pt the bar basis of E1^{-1,t} is the basis of Hbar^t Y
    const auto& q = p.e2->at(1, t).quotient;
    const auto n = detail::sz(p.e1.dim(1, t));
    F2Matrix e(n, q.dim());
    for (std::size_t i = 0; i < n; ++i) e.row(i) = q.coords(BitVec::unit(n, i));
    m.edge.push_back(e);
  }
  return m;
}

/// The map E2^{-s,*}(Y) -> E2^{-s,*}(Y') induced by an algebra map f: Y -> Y'
/// on path-loop inputs, computed on cycle representatives.
inline std::vector<F2Matrix> induced_e2_map(const AlgebraMap& f, const EMPage& a, const EMPage& b, int s) {
  if (!a.input.pointed() || !b.input.pointed()) throw InvalidArgument("induced_e2_map: need X = Z = pt");
  if (auto v = algebra_map_violation(f, a.input.y, b.input.y)) throw InvalidArgument("induced_e2_map: " + *v);
  std::vector<F2Matrix> out;
  const int T = std::min(a.t_max, b.t_max);
  for (int t = 0; t <= T; ++t) {
    auto ba = bar_basis(a.input.y, a.input.x, a.input.z, s, t);
    auto bb = bar_basis(b.input.y, b.input.x, b.input.z, s, t);
    // chain map f^{(x)s} on bar tuples
    F2Matrix chain(ba.size(), bb.size());
    for (std::size_t i = 0; i < ba.size(); ++i) {
      const auto& tup = ba.tuple(i);
      std::vector<std::vector<std::pair<int, int>>> choices;  // per Y-factor: images (deg, idx)
      for (int q = 1; q <= s; ++q) {
        const int d = tup[detail::sz(2 * q)], idx = tup[detail::sz(2 * q + 1)];
        std::vector<std::pair<int, int>> c;
        for (auto o : f.at(d).row(detail::sz(idx)).ones()) c.emplace_back(d, static_cast<int>(o));
        choices.push_back(std::move(c));
      }
      std::vector<int> cur{0, 0};
      std::function<void(std::size_t)> rec = [&](std::size_t q) {
        if (q == choices.size()) {
          auto full = cur;
          full.push_back(0);
          full.push_back(0);
          chain.flip(i, bb.index(full));
          return;
        }
        for (auto [d, o] : choices[q]) {
          cur.push_back(d);
          cur.push_back(o);
          rec(q + 1);
          cur.resize(cur.size() - 2);
        }
      };
      rec(0);
    }
    const auto& qa = a.e2->at(s, t).quotient;
    const auto& qb = b.e2->at(s, t).quotient;
    F2Matrix m(qa.dim(), qb.dim());
    for (std::size_t i = 0; i < qa.dim(); ++i) m.row(i) = qb.coords(chain.apply(qa.reps()[i]));
    out.push_back(m);
  }
  return out;
}

/// Offset of the E2^{-s, k+s} block inside the degree-k basis of the abutment.
inline int abutment_offset(const EMPage& p, int k, int s) {
  int off = 0;
  for (int q = 0; q < s; ++q) off += p.dim(q, k + q);
  return off;
}

struct LoopModule {
  EMPage page;  // E2 of the sphere
  CollapseCertificate collapse;
  BoundedUnstableModule module;
};

/// Hbar*Omega S^{n+1} through degree D: dims from E2 of the path-loop
/// spectral sequence (collapse certified); Sq^j on a degree-kn class is zero
/// when the target degree is not a multiple of n, Sq_0 (the cup square) is
/// zero since products are divided powers; every other entry is unknown.
inline LoopModule loop_module_with_page(int n, int D) {
  if (n < 1) throw InvalidArgument("loop_module: need n >= 1");
  if (D < 0) throw InvalidArgument("loop_module: negative bound");
  const int s_max = D / n + 1;
  const int t_max = D + s_max;
  auto in = sphere_input(n + 1, t_max);
  auto p = e2_page(e1_page(in, s_max, t_max));
  auto c = detect_collapse(p);
  if (!c.collapses) throw NoCollapse("loop_module: " + c.witness);
  auto dims = p.total_dims(D);
  dims[0] = 0;  // reduced
  BoundedUnstableModule m(D, dims, [&](int k, int d) -> std::optional<F2Matrix> {
    const auto rows = detail::sz(dims[detail::sz(d)]);
    const auto cols = detail::sz(dims[detail::sz(d + k)]);
    if (rows == 0 || cols == 0 || k > d || k == d) return F2Matrix(rows, cols);
    return std::nullopt;
  });
  return {p, c, m};
}

inline BoundedUnstableModule loop_module(int n, int D) { return loop_module_with_page(n, D).module; }

// ---------------------------------------------------------------------------
// Loop-space nilpotency checks

struct A2Instance {
  std::string name;
  EMInput input;                 // path-loop input with Steenrod data
  std::optional<BoundedUnstableModule> loop;  // Hbar*Omega Y at bound >= 2 D
  int bound = 0;                 // checks are certified through this degree
  int s_max = 3;                 // E1 columns examined
};

inline A2Instance sphere_a2_instance(int n, int D, int s_max = 3) {
  if (n < 1) throw InvalidArgument("sphere_a2_instance: need n >= 1");
  A2Instance inst;
  inst.name = "S^" + std::to_string(n + 1);
  inst.bound = D;
  inst.s_max = s_max;
  inst.input = sphere_input(n + 1, std::max(D, 2 * D));
  inst.loop = loop_module(n, 2 * D);
  return inst;
}

/// Y = pt: everything is vacuous.
inline A2Instance point_a2_instance(int D, int s_max = 3) {
  A2Instance inst;
  inst.name = "pt";
  inst.bound = D;
  inst.s_max = s_max;
  inst.input = path_loop_input(ground_algebra(2 * D), trivial_module(0, 2 * D));
  inst.loop = BoundedUnstableModule(2 * D, std::vector<int>(detail::sz(2 * D) + 1, 0),
                                    [](int, int) { return std::nullopt; });
  inst.loop->set_zero_from(0);
  return inst;
}

namespace detail {

/// Whether every class of m in degrees <= through is s-nilpotent (with the
/// Sq_t orbits certified); returns a witness on failure.
inline std::optional<std::string> at_least_nilpotent(const BoundedUnstableModule& m, long long s, int through) {
  for (int d = 0; d <= std::min(through, m.bound()); ++d) {
    if (m.dim(d) == 0) continue;
    if (d < s) return "class in degree " + std::to_string(d) + " < " + std::to_string(s);
    for (int t = 0; t < s; ++t)
      if (static_cast<int>(sq_lower_vanishing(t, d, m).size()) != m.dim(d))
        return "Sq_" + std::to_string(t) + " orbit in degree " + std::to_string(d) + " not certified to vanish";
  }
  return std::nullopt;
}

}  // namespace detail

/// (a) the corner map induces monomorphisms R_s Hbar*Y -> R_{s-1} Hbar*Omega Y
/// for s <= 2l - 1; (b) Hbar*Omega Y is (l-1)-nilpotent; (c) the column
/// E1^{-s} is sl-nilpotent; l is the nilpotency level of Hbar*Y.
inline Report verify_loop_nilpotency(const A2Instance& inst) {
  const auto& in = inst.input;
  if (!in.steenrod) throw InstanceUnavailable(inst.name + ": no Steenrod data on H*Y");
  if (!inst.loop) throw InstanceUnavailable(inst.name + ": loop-space module unavailable");
  const int D = inst.bound;
  Report rep;

  const auto yD = degrees_at_least(truncate_bound(in.steenrod->y, D), 1);
  const auto fy = nilpotent_filtration(yD);
  const int ell = nilpotency_level(fy, yD);
  rep.add("nilpotency level of Hbar*Y", true, ell == NilpotencyVerdict::infinity ? "inf" : std::to_string(ell));

  const int s_page = std::max(inst.s_max, 1);
  auto p = e2_page(e1_page(in, s_page, D));
  auto c = detect_collapse(p);
  rep.add("collapse", c.collapses, c.witness);
  if (!c.collapses) return rep;
  auto corner = corner_maps(p, c);

  // (a)
  {
    const auto& L = *inst.loop;
    if (L.bound() < D - 1) throw InstanceUnavailable(inst.name + ": loop module bound too small");
    const auto LD = truncate_bound(L, D - 1);
    auto sigmaL = suspension(LD, 1);
    ModuleMap cm;
    bool shapes = true;
    for (int t = 0; t <= D; ++t) {
      F2Matrix m(detail::sz(yD.dim(t)), detail::sz(sigmaL.dim(t)));
      if (t >= 1 && yD.dim(t) > 0) {
        const int off = abutment_offset(p, t - 1, 1);
        const auto& e = corner.edge[detail::sz(t)];
        if (off + static_cast<int>(e.cols()) > sigmaL.dim(t)) shapes = false;
        else
          for (std::size_t i = 0; i < e.rows(); ++i)
            for (auto j : e.row(i).ones()) m.set(i, detail::sz(off) + j);
      }
      cm.mats.push_back(m);
    }
    std::string w;
    if (!shapes) w = "E2^{-1} does not fit in the loop module";
    else if (auto v = module_map_violation(cm, yD, sigmaL)) w = *v;
    bool ok = w.empty();
    std::string realized;
    if (ok) {
      const auto fl = nilpotent_filtration(sigmaL);
      const long long top = ell == NilpotencyVerdict::infinity ? fy.window : std::min<long long>(2LL * ell - 1, fy.window);
      for (int s = 0; s <= top && ok; ++s) {
        auto R = detail::induced_on_R(cm, fy, fl, s, 0, w);
        if (!R) {
          ok = false;
          break;
        }
        for (std::size_t e = 0; e < R->size() && ok; ++e) {
          if (fy.R(s).dim(static_cast<int>(e)) > 0) realized += (realized.empty() ? "s=" : ",") + std::to_string(s);
          if (rank((*R)[e]) != static_cast<std::size_t>(fy.R(s).dim(static_cast<int>(e)))) {
            ok = false;
            w = "R_" + std::to_string(s) + " not injective in degree " + std::to_string(e);
          }
        }
      }
      if (ok) w = realized.empty() ? "vacuous" : "realized " + realized;
    }
    rep.add("(a) corner injective on R_s", ok, w);
  }

  // (b)
  {
    const auto& L = *inst.loop;
    std::optional<std::string> v;
    if (ell != NilpotencyVerdict::infinity && ell >= 1) {
      if (L.bound() < 2 * D) v = "loop module known only through degree " + std::to_string(L.bound());
      else v = detail::at_least_nilpotent(L, ell - 1, D);
    } else if (ell == NilpotencyVerdict::infinity) {
      for (int d = 0; d <= std::min(D, L.bound()); ++d)
        if (L.dim(d) > 0) v = "Hbar*Y vanishes but the loop module does not";
    }
    rep.add("(b) loop space (l-1)-nilpotent", !v, v.value_or("through degree " + std::to_string(D)));
  }

  // (c)
  {
    std::optional<std::string> v;
    for (int s = 1; s <= s_page && !v; ++s) {
      const auto& col = p.columns[detail::sz(s)];
      const long long need = ell == NilpotencyVerdict::infinity ? LLONG_MAX : static_cast<long long>(s) * ell;
      if (need == LLONG_MAX) {
        for (int d = 0; d <= col.bound(); ++d)
          if (col.dim(d) > 0) v = "column " + std::to_string(-s) + " nonzero";
      } else if (auto w = detail::at_least_nilpotent(col, need, col.bound())) {
        v = "column " + std::to_string(-s) + ": " + *w;
      }
    }
    rep.add("(c) E1 column -s is sl-nilpotent", !v, v.value_or("s <= " + std::to_string(s_page)));
  }
  return rep;
}

}  // namespace steem
