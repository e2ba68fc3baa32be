#pragma once

// Sq_t operators, nilpotency verdicts, the nilpotent filtration M_s and its
// quotients R_s M, weight.

#include <climits>
#include <string>
#include <vector>

#include "unstable_module.hpp"

namespace steem {

/// Sq_m x = Sq^{|x|-m} x.
inline ModuleElement sq_lower(int m, const ModuleElement& x, const BoundedUnstableModule& M) {
  if (m < 0 || m > x.degree) throw InvalidArgument("sq_lower: need 0 <= m <= |x|");
  if (2 * x.degree - m > M.bound())
    throw OutOfBound("Sq_" + std::to_string(m) + " of a degree " + std::to_string(x.degree) +
                     " class leaves the bound " + std::to_string(M.bound()));
  return M.apply(x.degree - m, x);
}

struct NilpotencyVerdict {
  enum class Kind { Exactly, AtLeast };
  static constexpr int infinity = INT_MAX;

  Kind kind = Kind::Exactly;
  int s = 0;

  static NilpotencyVerdict exactly(int s) { return {Kind::Exactly, s}; }
  static NilpotencyVerdict at_least(int s) { return {Kind::AtLeast, s}; }

  bool is_exact() const { return kind == Kind::Exactly; }
  bool operator==(const NilpotencyVerdict&) const = default;

  std::string str() const {
    const std::string v = s == infinity ? "inf" : std::to_string(s);
    return (kind == Kind::Exactly ? "Exactly(" : "AtLeast(") + v + ")";
  }
};

enum class OrbitFate { Vanishes, Persists, Undecided };

/// Fate of the Sq_t-orbit of x under bounded semantics: it vanishes if some
/// in-bound iterate is zero; it persists if at least one in-bound step is
/// nonzero before the orbit leaves the bound (or t = |x|, where Sq_t is the
/// identity); otherwise it is undecided.
inline OrbitFate orbit_fate(int t, const ModuleElement& x, const BoundedUnstableModule& M) {
  if (x.is_zero()) return OrbitFate::Vanishes;
  if (t == x.degree) return OrbitFate::Persists;
  ModuleElement cur = x;
  int steps = 0;
  for (;;) {
    const int next = 2 * cur.degree - t;
    if (M.known_zero(next)) return OrbitFate::Vanishes;
    if (next > M.bound()) return steps > 0 ? OrbitFate::Persists : OrbitFate::Undecided;
    if (!M.known(cur.degree - t, cur.degree)) return OrbitFate::Undecided;
    cur = M.apply(cur.degree - t, cur);
    if (cur.is_zero()) return OrbitFate::Vanishes;
    ++steps;
  }
}

/// x is s-nilpotent when every Sq_t-orbit with t < s vanishes.
inline NilpotencyVerdict nilpotency_degree(const ModuleElement& x, const BoundedUnstableModule& M) {
  if (x.is_zero()) return NilpotencyVerdict::exactly(NilpotencyVerdict::infinity);
  for (int t = 0; t <= x.degree; ++t) {
    switch (orbit_fate(t, x, M)) {
      case OrbitFate::Vanishes:
        continue;
      case OrbitFate::Persists:
        return NilpotencyVerdict::exactly(t);
      case OrbitFate::Undecided:
        return NilpotencyVerdict::at_least(t);
    }
  }
  return NilpotencyVerdict::at_least(x.degree + 1);  // unreachable: t = |x| persists
}

/// Subspace of degree-d classes whose Sq_t-orbit certainly vanishes (kernel of
/// the last in-bound, known orbit composite; everything if the orbit reaches
/// a degree known to be zero). t < d.
inline std::vector<BitVec> sq_lower_vanishing(int t, int d, const BoundedUnstableModule& M) {
  const auto n = static_cast<std::size_t>(M.dim(d));
  F2Matrix acc = F2Matrix::identity(n);
  int deg = d;
  while (true) {
    const int next = 2 * deg - t;
    if (M.known_zero(next)) return kernel(F2Matrix(acc.rows(), 0));
    if (next > M.bound() || !M.known(deg - t, deg)) break;
    acc = acc.then(M.sq(deg - t, deg));
    deg = 2 * deg - t;
    if (acc.cols() == 0) break;
  }
  return kernel(acc);
}

/// Whether Sq_0 is injective on all degrees <= floor(D/2). Throws
/// UnknownAction if a needed matrix is unknown.
inline bool is_reduced(const BoundedUnstableModule& M) {
  for (int d = 1; 2 * d <= M.bound(); ++d)
    if (M.dim(d) > 0 && rank(M.sq(d, d)) != static_cast<std::size_t>(M.dim(d))) return false;
  return true;
}

struct FiltrationResult {
  int window = 0;  // H = floor(D/2): M_s and R_s are computed in degrees <= H
  /// basis[s][d]: basis of M_s in degree d (d <= window); M_s = 0 for s > window.
  std::vector<std::vector<std::vector<BitVec>>> basis;
  /// elementwise[s][d]: the s-nilpotent elements of degree d.
  std::vector<std::vector<std::vector<BitVec>>> elementwise;
  /// R_s M = Sigma^{-s}(M_s / M_{s+1}), bound window - s.
  std::vector<BoundedUnstableModule> quotients;

  int max_s() const { return static_cast<int>(basis.size()) - 1; }
  int dim(int s, int d) const {
    if (s < 0 || s > max_s() || d < 0 || d > window) return 0;
    return static_cast<int>(basis[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)].size());
  }
  const BoundedUnstableModule& R(int s) const { return quotients.at(static_cast<std::size_t>(s)); }
  BoundedUnstableModule R_or_zero(int s) const {
    if (s >= 0 && s <= max_s()) return R(s);
    return BoundedUnstableModule(std::max(0, window - std::max(s, 0)), {}, [](int, int) { return std::nullopt; });
  }

  struct Discrepancy {
    int s, d, elementwise_dim, submodule_dim;
  };
  /// Degrees where the greatest Sq-stable subspace is smaller than the set of
  /// s-nilpotent elements.
  std::vector<Discrepancy> discrepancies() const {
    std::vector<Discrepancy> out;
    for (int s = 0; s <= max_s(); ++s)
      for (int d = 0; d <= window; ++d) {
        const int e = static_cast<int>(elementwise[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)].size());
        if (e != dim(s, d)) out.push_back({s, d, e, dim(s, d)});
      }
    return out;
  }
};

namespace detail {

/// Greatest subspace U <= N (degreewise, d <= H) with Sq^k U^d in U^{d+k}
/// whenever d + k <= H. Unknown action entries are treated pessimistically.
inline std::vector<std::vector<BitVec>> greatest_stable(const BoundedUnstableModule& M, int H,
                                                        const std::vector<std::vector<BitVec>>& N) {
  std::vector<std::vector<BitVec>> U(static_cast<std::size_t>(H) + 1);
  for (int d = H; d >= 0; --d) {
    const auto n = static_cast<std::size_t>(M.dim(d));
    std::vector<BitVec> cur = N[static_cast<std::size_t>(d)];
    for (int k = 1; d + k <= H && !cur.empty(); ++k) {
      const auto& target = U[static_cast<std::size_t>(d + k)];
      const auto tn = static_cast<std::size_t>(M.dim(d + k));
      if (target.size() == tn) continue;  // everything lands inside
      const auto& e = M.sq_entry(k, d);
      if (!e) {
        cur.clear();
        break;
      }
      cur = preimage(*e, cur, target);
    }
    U[static_cast<std::size_t>(d)] = rref(n, cur);
  }
  return U;
}

}  // namespace detail

inline FiltrationResult nilpotent_filtration(const BoundedUnstableModule& M) {
  FiltrationResult r;
  const int H = M.bound() / 2;
  r.window = H;
  for (int s = 0; s <= H + 1; ++s) {
    std::vector<std::vector<BitVec>> N(static_cast<std::size_t>(H) + 1);
    for (int d = 0; d <= H; ++d) {
      const auto n = static_cast<std::size_t>(M.dim(d));
      if (s > d) continue;  // Sq_d is the identity in degree d
      std::vector<BitVec> cur;
      for (std::size_t i = 0; i < n; ++i) cur.push_back(BitVec::unit(n, i));
      for (int t = 0; t < s; ++t) cur = intersect(n, cur, sq_lower_vanishing(t, d, M));
      N[static_cast<std::size_t>(d)] = rref(n, cur);
    }
    r.elementwise.push_back(N);
    r.basis.push_back(detail::greatest_stable(M, H, N));
  }
  for (int s = 0; s <= H; ++s) {
    const auto& top = r.basis[static_cast<std::size_t>(s)];
    const auto& sub = r.basis[static_cast<std::size_t>(s + 1)];
    std::vector<Quotient> q;
    std::vector<int> dims;
    for (int d = s; d <= H; ++d) {
      q.emplace_back(static_cast<std::size_t>(M.dim(d)), top[static_cast<std::size_t>(d)],
                     sub[static_cast<std::size_t>(d)]);
      dims.push_back(static_cast<int>(q.back().dim()));
    }
    auto& R = r.quotients.emplace_back(H - s, dims, [&](int k, int e) -> std::optional<F2Matrix> {
      const int d = e + s;
      const auto& src = q[static_cast<std::size_t>(e)];
      const auto& dst = q[static_cast<std::size_t>(e + k)];
      const auto& a = M.sq_entry(k, d);
      if (!a) return std::nullopt;
      F2Matrix m(src.dim(), dst.dim());
      for (std::size_t i = 0; i < src.dim(); ++i) m.row(i) = dst.coords(a->apply(src.reps()[i]));
      return m;
    });
    if (M.zero_from() && *M.zero_from() <= H + 1) R.set_zero_from(detail::shift_zero(M.zero_from(), -s));
  }
  // keep M_{H+1} = 0 as the terminal entry
  return r;
}

inline int alpha(long long n) {
  if (n < 0) throw InvalidArgument("alpha: negative argument");
  return __builtin_popcountll(static_cast<unsigned long long>(n));
}

/// Least n with M vanishing in every degree i <= D with alpha(i) > n.
inline int weight(const BoundedUnstableModule& M) {
  if (!is_reduced(M)) throw NotReduced("weight: Sq_0 is not injective through degree " + std::to_string(M.bound() / 2));
  int w = 0;
  for (int d = 0; d <= M.bound(); ++d)
    if (M.dim(d) > 0) w = std::max(w, alpha(d));
  return w;
}

/// Krull stage of a reduced module; equals its weight.
inline int krull_stage_reduced(const BoundedUnstableModule& M) { return weight(M); }

}  // namespace steem
