#pragma once

// Unstable modules over the mod 2 Steenrod algebra, truncated at a degree
// bound D.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "f2.hpp"
#include "steenrod.hpp"

namespace steem {

struct ModuleElement {
  int degree = 0;
  BitVec coords;

  bool is_zero() const { return coords.none(); }
  bool operator==(const ModuleElement& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree == o.degree && coords == o.coords;
  }
};

/// A graded F2-space through degree `bound` with Sq^k matrices
/// M_d -> M_{d+k} for every k >= 1 and d + k <= bound. Individual matrices
/// may be flagged unknown (std::nullopt); Sq^0 is the identity.
class BoundedUnstableModule {
 public:
  using ActionFn = std::function<std::optional<F2Matrix>(int k, int d)>;

  BoundedUnstableModule() = default;

  BoundedUnstableModule(int bound, std::vector<int> dims, const ActionFn& action, bool check = true)
      : bound_(bound), dims_(std::move(dims)) {
    if (bound < 0) throw InvalidArgument("module bound must be non-negative");
    dims_.resize(static_cast<std::size_t>(bound) + 1, 0);
    for (int d : dims_)
      if (d < 0) throw InvalidArgument("negative dimension");
    sq_.resize(static_cast<std::size_t>(bound) + 1);
    for (int k = 1; k <= bound; ++k) {
      sq_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(bound - k) + 1);
      for (int d = 0; d + k <= bound; ++d) {
        std::optional<F2Matrix> m;
        if (dim(d) == 0 || dim(d + k) == 0)
          m = F2Matrix(static_cast<std::size_t>(dim(d)), static_cast<std::size_t>(dim(d + k)));
        else
          m = action(k, d);
        if (m && (m->rows() != static_cast<std::size_t>(dim(d)) ||
                  m->cols() != static_cast<std::size_t>(dim(d + k))))
          throw InvalidArgument("Sq^" + std::to_string(k) + " on degree " + std::to_string(d) +
                                ": matrix has wrong shape");
        sq_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] = std::move(m);
      }
    }
    if (check) validate();
  }

  int bound() const { return bound_; }
  const std::vector<int>& dims() const { return dims_; }

  /// Degree z from which the module is known to vanish, including beyond the
  /// bound (finite modules). Absent when nothing is known above the bound.
  std::optional<int> zero_from() const { return zero_from_; }
  BoundedUnstableModule& set_zero_from(std::optional<int> z) {
    if (z) z = std::max(*z, 0);
    if (z)
      for (int d = *z; d <= bound_; ++d)
        if (dim(d) != 0) throw InvalidArgument("set_zero_from: module is nonzero in degree " + std::to_string(d));
    zero_from_ = z;
    return *this;
  }
  /// True if degree d is known to be zero (in or beyond the bound).
  bool known_zero(int d) const {
    if (d < 0) return true;
    if (d <= bound_) return dim(d) == 0;
    return zero_from_ && d >= *zero_from_;
  }
  int dim(int d) const {
    if (d < 0 || d > bound_) return 0;
    return dims_[static_cast<std::size_t>(d)];
  }
  int total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }

  bool known(int k, int d) const {
    if (k == 0) return true;
    check_range(k, d);
    return sq_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)].has_value();
  }

  bool fully_known() const {
    for (int k = 1; k <= bound_; ++k)
      for (int d = 0; d + k <= bound_; ++d)
        if (!known(k, d)) return false;
    return true;
  }

  /// Matrix of Sq^k on degree d (identity for k = 0).
  F2Matrix sq(int k, int d) const {
    if (k == 0) return F2Matrix::identity(static_cast<std::size_t>(dim(d)));
    check_range(k, d);
    const auto& m = sq_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
    if (!m)
      throw UnknownAction("Sq^" + std::to_string(k) + " on degree " + std::to_string(d) + " is unknown");
    return *m;
  }

  const std::optional<F2Matrix>& sq_entry(int k, int d) const {
    check_range(k, d);
    return sq_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
  }

  ModuleElement zero(int d) const { return {d, BitVec(static_cast<std::size_t>(dim(d)))}; }
  ModuleElement basis_element(int d, int i) const {
    if (i < 0 || i >= dim(d)) throw InvalidArgument("basis_element: index out of range");
    return {d, BitVec::unit(static_cast<std::size_t>(dim(d)), static_cast<std::size_t>(i))};
  }

  ModuleElement apply(int k, const ModuleElement& x) const {
    if (k < 0) throw InvalidArgument("apply: negative square");
    if (k == 0) return x;
    if (x.degree + k > bound_)
      throw OutOfBound("Sq^" + std::to_string(k) + " of a degree " + std::to_string(x.degree) +
                       " class leaves the bound " + std::to_string(bound_));
    if (x.is_zero()) return zero(x.degree + k);
    return {x.degree + k, sq(k, x.degree).apply(x.coords)};
  }

  /// Applies Sq^{i_1} ... Sq^{i_r}, rightmost first.
  ModuleElement apply(const SqWord& w, const ModuleElement& x) const {
    ModuleElement y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = apply(*it, y);
    return y;
  }

  ModuleElement apply(const SteenrodElement& a, const ModuleElement& x) const {
    ModuleElement out = zero(x.degree + a.degree());
    for (const auto& m : a.terms()) out.coords ^= apply(m, x).coords;
    return out;
  }

  /// Matrix of a word on degree d, or nullopt when an unknown entry is hit.
  std::optional<F2Matrix> word_matrix(const SqWord& w, int d) const {
    F2Matrix acc = F2Matrix::identity(static_cast<std::size_t>(dim(d)));
    int deg = d;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (deg + *it > bound_) throw OutOfBound("word leaves the bound");
      const auto& m = sq_entry(*it, deg);
      if (!m) return std::nullopt;
      acc = acc.then(*m);
      deg += *it;
    }
    return acc;
  }

  /// First failed instability or Adem check, if any.
  std::optional<std::string> first_violation() const {
    for (int k = 1; k <= bound_; ++k)
      for (int d = 0; d < k && d + k <= bound_; ++d) {
        const auto& m = sq_entry(k, d);
        if (m && !m->is_zero())
          return "instability: Sq^" + std::to_string(k) + " nonzero on degree " + std::to_string(d);
      }
    for (int b = 1; b <= bound_; ++b)
      for (int a = 1; a < 2 * b && a + b <= bound_; ++a) {
        const SteenrodElement& rel = adem_pair(a, b);
        for (int d = 0; d + a + b <= bound_; ++d) {
          if (dim(d) == 0 || dim(d + a + b) == 0) continue;
          auto lhs = word_matrix({a, b}, d);
          if (!lhs) continue;
          F2Matrix rhs(static_cast<std::size_t>(dim(d)), static_cast<std::size_t>(dim(d + a + b)));
          bool ok = true;
          for (const auto& m : rel.terms()) {
            auto t = word_matrix(m, d);
            if (!t) {
              ok = false;
              break;
            }
            rhs += *t;
          }
          if (ok && !(*lhs == rhs))
            return "Adem: Sq^" + std::to_string(a) + " Sq^" + std::to_string(b) + " on degree " +
                   std::to_string(d);
        }
      }
    return std::nullopt;
  }

  void validate() const {
    if (auto v = first_violation()) throw InvariantViolation(*v);
  }

  bool operator==(const BoundedUnstableModule& o) const {
    return bound_ == o.bound_ && dims_ == o.dims_ && sq_ == o.sq_ && zero_from_ == o.zero_from_;
  }

 private:
  void check_range(int k, int d) const {
    if (k < 1 || d < 0 || d + k > bound_)
      throw OutOfBound("Sq^" + std::to_string(k) + " on degree " + std::to_string(d) + " outside bound " +
                       std::to_string(bound_));
  }

  int bound_ = 0;
  std::vector<int> dims_{0};
  std::vector<std::vector<std::optional<F2Matrix>>> sq_;
  std::optional<int> zero_from_;
};

namespace detail {
inline std::optional<int> shift_zero(std::optional<int> z, int s) {
  if (!z) return std::nullopt;
  return std::max(*z + s, 0);
}
}  // namespace detail

/// A degree-preserving linear map between two bounded modules, one matrix per
/// degree 0..bound.
struct ModuleMap {
  std::vector<F2Matrix> mats;

  const F2Matrix& at(int d) const { return mats[static_cast<std::size_t>(d)]; }
  ModuleElement apply(const ModuleElement& x) const { return {x.degree, at(x.degree).apply(x.coords)}; }

  static ModuleMap identity(const BoundedUnstableModule& m) {
    ModuleMap f;
    for (int d = 0; d <= m.bound(); ++d) f.mats.push_back(F2Matrix::identity(static_cast<std::size_t>(m.dim(d))));
    return f;
  }
  static ModuleMap zero(const BoundedUnstableModule& src, const BoundedUnstableModule& dst) {
    ModuleMap f;
    for (int d = 0; d <= src.bound(); ++d)
      f.mats.emplace_back(static_cast<std::size_t>(src.dim(d)), static_cast<std::size_t>(dst.dim(d)));
    return f;
  }
};

/// Checks shapes and Sq-compatibility of f: src -> dst wherever both sides are
/// known. Returns a description of the first failure.
inline std::optional<std::string> module_map_violation(const ModuleMap& f, const BoundedUnstableModule& src,
                                                       const BoundedUnstableModule& dst) {
  if (src.bound() != dst.bound()) return "bounds differ";
  if (f.mats.size() != static_cast<std::size_t>(src.bound()) + 1) return "wrong number of degrees";
  for (int d = 0; d <= src.bound(); ++d)
    if (f.at(d).rows() != static_cast<std::size_t>(src.dim(d)) ||
        f.at(d).cols() != static_cast<std::size_t>(dst.dim(d)))
      return "shape mismatch in degree " + std::to_string(d);
  for (int k = 1; k <= src.bound(); ++k)
    for (int d = 0; d + k <= src.bound(); ++d) {
      const auto& a = src.sq_entry(k, d);
      const auto& b = dst.sq_entry(k, d);
      if (!a || !b) continue;
      if (!(a->then(f.at(d + k)) == f.at(d).then(*b)))
        return "does not commute with Sq^" + std::to_string(k) + " on degree " + std::to_string(d);
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tensor bases

/// Enumerates basis tuples of a tensor product of graded spaces in one total
/// degree. Tuples are ordered by their degree composition (lexicographic),
/// then by basis indices (lexicographic).
class TensorBasis {
 public:
  struct Factor {
    std::vector<int> dims;  // dimension per degree
    int min_degree = 0;
  };

  TensorBasis(std::vector<Factor> factors, int total) : factors_(std::move(factors)), total_(total) {
    std::vector<int> degs(factors_.size()), idx(factors_.size());
    enumerate_degrees(0, total, degs, idx);
    for (std::size_t i = 0; i < tuples_.size(); ++i) index_[tuples_[i]] = i;
  }

  std::size_t size() const { return tuples_.size(); }
  std::size_t arity() const { return factors_.size(); }

  /// Flattened tuple: deg_0, idx_0, deg_1, idx_1, ...
  const std::vector<int>& tuple(std::size_t i) const { return tuples_[i]; }
  std::optional<std::size_t> find(const std::vector<int>& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const std::vector<int>& t) const {
    auto f = find(t);
    if (!f) throw InvalidArgument("TensorBasis: tuple not in basis");
    return *f;
  }

 private:
  static int fdim(const Factor& f, int d) {
    if (d < 0 || d >= static_cast<int>(f.dims.size())) return 0;
    return f.dims[static_cast<std::size_t>(d)];
  }

  void enumerate_degrees(std::size_t pos, int remaining, std::vector<int>& degs, std::vector<int>& idx) {
    if (pos == factors_.size()) {
      if (remaining == 0) enumerate_indices(0, degs, idx);
      return;
    }
    const auto& f = factors_[pos];
    int min_rest = 0;
    for (std::size_t q = pos + 1; q < factors_.size(); ++q) min_rest += factors_[q].min_degree;
    for (int d = f.min_degree; d <= remaining - min_rest; ++d) {
      if (fdim(f, d) == 0) continue;
      degs[pos] = d;
      enumerate_degrees(pos + 1, remaining - d, degs, idx);
    }
  }

  void enumerate_indices(std::size_t pos, const std::vector<int>& degs, std::vector<int>& idx) {
    if (pos == factors_.size()) {
      std::vector<int> t;
      t.reserve(2 * degs.size());
      for (std::size_t q = 0; q < degs.size(); ++q) {
        t.push_back(degs[q]);
        t.push_back(idx[q]);
      }
      tuples_.push_back(std::move(t));
      return;
    }
    for (int i = 0; i < fdim(factors_[pos], degs[pos]); ++i) {
      idx[pos] = i;
      enumerate_indices(pos + 1, degs, idx);
    }
  }

  std::vector<Factor> factors_;
  int total_;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Catalog constructors

namespace detail {
inline F2Matrix zero_matrix(int r, int c) { return F2Matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); }
}  // namespace detail

/// Sigma^d F2: one class in degree d.
inline BoundedUnstableModule trivial_module(int d, int bound) {
  if (d < 0) throw InvalidArgument("trivial_module: negative degree");
  std::vector<int> dims(static_cast<std::size_t>(bound) + 1, 0);
  if (d <= bound) dims[static_cast<std::size_t>(d)] = 1;
  BoundedUnstableModule m(bound, dims, [&](int k, int deg) {
    return detail::zero_matrix(dims[static_cast<std::size_t>(deg)], dims[static_cast<std::size_t>(deg + k)]);
  });
  m.set_zero_from(d + 1);
  return m;
}

/// H*BZ/2 = F2[u], |u| = 1, with Sq^k u^j = C(j,k) u^{j+k}. `reduced` drops
/// degree 0.
inline BoundedUnstableModule h_module(int bound, bool reduced = false) {
  std::vector<int> dims(static_cast<std::size_t>(bound) + 1, 1);
  if (reduced) dims[0] = 0;
  return BoundedUnstableModule(bound, dims, [&](int k, int j) {
    F2Matrix m(1, 1);
    if (binom_mod2(j, k)) m.set(0, 0);
    return m;
  });
}

/// F(1): the sub-module of H*BZ/2 generated by u, spanned by u^{2^i}.
inline BoundedUnstableModule f1_module(int bound) {
  std::vector<int> dims(static_cast<std::size_t>(bound) + 1, 0);
  for (int p = 1; p <= bound; p *= 2) dims[static_cast<std::size_t>(p)] = 1;
  return BoundedUnstableModule(bound, dims, [&](int k, int j) {
    F2Matrix m(1, 1);
    if (binom_mod2(j, k)) m.set(0, 0);
    return m;
  });
}

/// The free unstable module F(n): basis Sq^I i_n with I admissible of
/// excess <= n. Basis order in each degree follows admissible_monomials().
inline BoundedUnstableModule free_module(int n, int bound) {
  if (n < 0) throw InvalidArgument("free_module: n must be >= 0");
  std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(bound) + 1);
  for (int d = n; d <= bound; ++d)
    for (const auto& m : admissible_monomials(d - n))
      if (excess(m) <= n) basis[static_cast<std::size_t>(d)].push_back(m);
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));
  return BoundedUnstableModule(bound, dims, [&](int k, int d) {
    const auto& src = basis[static_cast<std::size_t>(d)];
    const auto& dst = basis[static_cast<std::size_t>(d + k)];
    F2Matrix m(src.size(), dst.size());
    std::map<Monomial, std::size_t> where;
    for (std::size_t i = 0; i < dst.size(); ++i) where[dst[i]] = i;
    for (std::size_t i = 0; i < src.size(); ++i) {
      SqWord w{k};
      w.insert(w.end(), src[i].begin(), src[i].end());
      const SteenrodElement r = adem_reduce(w);
      for (const auto& t : r.terms()) {
        auto it = where.find(t);
        if (it != where.end()) m.flip(i, it->second);  // excess > n acts by zero
      }
    }
    return m;
  });
}

/// Sigma^s M, bound raised by s.
inline BoundedUnstableModule suspension(const BoundedUnstableModule& m, int s) {
  if (s < 0) throw InvalidArgument("suspension: negative shift");
  std::vector<int> dims(static_cast<std::size_t>(m.bound() + s) + 1, 0);
  for (int d = 0; d <= m.bound(); ++d) dims[static_cast<std::size_t>(d + s)] = m.dim(d);
  BoundedUnstableModule out(
      m.bound() + s, dims,
      [&](int k, int d) -> std::optional<F2Matrix> {
        if (d < s) return detail::zero_matrix(0, m.dim(d + k - s));
        return m.sq_entry(k, d - s);
      },
      false);
  out.set_zero_from(detail::shift_zero(m.zero_from(), s));
  return out;
}

/// Sigma^{-s} M for a module vanishing below degree s; the result must be
/// unstable (checked).
inline BoundedUnstableModule desuspension(const BoundedUnstableModule& m, int s) {
  for (int d = 0; d < s; ++d)
    if (m.dim(d) != 0) throw InvalidArgument("desuspension: module not (s-1)-connected");
  std::vector<int> dims;
  for (int d = s; d <= m.bound(); ++d) dims.push_back(m.dim(d));
  BoundedUnstableModule out(m.bound() - s, dims,
                               [&](int k, int d) -> std::optional<F2Matrix> { return m.sq_entry(k, d + s); });
  out.set_zero_from(detail::shift_zero(m.zero_from(), -s));
  return out;
}

inline BoundedUnstableModule direct_sum(const BoundedUnstableModule& a, const BoundedUnstableModule& b) {
  const int bound = std::min(a.bound(), b.bound());
  std::vector<int> dims;
  for (int d = 0; d <= bound; ++d) dims.push_back(a.dim(d) + b.dim(d));
  BoundedUnstableModule out(
      bound, dims,
      [&](int k, int d) -> std::optional<F2Matrix> {
        const auto& x = a.sq_entry(k, d);
        const auto& y = b.sq_entry(k, d);
        if (!x || !y) return std::nullopt;
        F2Matrix m(static_cast<std::size_t>(a.dim(d) + b.dim(d)),
                   static_cast<std::size_t>(a.dim(d + k) + b.dim(d + k)));
        for (std::size_t i = 0; i < x->rows(); ++i)
          for (auto j : x->row(i).ones()) m.set(i, j);
        for (std::size_t i = 0; i < y->rows(); ++i)
          for (auto j : y->row(i).ones())
            m.set(static_cast<std::size_t>(a.dim(d)) + i, static_cast<std::size_t>(a.dim(d + k)) + j);
        return m;
      },
      false);
  if (a.zero_from() && b.zero_from()) out.set_zero_from(std::max(*a.zero_from(), *b.zero_from()));
  return out;
}

/// Inclusion and projection maps of a direct sum.
inline ModuleMap sum_inclusion_left(const BoundedUnstableModule& a, const BoundedUnstableModule& sum) {
  ModuleMap f;
  for (int d = 0; d <= sum.bound(); ++d) {
    F2Matrix m(static_cast<std::size_t>(a.dim(d)), static_cast<std::size_t>(sum.dim(d)));
    for (int i = 0; i < a.dim(d); ++i) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    f.mats.push_back(m);
  }
  return f;
}
inline ModuleMap sum_projection_right(const BoundedUnstableModule& a, const BoundedUnstableModule& sum,
                                      const BoundedUnstableModule& b) {
  ModuleMap g;
  for (int d = 0; d <= sum.bound(); ++d) {
    F2Matrix m(static_cast<std::size_t>(sum.dim(d)), static_cast<std::size_t>(b.dim(d)));
    for (int i = 0; i < b.dim(d); ++i) m.set(static_cast<std::size_t>(a.dim(d) + i), static_cast<std::size_t>(i));
    g.mats.push_back(m);
  }
  return g;
}

/// Tensor product of several modules with the Cartan action, truncated at
/// `bound`. Basis in each degree follows TensorBasis with the given minimal
/// degrees per factor.
inline BoundedUnstableModule tensor_modules(const std::vector<const BoundedUnstableModule*>& fs,
                                            const std::vector<int>& min_degrees, int bound) {
  for (auto* f : fs)
    if (f->bound() < bound) throw OutOfBound("tensor_modules: factor bound below requested bound");
  std::vector<TensorBasis::Factor> factors;
  for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back({fs[i]->dims(), min_degrees[i]});
  std::vector<TensorBasis> bases;
  std::vector<int> dims;
  for (int t = 0; t <= bound; ++t) {
    bases.emplace_back(factors, t);
    dims.push_back(static_cast<int>(bases.back().size()));
  }
  const std::size_t r = fs.size();
  BoundedUnstableModule out(
      bound, dims,
      [&](int k, int d) -> std::optional<F2Matrix> {
        const auto& src = bases[static_cast<std::size_t>(d)];
        const auto& dst = bases[static_cast<std::size_t>(d + k)];
        F2Matrix m(src.size(), dst.size());
        bool unknown = false;
        std::vector<int> ks(r, 0);
        for (std::size_t row = 0; row < src.size() && !unknown; ++row) {
          const auto& tup = src.tuple(row);
          // distribute k over the factors, each share at most the factor degree
          auto rec = [&](auto&& self, std::size_t pos, int left, BitVec acc_dummy) -> void {
            (void)acc_dummy;
            if (unknown) return;
            if (pos == r) {
              if (left != 0) return;
              // product of Sq^{ks[i]} x_i: expand factorwise
              std::vector<std::vector<std::pair<int, int>>> images(r);  // (deg, idx) with coefficient 1
              for (std::size_t i = 0; i < r; ++i) {
                const int deg = tup[2 * i], idx = tup[2 * i + 1];
                if (ks[i] == 0) {
                  images[i].push_back({deg, idx});
                  continue;
                }
                const auto& e = fs[i]->sq_entry(ks[i], deg);
                if (!e) {
                  unknown = true;
                  return;
                }
                for (auto j : e->row(static_cast<std::size_t>(idx)).ones())
                  images[i].push_back({deg + ks[i], static_cast<int>(j)});
                if (images[i].empty()) return;
              }
              std::vector<int> out(2 * r);
              auto emit = [&](auto&& self2, std::size_t q) -> void {
                if (q == r) {
                  if (auto c = dst.find(out)) m.flip(row, *c);
                  return;
                }
                for (auto [dg, ix] : images[q]) {
                  out[2 * q] = dg;
                  out[2 * q + 1] = ix;
                  self2(self2, q + 1);
                }
              };
              emit(emit, 0);
              return;
            }
            const int deg = tup[2 * pos];
            const int maxk = std::min(left, deg);  // instability
            for (int kk = 0; kk <= maxk; ++kk) {
              if (deg + kk > fs[pos]->bound()) break;
              ks[pos] = kk;
              self(self, pos + 1, left - kk, BitVec());
            }
            ks[pos] = 0;
          };
          rec(rec, 0, k, BitVec());
        }
        if (unknown) return std::nullopt;
        return m;
      },
      false);
  // the product of finite modules vanishes above the sum of the top degrees
  int top = 0;
  bool finite = true;
  for (auto* f : fs) {
    if (!f->zero_from()) finite = false;
    else top += *f->zero_from() - 1;
  }
  if (finite) out.set_zero_from(top + 1);
  return out;
}

inline BoundedUnstableModule tensor(const BoundedUnstableModule& a, const BoundedUnstableModule& b) {
  const int bound = std::min(a.bound(), b.bound());
  auto m = tensor_modules({&a, &b}, {0, 0}, bound);
  m.validate();
  return m;
}

/// The same module presented in another basis: new basis vector i of degree d
/// is row i of p[d] (each p[d] invertible).
inline BoundedUnstableModule change_basis(const BoundedUnstableModule& m, const std::vector<F2Matrix>& p) {
  std::vector<F2Matrix> inv;
  for (int d = 0; d <= m.bound(); ++d) {
    const auto& pd = p[static_cast<std::size_t>(d)];
    const std::size_t n = pd.rows();
    F2Matrix iv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto x = solve(pd, BitVec::unit(n, i));
      if (!x) throw InvalidArgument("change_basis: singular matrix");
      iv.row(i) = *x;
    }
    inv.push_back(iv);
  }
  BoundedUnstableModule out(
      m.bound(), m.dims(),
      [&](int k, int d) -> std::optional<F2Matrix> {
        const auto& e = m.sq_entry(k, d);
        if (!e) return std::nullopt;
        return p[static_cast<std::size_t>(d)].then(*e).then(inv[static_cast<std::size_t>(d + k)]);
      },
      false);
  out.set_zero_from(m.zero_from());
  return out;
}

/// Sub-module of classes in degrees >= lo (always Sq-stable) and the quotient
/// of classes in degrees < lo.
inline BoundedUnstableModule degrees_at_least(const BoundedUnstableModule& m, int lo) {
  std::vector<int> dims;
  for (int d = 0; d <= m.bound(); ++d) dims.push_back(d >= lo ? m.dim(d) : 0);
  BoundedUnstableModule out(
      m.bound(), dims, [&](int k, int d) -> std::optional<F2Matrix> { return m.sq_entry(k, d); }, false);
  out.set_zero_from(m.zero_from());
  return out;
}
inline BoundedUnstableModule degrees_below(const BoundedUnstableModule& m, int lo) {
  std::vector<int> dims;
  for (int d = 0; d <= m.bound(); ++d) dims.push_back(d < lo ? m.dim(d) : 0);
  BoundedUnstableModule out(
      m.bound(), dims, [&](int k, int d) -> std::optional<F2Matrix> { return m.sq_entry(k, d); }, false);
  out.set_zero_from(m.zero_from() ? std::min(*m.zero_from(), std::max(lo, 0)) : std::max(lo, 0));
  return out;
}

/// The same module known only through a smaller bound.
inline BoundedUnstableModule truncate_bound(const BoundedUnstableModule& m, int bound) {
  if (bound > m.bound()) throw OutOfBound("truncate_bound: new bound exceeds the module bound");
  std::vector<int> dims(m.dims().begin(), m.dims().begin() + bound + 1);
  BoundedUnstableModule out(
      bound, dims, [&](int k, int d) -> std::optional<F2Matrix> { return m.sq_entry(k, d); }, false);
  out.set_zero_from(m.zero_from());
  return out;
}

/// Degreewise inclusion / projection between m and the two pieces above.
inline ModuleMap piece_map(const BoundedUnstableModule& src, const BoundedUnstableModule& dst) {
  ModuleMap f;
  for (int d = 0; d <= src.bound(); ++d) {
    if (src.dim(d) == dst.dim(d))
      f.mats.push_back(F2Matrix::identity(static_cast<std::size_t>(src.dim(d))));
    else
      f.mats.emplace_back(static_cast<std::size_t>(src.dim(d)), static_cast<std::size_t>(dst.dim(d)));
  }
  return f;
}

}  // namespace steem
