#pragma once

// Connected graded-commutative F2-algebras and their modules, given by
// explicit multiplication tables through a degree bound.

#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "f2.hpp"
#include "unstable_module.hpp"

namespace steem {

/// Products of basis elements of degrees a and b: a (dims[a]*dims[b]) x
/// dims[a+b] matrix, row i*dims[b] + j holding e^a_i * e^b_j.
using ProductTable = std::vector<std::vector<F2Matrix>>;

namespace detail {

inline std::size_t sz(int x) { return static_cast<std::size_t>(x); }

inline int dim_at(const std::vector<int>& dims, int d) {
  if (d < 0 || d >= static_cast<int>(dims.size())) return 0;
  return dims[sz(d)];
}

/// Bilinear extension of a basis product table.
inline BitVec bilinear(const F2Matrix& table, std::size_t db, const BitVec& x, const BitVec& y) {
  BitVec out(table.cols());
  for (auto i : x.ones())
    for (auto j : y.ones()) out ^= table.row(i * db + j);
  return out;
}

}  // namespace detail

class GradedAlgebra {
 public:
  using MulFn = std::function<BitVec(int a, int i, int b, int j)>;

  GradedAlgebra() = default;

  /// Builds the algebra from a product function on basis elements; the unit is
  /// basis element 0 of degree 0. Verifies connectivity, unit, associativity
  /// and commutativity through the bound.
  GradedAlgebra(int bound, std::vector<int> dims, const MulFn& mul, std::string name = {})
      : bound_(bound), dims_(std::move(dims)), name_(std::move(name)) {
    if (bound < 0) throw InvalidArgument("algebra bound must be non-negative");
    dims_.resize(detail::sz(bound) + 1, 0);
    if (dims_[0] != 1) throw InvalidArgument("algebra must be connected (dim 1 in degree 0)");
    mul_.resize(detail::sz(bound) + 1);
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; a + b <= bound; ++b) {
        F2Matrix m(detail::sz(dim(a) * dim(b)), detail::sz(dim(a + b)));
        for (int i = 0; i < dim(a); ++i)
          for (int j = 0; j < dim(b); ++j) {
            BitVec v = mul(a, i, b, j);
            if (v.size() != detail::sz(dim(a + b))) throw InvalidArgument("product has wrong length");
            m.row(detail::sz(i * dim(b) + j)) = v;
          }
        mul_[detail::sz(a)].push_back(std::move(m));
      }
    validate();
  }

  int bound() const { return bound_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int d) const { return detail::dim_at(dims_, d); }
  const std::string& name() const { return name_; }

  /// Table for degrees (a, b); requires a + b <= bound.
  const F2Matrix& table(int a, int b) const {
    if (a < 0 || b < 0 || a + b > bound_) throw OutOfBound("product degree exceeds the algebra bound");
    return mul_[detail::sz(a)][detail::sz(b)];
  }

  BitVec multiply(int a, const BitVec& x, int b, const BitVec& y) const {
    return detail::bilinear(table(a, b), detail::sz(dim(b)), x, y);
  }
  BitVec basis_product(int a, int i, int b, int j) const {
    return table(a, b).row(detail::sz(i * dim(b) + j));
  }

  /// Truncation to a smaller bound.
  GradedAlgebra truncate(int bound) const {
    if (bound > bound_) throw OutOfBound("cannot raise an algebra bound");
    return GradedAlgebra(bound, std::vector<int>(dims_.begin(), dims_.begin() + bound + 1),
                         [this](int a, int i, int b, int j) { return basis_product(a, i, b, j); }, name_);
  }

  bool operator==(const GradedAlgebra& o) const { return bound_ == o.bound_ && dims_ == o.dims_ && mul_ == o.mul_; }

 private:
  void validate() const {
    for (int d = 0; d <= bound_; ++d)
      for (int i = 0; i < dim(d); ++i) {
        const BitVec e = BitVec::unit(detail::sz(dim(d)), detail::sz(i));
        if (!(basis_product(0, 0, d, i) == e) || !(basis_product(d, i, 0, 0) == e))
          throw InvariantViolation("unit law fails in degree " + std::to_string(d));
      }
    for (int a = 1; a <= bound_; ++a)
      for (int b = 1; a + b <= bound_; ++b)
        for (int i = 0; i < dim(a); ++i)
          for (int j = 0; j < dim(b); ++j)
            if (!(basis_product(a, i, b, j) == basis_product(b, j, a, i)))
              throw InvariantViolation("not commutative in degrees " + std::to_string(a) + ", " + std::to_string(b));
    for (int a = 1; a <= bound_; ++a)
      for (int b = 1; a + b <= bound_; ++b)
        for (int c = 1; a + b + c <= bound_; ++c)
          for (int i = 0; i < dim(a); ++i)
            for (int j = 0; j < dim(b); ++j)
              for (int k = 0; k < dim(c); ++k) {
                const BitVec z = BitVec::unit(detail::sz(dim(c)), detail::sz(k));
                const BitVec lhs = multiply(a + b, basis_product(a, i, b, j), c, z);
                const BitVec rhs = multiply(a, BitVec::unit(detail::sz(dim(a)), detail::sz(i)), b + c,
                                            basis_product(b, j, c, k));
                if (!(lhs == rhs))
                  throw InvariantViolation("not associative in degrees " + std::to_string(a) + ", " +
                                           std::to_string(b) + ", " + std::to_string(c));
              }
  }

  int bound_ = 0;
  std::vector<int> dims_{1};
  ProductTable mul_;
  std::string name_;
};

/// A graded module over a GradedAlgebra (left = right, the algebra being
/// commutative), through its own bound.
class GradedModule {
 public:
  using ActFn = std::function<BitVec(int a, int i, int m, int j)>;

  GradedModule() = default;

  GradedModule(const GradedAlgebra& alg, int bound, std::vector<int> dims, const ActFn& act, std::string name = {})
      : bound_(bound), dims_(std::move(dims)), name_(std::move(name)) {
    if (bound < 0) throw InvalidArgument("module bound must be non-negative");
    if (bound > alg.bound()) throw OutOfBound("module bound exceeds the algebra bound");
    dims_.resize(detail::sz(bound) + 1, 0);
    alg_dims_ = std::vector<int>(alg.dims().begin(), alg.dims().begin() + bound + 1);
    act_.resize(detail::sz(bound) + 1);
    for (int a = 0; a <= bound; ++a)
      for (int m = 0; a + m <= bound; ++m) {
        F2Matrix t(detail::sz(alg.dim(a) * dim(m)), detail::sz(dim(a + m)));
        for (int i = 0; i < alg.dim(a); ++i)
          for (int j = 0; j < dim(m); ++j) {
            BitVec v = act(a, i, m, j);
            if (v.size() != detail::sz(dim(a + m))) throw InvalidArgument("action has wrong length");
            t.row(detail::sz(i * dim(m) + j)) = v;
          }
        act_[detail::sz(a)].push_back(std::move(t));
      }
    validate(alg);
  }

  int bound() const { return bound_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int d) const { return detail::dim_at(dims_, d); }
  const std::string& name() const { return name_; }

  const F2Matrix& table(int a, int m) const {
    if (a < 0 || m < 0 || a + m > bound_) throw OutOfBound("action degree exceeds the module bound");
    return act_[detail::sz(a)][detail::sz(m)];
  }
  BitVec act(int a, const BitVec& x, int m, const BitVec& y) const {
    return detail::bilinear(table(a, m), detail::sz(dim(m)), x, y);
  }
  BitVec basis_act(int a, int i, int m, int j) const { return table(a, m).row(detail::sz(i * dim(m) + j)); }

  bool operator==(const GradedModule& o) const { return bound_ == o.bound_ && dims_ == o.dims_ && act_ == o.act_; }

 private:
  void validate(const GradedAlgebra& alg) const {
    for (int m = 0; m <= bound_; ++m)
      for (int j = 0; j < dim(m); ++j)
        if (!(basis_act(0, 0, m, j) == BitVec::unit(detail::sz(dim(m)), detail::sz(j))))
          throw InvariantViolation("unit acts non-trivially in degree " + std::to_string(m));
    for (int a = 1; a <= bound_; ++a)
      for (int b = 1; a + b <= bound_; ++b)
        for (int m = 0; a + b + m <= bound_; ++m)
          for (int i = 0; i < alg.dim(a); ++i)
            for (int j = 0; j < alg.dim(b); ++j)
              for (int k = 0; k < dim(m); ++k) {
                const BitVec y = BitVec::unit(detail::sz(dim(m)), detail::sz(k));
                const BitVec lhs = act(a + b, alg.basis_product(a, i, b, j), m, y);
                const BitVec rhs = act(a, BitVec::unit(detail::sz(alg.dim(a)), detail::sz(i)), b + m,
                                       basis_act(b, j, m, k));
                if (!(lhs == rhs)) throw InvariantViolation("module associativity fails");
              }
  }

  int bound_ = 0;
  std::vector<int> dims_{0};
  std::vector<int> alg_dims_;
  std::vector<std::vector<F2Matrix>> act_;
  std::string name_;
};

/// Degree-preserving algebra map, one matrix per degree.
struct AlgebraMap {
  std::vector<F2Matrix> mats;
  const F2Matrix& at(int d) const { return mats[detail::sz(d)]; }
};

inline std::optional<std::string> algebra_map_violation(const AlgebraMap& f, const GradedAlgebra& a,
                                                        const GradedAlgebra& b) {
  const int bound = std::min(a.bound(), b.bound());
  if (f.mats.size() < detail::sz(bound) + 1) return "too few degrees";
  for (int d = 0; d <= bound; ++d)
    if (f.at(d).rows() != detail::sz(a.dim(d)) || f.at(d).cols() != detail::sz(b.dim(d)))
      return "shape mismatch in degree " + std::to_string(d);
  if (!f.at(0).get(0, 0)) return "unit not preserved";
  for (int x = 1; x <= bound; ++x)
    for (int y = 1; x + y <= bound; ++y)
      for (int i = 0; i < a.dim(x); ++i)
        for (int j = 0; j < a.dim(y); ++j) {
          const BitVec lhs = f.at(x + y).apply(a.basis_product(x, i, y, j));
          const BitVec rhs = b.multiply(x, f.at(x).row(detail::sz(i)), y, f.at(y).row(detail::sz(j)));
          if (!(lhs == rhs)) return "not multiplicative in degrees " + std::to_string(x) + ", " + std::to_string(y);
        }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Catalog

/// F2[x]/(x^h), |x| = k; h = 0 means no truncation.
inline GradedAlgebra truncated_polynomial(int k, int h, int bound, std::string name = {}) {
  if (k < 1) throw InvalidArgument("generator degree must be positive");
  if (h < 0) throw InvalidArgument("truncation height must be non-negative");
  std::vector<int> dims(detail::sz(bound) + 1, 0);
  for (int j = 0; j * k <= bound && (h == 0 || j < h); ++j) dims[detail::sz(j * k)] = 1;
  if (name.empty()) name = h == 0 ? "Poly(" + std::to_string(k) + ")" : "Trunc(" + std::to_string(k) + "," + std::to_string(h) + ")";
  return GradedAlgebra(
      bound, dims,
      [&](int a, int, int b, int) {
        BitVec v(detail::sz(detail::dim_at(dims, a + b)));
        if (v.size() == 1) v.set(0);
        return v;
      },
      name);
}

inline GradedAlgebra polynomial(int k, int bound) { return truncated_polynomial(k, 0, bound); }
inline GradedAlgebra exterior(int k, int bound) {
  return truncated_polynomial(k, 2, bound, "Lambda(" + std::to_string(k) + ")");
}

/// F2 concentrated in degree 0.
inline GradedAlgebra ground_algebra(int bound) {
  std::vector<int> dims(detail::sz(bound) + 1, 0);
  dims[0] = 1;
  return GradedAlgebra(
      bound, dims,
      [&](int a, int, int b, int) {
        BitVec v(detail::sz(detail::dim_at(dims, a + b)));
        if (a + b == 0) v.set(0);
        return v;
      },
      "F2");
}

/// F2 plus generators in the given positive degrees, all products zero.
inline GradedAlgebra square_zero(const std::vector<int>& degrees, int bound) {
  std::vector<int> dims(detail::sz(bound) + 1, 0);
  dims[0] = 1;
  std::string name = "SqZero(";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw InvalidArgument("square_zero: generator degrees must be positive");
    if (degrees[i] <= bound) ++dims[detail::sz(degrees[i])];
    name += (i ? "," : "") + std::to_string(degrees[i]);
  }
  name += ")";
  return GradedAlgebra(
      bound, dims,
      [&](int a, int i, int b, int j) {
        BitVec v(detail::sz(detail::dim_at(dims, a + b)));
        if (a == 0) v.set(detail::sz(j));
        else if (b == 0) v.set(detail::sz(i));
        return v;
      },
      name);
}

/// A (x) B with basis ordered by TensorBasis.
inline GradedAlgebra tensor_algebras(const GradedAlgebra& a, const GradedAlgebra& b) {
  const int bound = std::min(a.bound(), b.bound());
  std::vector<TensorBasis> bases;
  std::vector<int> dims;
  for (int t = 0; t <= bound; ++t) {
    bases.emplace_back(std::vector<TensorBasis::Factor>{{a.dims(), 0}, {b.dims(), 0}}, t);
    dims.push_back(static_cast<int>(bases.back().size()));
  }
  return GradedAlgebra(
      bound, dims,
      [&](int p, int i, int q, int j) {
        const auto& x = bases[detail::sz(p)].tuple(detail::sz(i));
        const auto& y = bases[detail::sz(q)].tuple(detail::sz(j));
        const BitVec l = a.basis_product(x[0], x[1], y[0], y[1]);
        const BitVec r = b.basis_product(x[2], x[3], y[2], y[3]);
        BitVec out(bases[detail::sz(p + q)].size());
        for (auto li : l.ones())
          for (auto ri : r.ones())
            out.flip(bases[detail::sz(p + q)].index({x[0] + y[0], static_cast<int>(li), x[2] + y[2], static_cast<int>(ri)}));
        return out;
      },
      "tensor(" + a.name() + "," + b.name() + ")");
}

/// The algebra as a module over itself.
inline GradedModule regular_module(const GradedAlgebra& a, int bound) {
  return GradedModule(
      a, bound, std::vector<int>(a.dims().begin(), a.dims().begin() + bound + 1),
      [&](int x, int i, int m, int j) { return a.basis_product(x, i, m, j); }, a.name());
}

/// F2 in degree 0 with the augmentation action.
inline GradedModule augmentation_module(const GradedAlgebra& a, int bound) {
  std::vector<int> dims(detail::sz(bound) + 1, 0);
  dims[0] = 1;
  return GradedModule(
      a, bound, dims,
      [&](int x, int, int m, int) {
        BitVec v(detail::sz(detail::dim_at(dims, x + m)));
        if (x == 0 && m == 0) v.set(0);
        return v;
      },
      "F2");
}

/// B regarded as an A-module through an algebra map f: A -> B.
inline GradedModule module_via(const GradedAlgebra& a, const GradedAlgebra& b, const AlgebraMap& f, int bound) {
  if (auto v = algebra_map_violation(f, a, b)) throw InvalidArgument("module_via: " + *v);
  return GradedModule(
      a, bound, std::vector<int>(b.dims().begin(), b.dims().begin() + bound + 1),
      [&](int x, int i, int m, int j) {
        return b.multiply(x, f.at(x).row(detail::sz(i)), m, BitVec::unit(detail::sz(b.dim(m)), detail::sz(j)));
      },
      b.name());
}

/// The augmentation A -> F2 and the unit F2 -> A as algebra maps.
inline AlgebraMap augmentation_map(const GradedAlgebra& a, const GradedAlgebra& ground) {
  AlgebraMap f;
  for (int d = 0; d <= std::min(a.bound(), ground.bound()); ++d) {
    F2Matrix m(detail::sz(a.dim(d)), detail::sz(ground.dim(d)));
    if (d == 0) m.set(0, 0);
    f.mats.push_back(m);
  }
  return f;
}

/// Whether an unstable-module structure on the underlying space of A satisfies
/// the Cartan formula with respect to the products of A.
inline std::optional<std::string> cartan_violation(const GradedAlgebra& a, const BoundedUnstableModule& m) {
  const int bound = std::min(a.bound(), m.bound());
  for (int d = 0; d <= bound; ++d)
    if (a.dim(d) != m.dim(d)) return "dimension mismatch in degree " + std::to_string(d);
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; x + y <= bound; ++y)
      for (int k = 1; x + y + k <= bound; ++k)
        for (int i = 0; i < a.dim(x); ++i)
          for (int j = 0; j < a.dim(y); ++j) {
            const auto& lhs_op = m.sq_entry(k, x + y);
            if (!lhs_op) continue;
            const BitVec lhs = lhs_op->apply(a.basis_product(x, i, y, j));
            BitVec rhs(detail::sz(a.dim(x + y + k)));
            bool known = true;
            for (int p = 0; p <= k && known; ++p) {
              const int q = k - p;
              BitVec u = BitVec::unit(detail::sz(a.dim(x)), detail::sz(i));
              BitVec w = BitVec::unit(detail::sz(a.dim(y)), detail::sz(j));
              if (p > 0) {
                const auto& e = m.sq_entry(p, x);
                if (!e) { known = false; break; }
                u = e->apply(u);
              }
              if (q > 0) {
                const auto& e = m.sq_entry(q, y);
                if (!e) { known = false; break; }
                w = e->apply(w);
              }
              rhs ^= a.multiply(x + p, u, y + q, w);
            }
            if (known && !(lhs == rhs))
              return "Cartan formula fails for Sq^" + std::to_string(k) + " on degrees " + std::to_string(x) + ", " +
                     std::to_string(y);
          }
  return std::nullopt;
}

}  // namespace steem
