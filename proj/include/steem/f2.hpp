#pragma once

// Dense linear algebra over the two-element field.
//
// Linear maps use the row convention throughout: a map V -> W is a
// dim(V) x dim(W) matrix whose i-th row is the image of the i-th basis
// vector, and a vector v is mapped to v * M.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace steem {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    assert(o.n_ == n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const {
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Lowest set index.
  std::optional<std::size_t> first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return std::nullopt;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Parity of the bitwise AND.
  bool dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  bool operator==(const BitVec& o) const = default;

  /// Lexicographic order reading index 0 first, a set bit beating a clear one.
  bool lex_less(const BitVec& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i) != o.get(i)) return o.get(i);
    return false;
  }

  std::string str() const {
    std::string s(n_, '0');
    for (auto i : ones()) s[i] = '1';
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static F2Matrix from_rows(std::size_t cols, std::vector<BitVec> rows) {
    F2Matrix m;
    m.cols_ = cols;
    for (auto& r : rows)
      if (r.size() != cols) throw InvalidArgument("F2Matrix: row length mismatch");
    m.rows_ = std::move(rows);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVec>& row_list() const { return rows_; }

  /// v * M.
  BitVec apply(const BitVec& v) const {
    assert(v.size() == rows());
    BitVec out(cols_);
    for (auto i : v.ones()) out ^= rows_[i];
    return out;
  }

  /// Composite "this, then o".
  F2Matrix then(const F2Matrix& o) const {
    assert(cols_ == o.rows());
    F2Matrix out(rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = o.apply(rows_[i]);
    return out;
  }

  F2Matrix& operator+=(const F2Matrix& o) {
    assert(rows() == o.rows() && cols_ == o.cols_);
    for (std::size_t i = 0; i < rows(); ++i) rows_[i] ^= o.rows_[i];
    return *this;
  }
  friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (auto j : rows_[i].ones()) t.set(j, i);
    return t;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec& r) { return r.none(); });
  }

  bool operator==(const F2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Incrementally maintained reduced row echelon basis of a subspace of F2^n.
///
/// Every stored row has a pivot (its lowest set index) that is clear in all
/// other rows. Optionally tracks, for each row, which inserted vectors it is
/// a combination of.
class Echelon {
 public:
  explicit Echelon(std::size_t n, bool track = false) : n_(n), track_(track) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Remainder of v modulo the span; its pivot-column entries are clear.
  BitVec reduce(const BitVec& v) const {
    BitVec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (r.get(pivots_[k])) r ^= rows_[k];
    return r;
  }

  /// Reduces v and reports the combination of inserted vectors used.
  std::pair<BitVec, BitVec> reduce_tracked(const BitVec& v) const {
    BitVec r = v;
    BitVec combo(capacity_);
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (r.get(pivots_[k])) {
        r ^= rows_[k];
        combo ^= combos_[k];
      }
    return {r, combo};
  }

  bool contains(const BitVec& v) const { return reduce(v).none(); }

  /// Inserts v; returns true when the span grew. With tracking enabled,
  /// `reserve_tracking` must have been called with the number of vectors.
  bool insert(const BitVec& v) {
    const std::size_t id = inserted_++;
    BitVec combo;
    if (track_) {
      assert(id < capacity_);
      combo = BitVec::unit(capacity_, id);
    }
    BitVec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (r.get(pivots_[k])) {
        r ^= rows_[k];
        if (track_) combo ^= combos_[k];
      }
    auto p = r.first();
    if (!p) {
      if (track_) dependencies_.push_back(combo);
      return false;
    }
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k].get(*p)) {
        rows_[k] ^= r;
        if (track_) combos_[k] ^= combo;
      }
    // keep rows sorted by pivot
    auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), *p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), r);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), *p);
    if (track_) combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), combo);
    return true;
  }

  void reserve_tracking(std::size_t count) {
    track_ = true;
    capacity_ = count;
  }

  const std::vector<BitVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<BitVec>& combos() const { return combos_; }
  /// Combinations of inserted vectors that reduced to zero.
  const std::vector<BitVec>& dependencies() const { return dependencies_; }

 private:
  std::size_t n_;
  bool track_;
  std::size_t capacity_ = 0;
  std::size_t inserted_ = 0;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVec> combos_;
  std::vector<BitVec> dependencies_;
};

/// Reduced row echelon basis of span(vs) inside F2^n.
inline std::vector<BitVec> rref(std::size_t n, const std::vector<BitVec>& vs) {
  Echelon e(n);
  for (const auto& v : vs) e.insert(v);
  return e.basis();
}

struct Elimination {
  std::size_t rank = 0;
  std::vector<BitVec> kernel;  // basis of {v : v * M = 0}, in RREF
  std::vector<BitVec> image;   // basis of the row space, in RREF
};

inline Elimination gaussian(const F2Matrix& m) {
  Echelon e(m.cols());
  e.reserve_tracking(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  Elimination out;
  out.rank = e.dim();
  out.image = e.basis();
  out.kernel = rref(m.rows(), e.dependencies());
  return out;
}

inline std::size_t rank(const F2Matrix& m) { return gaussian(m).rank; }
inline std::vector<BitVec> kernel(const F2Matrix& m) { return gaussian(m).kernel; }

/// Some x with x * M = b, if one exists.
inline std::optional<BitVec> solve(const F2Matrix& m, const BitVec& b) {
  Echelon e(m.cols());
  e.reserve_tracking(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  auto [r, combo] = e.reduce_tracked(b);
  if (r.any()) return std::nullopt;
  return combo;
}

/// Matrix whose rows are the given vectors.
inline F2Matrix matrix_of(std::size_t n, const std::vector<BitVec>& rows) {
  return F2Matrix::from_rows(n, rows);
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<F2Matrix> inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  F2Matrix out(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto x = solve(m, BitVec::unit(m.cols(), i));
    if (!x) return std::nullopt;
    out.row(i) = *x;
  }
  return out;
}

/// Basis of span(U) ∩ span(W) inside F2^n.
inline std::vector<BitVec> intersect(std::size_t n, const std::vector<BitVec>& u,
                                     const std::vector<BitVec>& w) {
  if (u.empty() || w.empty()) return {};
  std::vector<BitVec> stacked = u;
  stacked.insert(stacked.end(), w.begin(), w.end());
  auto ker = kernel(matrix_of(n, stacked));
  std::vector<BitVec> out;
  for (const auto& k : ker) {
    BitVec v(n);
    for (auto i : k.ones())
      if (i < u.size()) v ^= u[i];
    out.push_back(v);
  }
  return rref(n, out);
}

/// Basis of {v in span(domain) : v * M in span(target)}; vectors live in the
/// source space of M.
inline std::vector<BitVec> preimage(const F2Matrix& m, const std::vector<BitVec>& domain,
                                    const std::vector<BitVec>& target) {
  if (domain.empty()) return {};
  Echelon t(m.cols());
  for (const auto& v : target) t.insert(v);
  // coordinates mod target: entries at non-pivot columns of the reduced form
  std::vector<BitVec> images;
  images.reserve(domain.size());
  for (const auto& d : domain) images.push_back(t.reduce(m.apply(d)));
  auto ker = kernel(matrix_of(m.cols(), images));
  std::vector<BitVec> out;
  for (const auto& k : ker) {
    BitVec v(m.rows());
    for (auto i : k.ones()) v ^= domain[i];
    out.push_back(v);
  }
  return rref(m.rows(), out);
}

/// The quotient span(big) / span(sub) with an explicit complement basis.
///
/// `sub` must lie inside `big`. Representatives are chosen greedily from the
/// RREF basis of `big`, which makes them deterministic.
class Quotient {
 public:
  Quotient() = default;
  Quotient(std::size_t n, const std::vector<BitVec>& big, const std::vector<BitVec>& sub)
      : n_(n), all_(n) {
    for (const auto& s : sub) all_.insert(s);
    sub_dim_ = all_.dim();
    for (const auto& b : rref(n, big))
      if (all_.insert(b)) reps_.push_back(b);
    // rebuild with tracking so coordinates can be read off
    tracked_ = Echelon(n);
    tracked_.reserve_tracking(sub_dim_ + reps_.size());
    Echelon subonly(n);
    for (const auto& s : sub) subonly.insert(s);
    for (const auto& s : subonly.basis()) tracked_.insert(s);
    for (const auto& r : reps_) tracked_.insert(r);
  }

  std::size_t dim() const { return reps_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<BitVec>& reps() const { return reps_; }

  bool contains(const BitVec& v) const { return tracked_.contains(v); }
  bool in_sub(const BitVec& v) const { return coords(v).none(); }

  /// Coordinates of the class of v (v must lie in `big`).
  BitVec coords(const BitVec& v) const {
    auto [r, combo] = tracked_.reduce_tracked(v);
    if (r.any()) throw InvalidArgument("Quotient::coords: vector outside the ambient subspace");
    BitVec out(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (combo.get(sub_dim_ + i)) out.set(i);
    return out;
  }

  BitVec lift(const BitVec& c) const {
    BitVec v(n_);
    for (auto i : c.ones()) v ^= reps_[i];
    return v;
  }

 private:
  std::size_t n_ = 0;
  Echelon all_{0};
  Echelon tracked_{0};
  std::size_t sub_dim_ = 0;
  std::vector<BitVec> reps_;
};

/// Homology at the middle of  in -> here -> out  (row convention), with
/// deterministic cycle representatives.
struct HomologyGroup {
  std::size_t dim() const { return quotient.dim(); }
  std::vector<BitVec> cycles;
  std::vector<BitVec> boundaries;
  Quotient quotient;
};

inline HomologyGroup homology(std::size_t here, const F2Matrix* in, const F2Matrix* out) {
  HomologyGroup h;
  if (out) {
    h.cycles = kernel(*out);
  } else {
    for (std::size_t i = 0; i < here; ++i) h.cycles.push_back(BitVec::unit(here, i));
  }
  if (in) h.boundaries = gaussian(*in).image;
  h.quotient = Quotient(here, h.cycles, h.boundaries);
  return h;
}

}  // namespace steem
