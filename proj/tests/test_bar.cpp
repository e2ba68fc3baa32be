#include <catch_amalgamated.hpp>

#include "steem/bar.hpp"

using namespace steem;

namespace {

using Table = std::map<std::pair<int, int>, int>;

Table tor_table(const GradedAlgebra& a, int s_max, int t_max, bool reduced = true) {
  auto k = augmentation_module(a, t_max);
  return tor(a, k, k, s_max, t_max, reduced).table();
}

// number of words of length s in generators with the given degrees, total t
int words(const std::vector<int>& gens, int s, int t) {
  if (s == 0) return t == 0 ? 1 : 0;
  int n = 0;
  for (int g : gens)
    if (g <= t) n += words(gens, s - 1, t - g);
  return n;
}

}  // namespace

TEST_CASE("Tor over an exterior algebra is divided powers") {
  for (int k : {1, 2, 3}) {
    const int T = 9;
    auto t = tor_table(exterior(k, T), 4, T);
    for (auto [st, dim] : t) CHECK(dim == (st.second == st.first * k ? 1 : 0));
  }
}

TEST_CASE("Tor over a polynomial algebra is exterior") {
  for (int k : {1, 2}) {
    const int T = 8;
    auto t = tor_table(polynomial(k, T), 3, T);
    for (auto [st, dim] : t) {
      const auto [s, d] = st;
      CHECK(dim == ((s == 0 && d == 0) || (s == 1 && d == k) ? 1 : 0));
    }
  }
}

TEST_CASE("Tor over a truncated polynomial algebra") {
  const int k = 1, h = 3, T = 10;
  auto t = tor_table(truncated_polynomial(k, h, T), 4, T);
  for (auto [st, dim] : t) {
    const auto [s, d] = st;
    const int expect = s % 2 == 0 ? (d == (s / 2) * h * k) : (d == (s / 2) * h * k + k);
    CHECK(dim == expect);
  }
}

TEST_CASE("square-zero algebras have zero bar differential") {
  const std::vector<int> gens = {1, 2};
  const int T = 6;
  auto t = tor_table(square_zero(gens, T), 4, T);
  for (auto [st, dim] : t) CHECK(dim == words(gens, st.first, st.second));
}

TEST_CASE("reduced and unreduced bar complexes agree") {
  for (const auto& a : {exterior(1, 6), polynomial(2, 6), square_zero({1, 3}, 6), truncated_polynomial(1, 3, 6)}) {
    INFO(a.name());
    CHECK(tor_table(a, 3, 6, true) == tor_table(a, 3, 6, false));
  }
}

TEST_CASE("Kunneth for tensor products of algebras") {
  const int T = 7, S = 3;
  auto a = exterior(1, T);
  auto b = polynomial(2, T);
  auto ta = tor_table(a, S, T), tb = tor_table(b, S, T);
  auto tab = tor_table(tensor_algebras(a, b), S, T);
  for (int s = 0; s <= S; ++s)
    for (int t = 0; t <= T; ++t) {
      int expect = 0;
      for (int s1 = 0; s1 <= s; ++s1)
        for (int t1 = 0; t1 <= t; ++t1) expect += ta[{s1, t1}] * tb[{s - s1, t - t1}];
      INFO("s=" << s << " t=" << t);
      CHECK(tab[{s, t}] == expect);
    }
}

TEST_CASE("free modules have no higher Tor and Tor_0 is the tensor product") {
  const int T = 6;
  for (const auto& a : {polynomial(1, T), exterior(2, T), square_zero({1, 2}, T)}) {
    INFO(a.name());
    auto reg = regular_module(a, T);
    auto k = augmentation_module(a, T);
    auto r = tor(a, reg, k, 2, T);
    for (int t = 0; t <= T; ++t) {
      CHECK(r.dim(0, t) == (t == 0 ? 1 : 0));
      CHECK(r.dim(1, t) == 0);
      CHECK(r.dim(2, t) == 0);
    }
    auto rr = tor(a, reg, reg, 1, T);
    auto direct = tensor_over(a, reg, reg, T);
    for (int t = 0; t <= T; ++t) CHECK(rr.dim(0, t) == direct[static_cast<std::size_t>(t)]);
  }
  // F2[u] over F2[u^2]: free of rank 2
  auto q = polynomial(2, T);
  auto p = polynomial(1, T);
  AlgebraMap inc;
  for (int d = 0; d <= T; ++d) {
    F2Matrix m(static_cast<std::size_t>(q.dim(d)), 1);
    if (q.dim(d)) m.set(0, 0);
    inc.mats.push_back(m);
  }
  auto m = module_via(q, p, inc, T);
  auto k = augmentation_module(q, T);
  auto r = tor(q, m, k, 2, T);
  auto direct = tensor_over(q, m, k, T);
  for (int t = 0; t <= T; ++t) {
    CHECK(r.dim(0, t) == (t <= 1 ? 1 : 0));
    CHECK(r.dim(0, t) == direct[static_cast<std::size_t>(t)]);
    CHECK(r.dim(1, t) == 0);
  }
}

TEST_CASE("window beyond the bound is rejected") {
  auto a = exterior(1, 4);
  auto k = augmentation_module(a, 4);
  CHECK_THROWS_AS(bar_complex(a, k, k, 2, 5), OutOfBound);
}

TEST_CASE("simplicial bar and its normalized complex") {
  const int T = 5, S = 3;
  for (const auto& a : {exterior(1, T), polynomial(1, T), square_zero({1, 2}, T)}) {
    INFO(a.name());
    auto k = augmentation_module(a, T);
    auto x = simplicial_bar(a, k, k, S + 1, T);
    CHECK_FALSE(x.identity_violation());
    auto n = normalized_complex(x);
    CHECK(n.isomorphic);
    // the normalized complex is the reduced bar complex
    auto red = bar_complex(a, k, k, S + 1, T, true);
    for (int s = 0; s <= S + 1; ++s)
      for (int t = 0; t <= T; ++t) CHECK(n.normalized.dim(s, t) == red.dim(s, t));
    auto hn = homology(n.normalized);
    auto tt = tor_table(a, S, T);
    CHECK(hn.table() == tt);
    CHECK(homology(n.quotient).table() == tt);
  }
}

TEST_CASE("a broken face map is detected") {
  const int T = 3;
  auto a = polynomial(1, T);
  auto k = augmentation_module(a, T);
  auto x = simplicial_bar(a, k, k, 2, T);
  x.faces[2][1][2] = F2Matrix(static_cast<std::size_t>(x.dim(2, 2)), static_cast<std::size_t>(x.dim(1, 2)));
  CHECK(x.identity_violation());
  CHECK_THROWS_AS(normalized_complex(x), InvariantViolation);
}

TEST_CASE("constant simplicial object") {
  SimplicialGradedVS x;
  x.n_max = 3;
  x.t_max = 1;
  x.dims.assign(4, std::vector<int>{2, 1});
  x.faces.resize(4);
  x.degeneracies.resize(4);
  for (int n = 0; n <= 3; ++n) {
    auto ids = std::vector<F2Matrix>{F2Matrix::identity(2), F2Matrix::identity(1)};
    if (n >= 1) x.faces[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, ids);
    if (n + 1 <= 3) x.degeneracies[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, ids);
  }
  CHECK_FALSE(x.identity_violation());
  auto r = normalized_complex(x);
  CHECK(r.isomorphic);
  auto h = homology(r.normalized);
  CHECK(h.dim(0, 0) == 2);
  CHECK(h.dim(0, 1) == 1);
  for (int s = 1; s <= h.s_max; ++s)
    for (int t = 0; t <= 1; ++t) CHECK(h.dim(s, t) == 0);
}

TEST_CASE("Tor does not depend on the basis order") {
  // F2[u]/u^4 (x) Lambda(x_3) presented with the factors swapped
  const int T = 9;
  auto a = tensor_algebras(truncated_polynomial(1, 4, T), exterior(3, T));
  auto b = tensor_algebras(exterior(3, T), truncated_polynomial(1, 4, T));
  auto ka = augmentation_module(a, T), kb = augmentation_module(b, T);
  CHECK(tor(a, ka, ka, 3, T).table() == tor(b, kb, kb, 3, T).table());
}
