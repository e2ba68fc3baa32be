#include <cmath>

#include <catch_amalgamated.hpp>

#include "steem/cobar.hpp"

using namespace steem;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("cosimplicial identities of the geometric cobar") {
  auto dg = path_loop_diagram(circle(3));
  auto c = geometric_cobar(dg, 3);
  CHECK(c.top() == 3);
  CHECK_FALSE(c.identity_violation());
  // B^n = (S^1)^n levelwise
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) CHECK(c.levels[static_cast<std::size_t>(n)].count(l) == static_cast<int>(std::pow(l + 1, n)));
  // a wrong coface is caught
  auto broken = c;
  std::swap(broken.cofaces[1][1], broken.cofaces[1][2]);
  CHECK(broken.identity_violation());
}

TEST_CASE("levelwise cohomology of the cobar on the circle") {
  auto dg = path_loop_diagram(circle(5));
  auto c = geometric_cobar(dg, 4);
  auto r = cobar_row(dg, c, 4);
  CHECK(r.kunneth_iso);
  for (int n = 0; n <= 4; ++n)
    for (int t = 0; t <= 4; ++t) CHECK(r.row.dim(n, t) == binom(n, t));
}

TEST_CASE("geometric cobar matches the algebraic E1 for the circle") {
  auto cmp = compare_cobar_with_bar(path_loop_diagram(circle(5)), 4, 4);
  INFO(cmp.witness);
  CHECK(cmp.kunneth_iso);
  CHECK(cmp.degeneracies_span_units);
  CHECK(cmp.normalized_iso);
  CHECK(cmp.dims_equal);
  CHECK(cmp.d1_equal);
  // only (-s, s) survives: (Hbar S^1)^{(x)s}
  for (int s = 0; s <= 4; ++s)
    for (int t = 0; t <= 4; ++t) CHECK(cmp.geometric.dim(s, t) == (t == s ? 1 : 0));
}

TEST_CASE("geometric cobar matches the algebraic E1 for the torus") {
  auto t2 = product(circle(4), circle(4));
  auto cmp = compare_cobar_with_bar(path_loop_diagram(t2), 3, 3);
  INFO(cmp.witness);
  CHECK(cmp.pass());
  // nontrivial d1 out of column -2: the product of the two degree-1 classes
  CHECK_FALSE(cmp.geometric.d(2, 2).is_zero());
}

TEST_CASE("non-basepoint diagrams") {
  // X = Y = S^1 with f the identity, Z = pt: H*X is free over H*Y
  auto c = circle(4);
  CobarDiagram dg{c, c, point(4), identity_map(c), constant_map(point(4), c)};
  auto cmp = compare_cobar_with_bar(dg, 3, 3);
  INFO(cmp.witness);
  CHECK(cmp.pass());
  auto tr = homology(cmp.geometric);
  CHECK(tr.dim(0, 0) == 1);
  for (int s = 0; s <= 2; ++s)
    for (int t = 0; t <= 3; ++t)
      if (s || t) CHECK(tr.dim(s, t) == 0);
}

TEST_CASE("coaugmentation from the fiber product") {
  auto c = circle(4);
  CobarDiagram dg{c, c, c, identity_map(c), identity_map(c)};
  auto co = coaugmentation(dg);
  // X x_Y Z = diagonal copy of S^1
  for (int l = 0; l <= 4; ++l) CHECK(co.fiber_product.count(l) == c.count(l));
  auto b = geometric_cobar(dg, 1);
  CHECK_FALSE(simplicial_map_violation(co.into_b0, co.fiber_product, b.levels[0]));
  // d^0 and d^1 agree after the coaugmentation
  CHECK(compose(co.into_b0, b.cofaces[0][0]).at == compose(co.into_b0, b.cofaces[0][1]).at);
  // but not on all of B^0
  CHECK_FALSE(b.cofaces[0][0].at == b.cofaces[0][1].at);
}

TEST_CASE("geometric cobar rejects non-simplicial data") {
  auto c = circle(3);
  CobarDiagram dg{product(c, c), c, point(3), projection(c, c, 0), constant_map(point(3), c)};
  CHECK_NOTHROW(geometric_cobar(dg, 1));
  dg.f.at[1][0] = 1 - dg.f.at[1][0];
  CHECK_THROWS_AS(geometric_cobar(dg, 1), InvalidArgument);
  CHECK_THROWS_AS(compare_cobar_with_bar(path_loop_diagram(circle(3)), 2, 3), OutOfBound);
}
