#include <catch_amalgamated.hpp>

#include "steem/em.hpp"

using namespace steem;

TEST_CASE("E1 for a sphere") {
  auto p = e1_page(sphere_input(2, 12), 5, 12);
  for (int s = 0; s <= 5; ++s)
    for (int t = 0; t <= 12; ++t) CHECK(p.dim(s, t) == (t == 2 * s ? 1 : 0));
  CHECK(p.differential_bidegree() == std::make_pair(1, 0));
  CHECK(p.has_steenrod());
}

TEST_CASE("d1 out of column -1 vanishes and d1 out of column -2 is the product") {
  const int T = 8;
  auto y = tensor_algebras(polynomial(2, T), exterior(3, T));
  auto p = e1_page(path_loop_input(y), 3, T);
  for (int t = 0; t <= T; ++t) CHECK(p.e1.d(1, t).is_zero());
  // E1^{-2,t} has basis pairs (a, b) of positive-degree classes
  for (int t = 0; t <= T; ++t) {
    auto basis = bar_basis(y, p.input.x, p.input.z, 2, t);
    F2Matrix expect(basis.size(), static_cast<std::size_t>(t > 0 ? y.dim(t) : 0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& tup = basis.tuple(i);
      expect.row(i) = y.basis_product(tup[2], tup[3], tup[4], tup[5]);
    }
    CHECK(p.e1.d(2, t) == expect);
  }
}

TEST_CASE("E2 of spheres is divided powers and collapses") {
  for (int n = 1; n <= 3; ++n) {
    const int T = 16;
    auto p = e2_page(e1_page(sphere_input(n + 1, T), 6, T));
    CHECK(p.cross_checked.first >= 0);
    for (int s = 0; s <= 6; ++s)
      for (int t = 0; t <= T; ++t) CHECK(p.dim(s, t) == (t == s * (n + 1) ? 1 : 0));
    auto c = detect_collapse(p);
    CHECK(c.collapses);
    CHECK_FALSE(c.examined.empty());
  }
}

TEST_CASE("E2 with zero products equals E1") {
  const int T = 7;
  auto p1 = e1_page(path_loop_input(square_zero({2, 3}, T)), 3, T);
  auto p2 = e2_page(p1);
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= T; ++t) CHECK(p2.dim(s, t) == p1.dim(s, t));
}

TEST_CASE("E2^{0,*} is the tensor product over H*Y") {
  const int T = 8;
  auto y = polynomial(2, T);
  auto x = regular_module(y, T);
  auto z = augmentation_module(y, T);
  EMInput in{y, x, z, std::nullopt};
  auto p = e2_page(e1_page(in, 2, T));
  auto direct = tensor_over(y, x, z, T);
  for (int t = 0; t <= T; ++t) CHECK(p.dim(0, t) == direct[static_cast<std::size_t>(t)]);
}

TEST_CASE("collapse detection") {
  EMPage empty = e2_page(e1_page(path_loop_input(ground_algebra(6)), 3, 6));
  CHECK(detect_collapse(empty).collapses);
  // Hbar*Y square-zero on two generators in degrees 1 and 2: E2 is full
  // enough for some d_2 to have nonzero source and target
  auto p = e2_page(e1_page(path_loop_input(square_zero({1, 2}, 6)), 3, 6));
  auto c = detect_collapse(p);
  CHECK_FALSE(c.collapses);
  CHECK_FALSE(c.witness.empty());
  CHECK_THROWS_AS(corner_maps(p, c), NoCollapse);
}

TEST_CASE("Steenrod action commutes with d1 and descends to E2") {
  const int T = 12;
  auto p = e2_page(e1_page(sphere_input(3, T), 3, T));
  REQUIRE(p.has_steenrod());
  // (Sigma^3 F2)^{(x)s} has trivial action: every E2 operation is zero
  for (int s = 0; s <= 3; ++s)
    for (int t = 0; t <= T; ++t)
      for (const auto& m : p.e2_sq[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)])
        if (m) CHECK(m->is_zero());
  // a nontrivial action: Y = CP^infinity-like F2[u], |u| = 2, Sq^2 u^j = j u^{j+1}
  auto y = polynomial(2, T);
  std::vector<int> dims(T + 1, 0);
  for (int d = 0; d <= T; d += 2) dims[static_cast<std::size_t>(d)] = 1;
  BoundedUnstableModule sy(T, dims, [&](int k, int d) -> std::optional<F2Matrix> {
    F2Matrix m(1, 1);
    const int j = d / 2;
    if (k % 2 == 0 && binom_mod2(j, k / 2)) m.set(0, 0);
    return m;
  });
  CHECK_FALSE(cartan_violation(y, sy));
  auto q = e2_page(e1_page(path_loop_input(y, sy), 3, T));
  // E2 = Lambda(sigma u) in bidegree (-1, 2): Sq^2 on it lands in (-1, 4) = 0
  CHECK(q.dim(1, 2) == 1);
  CHECK(q.dim(1, 4) == 0);
}

TEST_CASE("invalid Steenrod data is rejected") {
  const int T = 6;
  auto y = polynomial(1, T);
  // the trivial action on F2[u] violates Cartan (and instability fixes Sq^1 u)
  auto h = h_module(T);
  BoundedUnstableModule bad(T, h.dims(), [&](int k, int d) -> std::optional<F2Matrix> {
    if (k == 2 && d == 2) return F2Matrix(1, 1);
    return h.sq(k, d);
  });
  CHECK_THROWS_AS(path_loop_input(y, bad), InvariantViolation);
  CHECK_NOTHROW(path_loop_input(y, h));
}

TEST_CASE("corner maps") {
  for (int n = 1; n <= 3; ++n) {
    const int T = 12;
    auto p = e2_page(e1_page(sphere_input(n + 1, T), 3, T));
    auto m = corner_maps(p, detect_collapse(p));
    CHECK(m.unit.get(0, 0));
    // x_{n+1} goes to the unique class in (-1, n+1), the degree-n loop class
    CHECK(m.edge[static_cast<std::size_t>(n + 1)].get(0, 0));
    CHECK(m.loop_degree(n + 1) == n);
    for (int t = 0; t <= T; ++t) CHECK(p.dim(1, t) <= p.input.y.dim(t));
  }
  // square-zero Hbar*Y: edge is an isomorphism onto E2^{-1}
  auto sq = e2_page(e1_page(path_loop_input(square_zero({3}, 9)), 3, 9));
  auto c = detect_collapse(sq);
  REQUIRE(c.collapses);
  auto m = corner_maps(sq, c);
  for (int t = 1; t <= 9; ++t) CHECK(rank(m.edge[static_cast<std::size_t>(t)]) == static_cast<std::size_t>(sq.input.y.dim(t)));
}

TEST_CASE("corner maps are natural") {
  // the quotient F2[u]/u^3 -> F2[u]/u^2, |u| = 2
  const int T = 10;
  auto a = truncated_polynomial(2, 3, T);
  auto b = truncated_polynomial(2, 2, T);
  AlgebraMap f;
  for (int d = 0; d <= T; ++d) {
    F2Matrix m(static_cast<std::size_t>(a.dim(d)), static_cast<std::size_t>(b.dim(d)));
    if (a.dim(d) && b.dim(d)) m.set(0, 0);
    f.mats.push_back(m);
  }
  auto pa = e2_page(e1_page(path_loop_input(a), 3, T));
  auto pb = e2_page(e1_page(path_loop_input(b), 3, T));
  auto ca = detect_collapse(pa), cb = detect_collapse(pb);
  auto ea = corner_maps(pa, ca), eb = corner_maps(pb, cb);
  auto fe2 = induced_e2_map(f, pa, pb, 1);
  for (int t = 1; t <= T; ++t) {
    INFO("t=" << t);
    CHECK(ea.edge[static_cast<std::size_t>(t)].then(fe2[static_cast<std::size_t>(t)]) ==
          f.at(t).then(eb.edge[static_cast<std::size_t>(t)]));
  }
}

TEST_CASE("loop modules of spheres") {
  for (int n = 1; n <= 3; ++n) {
    const int D = 20;
    auto L = loop_module(n, D);
    CHECK(L.dim(0) == 0);
    for (int k = 1; k <= D; ++k) CHECK(L.dim(k) == (k % n == 0 ? 1 : 0));
    auto y = L.basis_element(n, 0);
    CHECK(nilpotency_degree(y, L) == NilpotencyVerdict::exactly(n));
    // Sq_0 is the cup square, forced zero
    for (int k = 1; 2 * k <= D; ++k)
      if (L.dim(k)) CHECK(L.sq_entry(k, k).has_value());
  }
  CHECK_THROWS_AS(loop_module(0, 10), InvalidArgument);
}

TEST_CASE("total degrees need a large enough window") {
  auto p = e2_page(e1_page(sphere_input(2, 12), 4, 12));
  CHECK(p.complete_through() == 4);
  CHECK_THROWS_AS(p.total_dims(5), OutOfBound);
  auto dims = p.total_dims(4);
  CHECK(dims == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(p.filtration_dim(0, 3) == 0);
  CHECK(p.filtration_dim(3, 3) == 1);
}

TEST_CASE("multiplicativity at E2") {
  const int T = 10, S = 3;
  auto a = exterior(2, T);
  auto b = exterior(3, T);
  auto pa = e2_page(e1_page(path_loop_input(a), S, T));
  auto pb = e2_page(e1_page(path_loop_input(b), S, T));
  auto pab = e2_page(e1_page(path_loop_input(tensor_algebras(a, b)), S, T));
  for (int s = 0; s <= S; ++s)
    for (int t = 0; t <= T; ++t) {
      int expect = 0;
      for (int s1 = 0; s1 <= s; ++s1)
        for (int t1 = 0; t1 <= t; ++t1) expect += pa.dim(s1, t1) * pb.dim(s - s1, t - t1);
      CHECK(pab.dim(s, t) == expect);
    }
}

TEST_CASE("loop-space nilpotency checks") {
  for (int n = 1; n <= 3; ++n) {
    auto r = verify_loop_nilpotency(sphere_a2_instance(n, 12));
    INFO("n=" << n);
    for (const auto& c : r.checks) INFO(c.name << ": " << c.witness);
    CHECK(r.pass());
  }
  auto pt = verify_loop_nilpotency(point_a2_instance(10));
  CHECK(pt.pass());
  A2Instance missing = sphere_a2_instance(2, 8);
  missing.loop.reset();
  CHECK_THROWS_AS(verify_loop_nilpotency(missing), InstanceUnavailable);
}
