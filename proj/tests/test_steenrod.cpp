#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "steem/steenrod.hpp"

using namespace steem;

namespace {

// Oracle: the action of words on F2[x_1..x_m], |x_i| = 1, computed from the
// Cartan formula alone. On x_1...x_m the action is faithful through degree m.
using Poly = std::set<std::vector<int>>;

bool lucas(int n, int k) { return k >= 0 && k <= n && (k & ~n) == 0; }

Poly sq_poly(int k, const Poly& p) {
  Poly out;
  for (const auto& mono : p) {
    const std::size_t m = mono.size();
    std::vector<int> ks(m, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos == m) {
        if (left) return;
        std::vector<int> e = mono;
        for (std::size_t i = 0; i < m; ++i) {
          if (!lucas(mono[i], ks[i])) return;
          e[i] += ks[i];
        }
        if (!out.erase(e)) out.insert(e);
        return;
      }
      for (int j = 0; j <= std::min(left, mono[pos]); ++j) {
        ks[pos] = j;
        self(self, pos + 1, left - j);
      }
    };
    rec(rec, 0, k);
  }
  return out;
}

Poly act(const SqWord& w, Poly p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = sq_poly(*it, p);
  return p;
}

Poly act(const SteenrodElement& e, const Poly& p) {
  Poly out;
  for (const auto& m : e.terms())
    for (const auto& t : act(m, p))
      if (!out.erase(t)) out.insert(t);
  return out;
}

Poly generic(int m) { return {std::vector<int>(static_cast<std::size_t>(m), 1)}; }

// Number of partitions of d into parts 2^i - 1: the admissible count.
int partition_count(int d) {
  std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= d; part = 2 * part + 1)
    for (int s = part; s <= d; ++s) c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - part)];
  return c[static_cast<std::size_t>(d)];
}

std::vector<SqWord> all_words(int d) {
  std::vector<SqWord> out;
  if (d == 0) return {SqWord{}};
  for (int first = 1; first <= d; ++first)
    for (auto rest : all_words(d - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

}  // namespace

TEST_CASE("binomials mod 2") {
  CHECK(binom_mod2(5, 1));
  CHECK_FALSE(binom_mod2(4, 1));
  CHECK(binom_mod2(7, 3));
  CHECK_FALSE(binom_mod2(2, 3));
  CHECK_FALSE(binom_mod2(-1, 0));
}

TEST_CASE("known Adem relations") {
  CHECK(adem_reduce({1, 1}).str() == "0");
  CHECK(adem_reduce({1, 2}).str() == "Sq3");
  CHECK(adem_reduce({2, 2}).str() == "Sq3 Sq1");
  CHECK(adem_reduce({2, 3}).str() == "Sq4 Sq1 + Sq5");
  CHECK(adem_reduce({3, 3}).str() == "Sq5 Sq1");
  CHECK(adem_reduce({4, 4}).str() == "Sq6 Sq2 + Sq7 Sq1");
  CHECK(adem_reduce({}).str() == "1");
  CHECK(adem_reduce({4, 2, 1}).str() == "Sq4 Sq2 Sq1");
  CHECK_THROWS_AS(adem_reduce({0, 1}), InvalidArgument);
}

TEST_CASE("reductions agree with the polynomial action") {
  for (int d = 1; d <= 9; ++d)
    for (const auto& w : all_words(d)) {
      auto r = adem_reduce(w);
      for (const auto& m : r.terms()) CHECK(is_admissible(m));
      CHECK(act(r, generic(d)) == act(w, generic(d)));
    }
}

TEST_CASE("rewrite order does not matter") {
  for (int d = 1; d <= 14; ++d)
    for (const auto& w : all_words(d))
      if (w.size() <= 4)
        CHECK(adem_reduce(w, RewriteOrder::LeftmostFirst) == adem_reduce(w, RewriteOrder::RightmostFirst));
}

TEST_CASE("admissible monomials are counted by partitions and independent") {
  for (int d = 0; d <= 14; ++d) {
    auto ms = admissible_monomials(d);
    CHECK(static_cast<int>(ms.size()) == partition_count(d));
    if (d <= 10) {
      // Independence via the faithful action on x_1 ... x_d.
      std::set<Poly> images;
      std::vector<Poly> imgs;
      for (const auto& m : ms) imgs.push_back(act(m, generic(std::max(d, 1))));
      const std::size_t n = ms.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Poly sum;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U)
            for (const auto& t : imgs[i])
              if (!sum.erase(t)) sum.insert(t);
        CHECK_FALSE(sum.empty());
      }
    }
  }
}

TEST_CASE("multiplication is associative") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) {
        auto x = sq(a), y = adem_reduce({b, 1}), z = sq(c);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      }
}

TEST_CASE("subalgebra bases") {
  // SubalgebraSpec(n) uses the generators Sq^1, ..., Sq^{2^{n-1}}.
  std::vector<int> dims;
  for (int d = 0; d <= 3; ++d) dims.push_back(static_cast<int>(an_basis(SubalgebraSpec(1), d).size()));
  CHECK(dims == std::vector<int>{1, 1, 0, 0});
  // <Sq1, Sq2> has total dimension 8, Poincare series 1+t+t^2+2t^3+t^4+t^5+t^6.
  dims.clear();
  for (int d = 0; d <= 7; ++d) dims.push_back(static_cast<int>(an_basis(SubalgebraSpec(2), d).size()));
  CHECK(dims == std::vector<int>{1, 1, 1, 2, 1, 1, 1, 0});
  CHECK_THROWS_AS(SubalgebraSpec(0), InvalidArgument);
}

TEST_CASE("decomposition witnesses") {
  for (int n = 1; n <= 3; ++n) {
    auto w = decompose_sq2n_sq2n(n, 64);
    REQUIRE(w.has_value());
    CHECK(verify_witness(*w));
    if (n > 2) continue;  // the oracle below is too slow in degree 16
    // independent check with the polynomial oracle
    const int p = 1 << n;
    Poly lhs = act(SqWord{p, p}, generic(2 * p)), rhs;
    for (const auto& t : w->terms)
      for (const auto& mono : act(t.left, act(SqWord{p}, act(t.right, generic(2 * p)))))
        if (!rhs.erase(mono)) rhs.insert(mono);
    CHECK(lhs == rhs);
  }
  CHECK_FALSE(decompose_sq2n_sq2n(3, 8).has_value());
  CHECK_THROWS_AS(decompose_sq2n_sq2n(0, 64), InvalidArgument);
}

TEST_CASE("parsing") {
  CHECK(parse_word("Sq2 Sq2") == SqWord{2, 2});
  CHECK(parse_word("1").empty());
  CHECK(parse_element("Sq3 Sq1 + Sq2 Sq2").str() == "0");
  CHECK_THROWS_AS(parse_word("Sq"), ParseError);
  CHECK_THROWS_AS(parse_word("Sq2 foo"), ParseError);
}
