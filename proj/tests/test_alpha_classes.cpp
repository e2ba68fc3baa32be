#include <catch_amalgamated.hpp>

#include "steem/alpha_classes.hpp"

using namespace steem;

TEST_CASE("d = 0 gives the powers u^{2^i}") {
  auto r = alpha_classes(0, 3, 16);
  CHECK(r.report.pass());
  for (const auto& c : r.classes) {
    CHECK(c.element.degree == (1 << c.i));
    CHECK(c.certified == NilpotencyVerdict::exactly(0));
  }
}

TEST_CASE("d = 2 at bound 16") {
  auto r = alpha_classes(2, 3, 16);
  CHECK(r.report.pass());
  REQUIRE(r.classes.size() == 4);
  for (const auto& c : r.classes) {
    CHECK(c.element.degree == (1 << c.i) + 2);
    CHECK(c.certified == NilpotencyVerdict::exactly(2));
  }
  // alpha_{3,2} has degree 10: its Sq_0 step leaves the bound, so the bounded
  // verdict must not claim exactness.
  CHECK(r.classes[3].bounded.kind == NilpotencyVerdict::Kind::AtLeast);
  CHECK(r.classes[2].bounded == NilpotencyVerdict::exactly(2));
}

TEST_CASE("classes for d <= 3, i <= 4 at bound 32") {
  for (int d = 0; d <= 3; ++d) {
    auto r = alpha_classes(d, 4, 32);
    for (const auto& c : r.report.checks) {
      INFO(c.name << " " << c.witness);
      CHECK(c.pass);
    }
    for (const auto& c : r.classes) CHECK(c.certified == NilpotencyVerdict::exactly(d));
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(alpha_classes(2, 4, 16), OutOfBound);
  CHECK_THROWS_AS(alpha_classes(-1, 2, 16), InvalidArgument);
}

TEST_CASE("eta is an isomorphism") {
  for (int d = 0; d <= 4; ++d) CHECK(check_eta(d, 20).pass);
}
