#include <catch_amalgamated.hpp>

#include "steem/exactness.hpp"

using namespace steem;

TEST_CASE("identity sequence passes") {
  auto rep = check_exactness_A1_all(identity_sequence(f1_module(16)));
  CHECK(rep.pass());
  CHECK_FALSE(rep.checks.empty());
}

TEST_CASE("split sequence with a nilpotent sub") {
  auto e = split_sequence(trivial_module(2, 16), f1_module(16));
  auto fa = nilpotent_filtration(e.a), fb = nilpotent_filtration(e.b), fc = nilpotent_filtration(e.c);
  CHECK(nilpotency_level(fa, e.a) == 2);
  auto rep = check_exactness_A1(e, 0, fa, fb, fc);
  CHECK(rep.pass());
  CHECK(fb.R(0) == fc.R(0));
  CHECK(check_exactness_A1_all(e).pass());
}

TEST_CASE("non-exact input is rejected") {
  auto e = split_sequence(trivial_module(2, 16), f1_module(16));
  e.g = ModuleMap::zero(e.b, e.c);
  CHECK_THROWS_AS(check_exactness_A1(e, 0), NotExact);
  auto e2 = split_sequence(f1_module(8), f1_module(8));
  e2.f.mats[2] = F2Matrix(1, 2);  // breaks both the Sq-compatibility and injectivity
  CHECK_THROWS_AS(check_exactness_A1(e2, 0), NotExact);
}

TEST_CASE("truncation sequences") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(check_exactness_A1_all(truncation_sequence(h_module(16), k)).pass());
    CHECK(check_exactness_A1_all(truncation_sequence(free_module(2, 16), k)).pass());
  }
}

TEST_CASE("seeded corpus has no violations") {
  auto corpus = seeded_corpus(0, 100, 16);
  REQUIRE(corpus.size() == 100);
  for (const auto& e : corpus) {
    INFO(e.label);
    auto rep = check_exactness_A1_all(e);
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
  // determinism
  auto again = seeded_corpus(0, 100, 16);
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(again[i].b == corpus[i].b);
}
