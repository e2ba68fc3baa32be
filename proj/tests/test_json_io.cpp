#include <catch_amalgamated.hpp>

#include "steem/catalog.hpp"
#include "steem/json_io.hpp"

using namespace steem;

TEST_CASE("module JSON round-trip") {
  for (const auto& name : catalog_module_names()) {
    INFO(name);
    auto m = parse_module(name, 10);
    auto j = to_json(m);
    CHECK(j["dims"].size() == 11);
    auto back = module_from_json(Json::parse(j.dump()));
    CHECK(back == m);
    CHECK(to_json(back) == j);
  }
  // unknown entries survive as null
  auto l = loop_module(2, 8);
  auto j = to_json(l);
  CHECK(module_from_json(j) == l);
  bool any_null = false;
  for (const auto& [k, per] : j["sq"].items())
    for (const auto& e : per) any_null = any_null || e.is_null();
  CHECK(any_null);
}

TEST_CASE("module JSON schema") {
  auto j = to_json(parse_module("F(1)@4", 0));
  // F(1): one class in each degree 2^i; Sq^1 u = u^2
  CHECK(j["bound"] == 4);
  CHECK(j["dims"] == Json::array({0, 1, 1, 0, 1}));
  CHECK(j["sq"]["1"][1] == Json::array({"1"}));
  CHECK(j["sq"]["2"][2] == Json::array({"1"}));
  // on H, Sq^1 u^2 = u^3 would break Sq^1 Sq^1 = 0
  auto h = to_json(parse_module("H@4", 0));
  CHECK(module_from_json(h) == h_module(4));
  h["sq"]["1"][2] = Json::array({"1"});
  CHECK_THROWS_AS(module_from_json(h), InvariantViolation);
  CHECK_THROWS_AS(module_from_json(Json{{"bound", 2}, {"dims", {1}}, {"sq", Json::object()}}), ParseError);
  auto bad = to_json(parse_module("F(1)@4", 0));
  bad["sq"]["1"][1] = Json::array({"12"});
  CHECK_THROWS_AS(module_from_json(bad), ParseError);
}

TEST_CASE("algebra JSON round-trip") {
  for (const char* name : {"F2", "Lambda(3)", "Poly(2)", "Trunc(2,3)", "SqZero(1,2)", "tensor(Lambda(1),Poly(2))",
                           "H(T2)"}) {
    INFO(name);
    auto a = parse_algebra(name, 8);
    auto j = to_json(a);
    auto back = algebra_from_json(Json::parse(j.dump()));
    CHECK(back == a);
    CHECK(to_json(back) == j);
  }
  // Poly(2) through 4: u*u = u^2
  auto j = to_json(parse_algebra("Poly(2)@4", 0));
  CHECK(j["mul"] == Json::parse("[[[2,0],[2,0],[4,0]]]"));
  auto bad = j;
  bad["mul"].push_back(Json::parse("[[2,0],[2,0],[3,0]]"));
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
}

TEST_CASE("Tor and report JSON") {
  auto r = tor(exterior(2, 8), augmentation_module(exterior(2, 8), 8), augmentation_module(exterior(2, 8), 8), 3, 8);
  auto j = tor_json(r);
  auto table = table_from_json(Json::parse(j.dump()));
  REQUIRE(table.size() == static_cast<std::size_t>(r.homology.s_max) + 1);
  for (int s = 0; s <= r.homology.s_max; ++s)
    for (int t = 0; t <= 8; ++t) CHECK(table[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] == r.dim(s, t));
  CHECK(j["(2,4)"] == 1);
  CHECK_THROWS_AS(table_from_json(Json{{"2,4", 1}}), ParseError);

  Report rep;
  rep.add("first", true);
  rep.add("second", false, "witness text");
  CHECK(report_from_json(to_json(rep)).checks.size() == 2);
  CHECK(to_json(report_from_json(to_json(rep))) == to_json(rep));
}

TEST_CASE("EM report JSON") {
  auto p = e2_page(e1_page(sphere_input(3, 12), 3, 12));
  auto c = detect_collapse(p);
  auto j = em_report_json(p, c, corner_maps(p, c), Report{});
  CHECK(j["page"] == "E2");
  CHECK(j["collapse"] == true);
  CHECK(j["dims"]["(1,3)"] == 1);
  CHECK(j["dims"]["(1,4)"] == 0);
  CHECK(j["corner"]["edge"]["3"] == Json::array({"1"}));
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("simplicial JSON round-trip") {
  for (const char* name : {"pt", "S1", "S2", "Delta(2)", "prod(S1,S1)", "smash(S1,S1)", "Sigma(S1)", "T2"}) {
    INFO(name);
    auto x = parse_space(name, 4);
    auto j = to_json(x);
    auto back = simplicial_from_json(Json::parse(j.dump()));
    CHECK(back.faces() == x.faces());
    CHECK(back.degens() == x.degens());
    CHECK(back.basepoint() == x.basepoint());
    CHECK(to_json(back) == j);
  }
  auto j = to_json(parse_space("S1", 3));
  CHECK(j["dims"] == Json::array({1, 2, 3, 4}));
  j["faces"]["2"][0][1] = 1 - j["faces"]["2"][0][1].get<int>();
  CHECK_THROWS_AS(simplicial_from_json(j), SimplicialIdentityViolation);
}

TEST_CASE("catalog names") {
  CHECK(parse_module("F(2)@12", 0) == free_module(2, 12));
  CHECK(parse_module("SigmaF1(3)@16", 0) == suspension(f1_module(13), 3));
  CHECK(parse_module("Sigma(H,2)@10", 0) == suspension(h_module(8), 2));
  CHECK(parse_module("sum(F1, Sigma2F2)@8", 0) == direct_sum(f1_module(8), trivial_module(2, 8)));
  CHECK(parse_module("H", 7).bound() == 7);
  CHECK_THROWS_AS(parse_module("G(2)", 8), ParseError);
  CHECK_THROWS_AS(parse_module("F(2", 8), ParseError);
  CHECK_THROWS_AS(parse_module("F(2)@x", 8), ParseError);
  CHECK_THROWS_AS(parse_module("F(1,2)", 8), ParseError);
  CHECK_THROWS_AS(parse_module("Sigma(H,9)@8", 0), OutOfBound);
  CHECK(parse_algebra("Trunc(2,3)@10", 0) == truncated_polynomial(2, 3, 10));
  CHECK(parse_algebra("H(S2)@6", 0).dims() == std::vector<int>{1, 0, 1, 0, 0, 0, 0});
  CHECK(cohomology(parse_space("smash(S1,S1)", 4), 3).dims() == std::vector<int>{1, 0, 1, 0});
  CHECK(cohomology(parse_space("Delta(3)", 4), 3).dims() == std::vector<int>{1, 0, 0, 0});
  CHECK_THROWS_AS(parse_space("S0", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_space("Q", 3), ParseError);
}
