#include <doctest.h>

#include <random>

#include "schurlat/io.hpp"
#include "test_util.hpp"

using namespace schurlat;
using testutil::error_of;

TEST_SUITE("io") {
  TEST_CASE("Cartan data round trip") {
    for (auto const& name : testutil::battery()) {
      CAPTURE(name);
      CartanData const d = named_datum(name);
      Json const j = to_json(d);
      CartanData const back = cartan_from_json(parse_json(j.dump()));
      CHECK(to_json(back) == j);
      CHECK(back.orientation() == d.orientation());
    }
    Json const b3 = to_json(named_datum("B3"));
    CHECK(b3["D"] == Json({2, 2, 1}));
    CHECK(b3["Omega"] == Json::parse("[[1,2],[2,3]]"));
  }

  TEST_CASE("Cartan data errors") {
    CHECK(error_of([] { parse_json("{\"C\": [[2,"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { cartan_from_json(Json::parse(R"({"C": [[2]], "D": [1]})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { cartan_from_json(Json::parse(R"({"C": "x", "D": [1], "Omega": []})")); }) ==
          ErrorCode::ParseError);
    CHECK(error_of([] { cartan_from_json(Json::parse(R"({"C": [[2,-1],[2]], "D": [1,1], "Omega": [[1,2]]})")); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(error_of([] { cartan_from_json(Json::parse(R"({"C": [[2,-1],[-1,2]], "D": [1,1], "Omega": [[0,2]]})")); }) ==
          ErrorCode::BadOrientation);
    // Symmetrizer does not symmetrize C.
    auto const bad = error_of(
        [] { cartan_from_json(Json::parse(R"({"C": [[2,-1],[-2,2]], "D": [1,1], "Omega": [[1,2]]})")); });
    REQUIRE(bad.has_value());
    CHECK(*bad != ErrorCode::ParseError);
  }

  TEST_CASE("rank vectors") {
    CHECK(root_from_json(Json::parse("[1,2,-3]")) == RootVector(std::vector<Int>{1, 2, -3}));
    CHECK(error_of([] { root_from_json(Json::parse("[1,\"a\"]")); }) == ErrorCode::ParseError);
    RootSet const s{3, {RootVector(std::vector<Int>{1, 0}), RootVector(std::vector<Int>{1, 1})}};
    CHECK(to_json(s) == Json::parse(R"({"bound":3,"roots":[[1,0],[1,1]]})"));
  }

  TEST_CASE("module round trip") {
    std::mt19937_64 rng(11);
    for (auto const& name : testutil::battery()) {
      CAPTURE(name);
      HPresentation const pres = presentation(named_datum(name));
      for (int t = 0; t < 5; ++t) {
        RootVector const r = testutil::random_vector(rng, pres.vertices(), 0, 2);
        GenModule const m = random_locally_free(pres, r, rng);
        Json const j = to_json(pres, m);
        GenModule const back = module_from_json(pres, parse_json(j.dump()));
        CHECK(back == m);
        for (std::size_t i = 0; i < pres.vertices(); ++i)
          CHECK(j["eps"].contains(std::to_string(i + 1)) == pres.has_loop(i));
      }
    }
  }

  TEST_CASE("module errors") {
    HPresentation const pres = presentation(named_datum("B2"));
    Json const good = to_json(pres, projective(pres, 0));
    Json j = good;
    j["dims"] = Json({1});
    CHECK(error_of([&] { module_from_json(pres, j); }) == ErrorCode::ShapeMismatch);
    j = good;
    j["p"] = 97;
    CHECK(error_of([&] { module_from_json(pres, j); }) == ErrorCode::ShapeMismatch);
    j = good;
    j["arrows"] = Json::object();
    CHECK(error_of([&] { module_from_json(pres, j); }) == ErrorCode::ShapeMismatch);
    j = good;
    j.erase("arrows");
    CHECK(error_of([&] { module_from_json(pres, j); }) == ErrorCode::ParseError);
    // A nonzero nilpotent loop whose square is nonzero.
    Json s = to_json(pres, generalized_simple(pres, 0));
    std::size_t const d = s["dims"][0].get<std::size_t>();
    REQUIRE(d == 2);
    s["eps"]["1"] = Json::parse("[[1,0],[0,1]]");
    CHECK(error_of([&] { module_from_json(pres, s); }) == ErrorCode::InvalidRep);
  }

  TEST_CASE("graph documents") {
    SupportTiltingPair p;
    p.tilting = {RootVector(std::vector<Int>{1, 1})};
    p.projective = {0};
    Json const j = to_json(p);
    CHECK(j["T"] == Json::parse("[[1,1]]"));
    CHECK(j["P"] == Json::parse("[1]"));
    ExchangeGraph g;
    g.vertices = {p, p};
    g.edges = {{0, 1}};
    CHECK(to_json(g)["edges"] == Json::parse("[[0,1]]"));
    CHECK(to_json(GraphReport{true, 2, false}) == Json::parse(R"({"regular":true,"degree":2,"connected":false})"));
  }
}
