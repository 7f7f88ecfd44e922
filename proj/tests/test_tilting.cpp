#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "schurlat/tilting.hpp"
#include "test_util.hpp"

using namespace schurlat;
using testutil::error_of;

namespace {

struct Fixture {
  HPresentation pres;
  RigidAtlas atlas;
  std::vector<SupportTiltingPair> pairs;
  ExchangeGraph graph;

  explicit Fixture(CartanData const& d)
      : pres(presentation(d)), atlas(rigid_atlas(pres, 0, 32)), pairs(support_tilting_pairs(pres, atlas)),
        graph(exchange_graph(pairs, d.rank())) {}
};

// Brute force over all subsets of atlas keys and all projective sets, with
// compatibility decided by the resolution complex.
std::set<SupportTiltingPair> brute_force_pairs(HPresentation const& pres, RigidAtlas const& atlas) {
  std::vector<RootVector> keys;
  std::vector<GenModule const*> mods;
  for (auto const& [k, m] : atlas.entries) {
    keys.push_back(k);
    mods.push_back(&m);
  }
  std::size_t const n = pres.vertices();
  std::vector<std::vector<bool>> ok(keys.size(), std::vector<bool>(keys.size()));
  for (std::size_t a = 0; a < keys.size(); ++a)
    for (std::size_t b = 0; b < keys.size(); ++b) ok[a][b] = ext1_resolution(pres, *mods[a], *mods[b]) == 0;
  std::set<SupportTiltingPair> out;
  auto const compatible_sets = oracle::subsets_where(keys.size(), [&](std::vector<std::size_t> const& s) {
    for (auto a : s)
      for (auto b : s)
        if (!ok[a][b]) return false;
    return s.size() <= n;
  });
  for (auto const& t : compatible_sets)
    for (std::size_t pmask = 0; pmask < (std::size_t{1} << n); ++pmask) {
      std::vector<std::size_t> p;
      for (std::size_t i = 0; i < n; ++i)
        if (pmask >> i & 1) p.push_back(i);
      if (t.size() + p.size() != n) continue;
      bool hom_free = true;
      for (auto k : t)
        for (auto i : p) hom_free = hom_free && keys[k][i] == 0;
      if (!hom_free) continue;
      SupportTiltingPair pair;
      for (auto k : t) pair.tilting.push_back(keys[k]);
      pair.projective = p;
      out.insert(pair);
    }
  return out;
}

}  // namespace

TEST_SUITE("tilting") {
  TEST_CASE("atlases") {
    CHECK(Fixture(named_datum("B3")).atlas.entries.size() == 9);
    CHECK(Fixture(named_datum("A2")).atlas.entries.size() == 3);
    CartanData const a1 = validate({{2}}, {3}, {});
    HPresentation const pres = presentation(a1);
    RigidAtlas const atlas = rigid_atlas(pres, 0, 32);
    REQUIRE(atlas.entries.size() == 1);
    CHECK(hom(pres, atlas.entries.begin()->second, atlas.entries.begin()->second).dim == 3);
    CHECK(error_of([] { rigid_atlas(presentation(named_datum("C2~")), 0, 32); }) == ErrorCode::InfiniteType);
  }

  TEST_CASE("compatibility") {
    Fixture const b3(named_datum("B3"));
    for (auto const& [k, m] : b3.atlas.entries) CHECK(compatible(b3.pres, b3.atlas, k, k));
    std::vector<RootVector> proj_keys;
    for (std::size_t i = 0; i < 3; ++i) proj_keys.push_back(*is_locally_free(b3.pres, projective(b3.pres, i)));
    for (auto const& a : proj_keys)
      for (auto const& b : proj_keys) CHECK(compatible(b3.pres, b3.atlas, a, b));
    RootVector const a{1, 0, 0}, c{0, 0, 1};
    GenModule const& ma = b3.atlas.entries.at(a);
    GenModule const& mc = b3.atlas.entries.at(c);
    bool const oracle = ext1_resolution(b3.pres, ma, mc) == 0 && ext1_resolution(b3.pres, mc, ma) == 0;
    CHECK(compatible(b3.pres, b3.atlas, a, c) == oracle);
    CHECK(error_of([&] { compatible(b3.pres, b3.atlas, a, RootVector{2, 0, 0}); }) == ErrorCode::KeyMissing);
  }

  TEST_CASE("support tilting pairs against brute force") {
    for (auto const& name : {"A1", "A2", "B2", "B3", "G2"}) {
      CAPTURE(name);
      Fixture const fx(named_datum(name));
      auto const expected = brute_force_pairs(fx.pres, fx.atlas);
      CHECK(std::set<SupportTiltingPair>(fx.pairs.begin(), fx.pairs.end()) == expected);
      for (auto const& p : fx.pairs) {
        CHECK(p.tilting.size() + p.projective.size() == fx.pres.vertices());
        if (p.projective.empty()) CHECK(p.tilting.size() == fx.pres.vertices());
      }
    }
    CHECK(Fixture(named_datum("B3")).pairs.size() == 20);
    CHECK(Fixture(named_datum("A2")).pairs.size() == 5);
    CHECK(Fixture(validate({{2}}, {4}, {})).pairs.size() == 2);
  }

  TEST_CASE("exchange graphs") {
    Fixture const b3(named_datum("B3"));
    GraphReport const r = check_graph(b3.graph, 3);
    CHECK(r.regular);
    CHECK(r.degree == 3);
    CHECK(r.connected);
    // Neighbours differ in exactly one summand.
    for (auto [a, b] : b3.graph.edges) {
      auto const& x = b3.graph.vertices[a];
      auto const& y = b3.graph.vertices[b];
      std::size_t shared = 0;
      for (auto const& t : x.tilting) shared += std::count(y.tilting.begin(), y.tilting.end(), t);
      for (auto i : x.projective) shared += std::count(y.projective.begin(), y.projective.end(), i);
      CHECK(shared == 2);
    }

    Fixture const a2(named_datum("A2"));
    CHECK(a2.graph.vertices.size() == 5);
    CHECK(a2.graph.edges.size() == 5);
    GraphReport const ra = check_graph(a2.graph, 2);
    CHECK(ra.regular);
    CHECK(ra.connected);

    Fixture const a1(named_datum("A1"));
    CHECK(a1.graph.edges.size() == 1);
    CHECK(check_graph(a1.graph, 1).regular);
  }

  TEST_CASE("check_graph detects irregular and disconnected graphs") {
    ExchangeGraph g;
    g.vertices.resize(4);
    g.edges = {{0, 1}, {2, 3}};
    GraphReport const r = check_graph(g, 1);
    CHECK(r.regular);
    CHECK_FALSE(r.connected);
    g.edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK_FALSE(check_graph(g, 1).regular);
    CHECK(check_graph(g, 1).connected);
  }

  TEST_CASE("doubling the symmetrizer gives the same graph") {
    for (auto const& name : {"A2", "B2", "B3"}) {
      CAPTURE(name);
      Fixture const a(named_datum(name));
      Fixture const b(scale_symmetrizer(named_datum(name), 2));
      CHECK(a.graph.vertices == b.graph.vertices);
      CHECK(a.graph.edges == b.graph.edges);
    }
  }

  TEST_CASE("labels and DOT") {
    SupportTiltingPair p;
    p.tilting = {RootVector{1, 0, 0}, RootVector{1, 1, 0}};
    p.projective = {2};
    CHECK(pair_label(p) == "T:{(1,0,0)|(1,1,0)};P:{3}");
    std::string const dot = to_dot(Fixture(named_datum("A2")).graph);
    CHECK(dot.rfind("graph exchange {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 5 + 5 + 1);
  }

  TEST_CASE("parallel pair search gives identical output") {
    HPresentation const pres = presentation(named_datum("B3"));
    RigidAtlas const atlas = rigid_atlas(pres, 0, 32);
    CHECK(support_tilting_pairs(pres, atlas, 1) == support_tilting_pairs(pres, atlas, 4));
  }
}
