#include <doctest.h>

#include <random>

#include "schurlat/modrep.hpp"
#include "schurlat/schur.hpp"
#include "schurlat/weyl.hpp"
#include "test_util.hpp"

using namespace schurlat;
using testutil::error_of;

namespace {

GenModule simple_s1(HPresentation const& pres) {
  GenModule s = zero_module(pres);
  s.dims[0] = 1;
  s.eps[0] = FpMatrix(1, 1);
  for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
    auto const& ar = pres.arrows()[a];
    s.arrows[a] = FpMatrix(s.dims[ar.target], s.dims[ar.source]);
  }
  return s;
}

}  // namespace

TEST_SUITE("modrep") {
  TEST_CASE("endomorphisms of generalized simples and projectives") {
    for (auto const& name : testutil::battery()) {
      HPresentation const pres = presentation(named_datum(name));
      for (std::size_t i = 0; i < pres.vertices(); ++i) {
        GenModule const e = generalized_simple(pres, i);
        CHECK(static_cast<Int>(hom(pres, e, e).dim) == pres.loop_order(i));
        CHECK(ext1_euler(pres, e, e) == 0);
        CHECK(ext1_resolution(pres, e, e) == 0);
        CHECK(is_rigid(pres, e));
      }
    }
    HPresentation const c2 = presentation(named_datum("C2~"));
    CHECK(hom(c2, projective(c2, 1), projective(c2, 1)).dim == 1);
    HPresentation const split = presentation(validate({{2, 0}, {0, 2}}, {2, 1}, {}));
    CHECK(hom(split, generalized_simple(split, 0), generalized_simple(split, 1)).dim == 0);
  }

  TEST_CASE("hom basis elements are homomorphisms") {
    HPresentation const pres = presentation(named_datum("B3"));
    PrimeField const& f = pres.field();
    std::mt19937_64 rng(4);
    GenModule const m = random_locally_free(pres, RootVector{1, 2, 1}, rng);
    GenModule const n = random_locally_free(pres, RootVector{1, 1, 2}, rng);
    HomBasis const hb = hom(pres, m, n);
    for (auto const& h : hb.basis) {
      for (std::size_t i = 0; i < 3; ++i) CHECK(multiply(f, h.maps[i], m.eps[i]) == multiply(f, n.eps[i], h.maps[i]));
      for (std::size_t a = 0; a < pres.arrows().size(); ++a) {
        auto const& ar = pres.arrows()[a];
        CHECK(multiply(f, h.maps[ar.target], m.arrows[a]) == multiply(f, n.arrows[a], h.maps[ar.source]));
      }
    }
  }

  TEST_CASE("Ext from projectives vanishes, also into non locally free modules") {
    std::mt19937_64 rng(21);
    for (auto const& name : testutil::battery()) {
      HPresentation const pres = presentation(named_datum(name));
      GenModule const s1 = simple_s1(pres);
      for (std::size_t i = 0; i < pres.vertices(); ++i) {
        GenModule const p = projective(pres, i);
        CHECK(ext1_resolution(pres, p, s1) == 0);
        for (int t = 0; t < 3; ++t) {
          GenModule const n = random_locally_free(pres, testutil::random_vector(rng, pres.vertices(), 0, 2), rng, 0.5);
          CHECK(ext1_resolution(pres, p, n) == 0);
        }
      }
    }
  }

  TEST_CASE("B3 Ext between generalized simples") {
    // The arrow a23 : 3 -> 2 carries extensions of E_3 by E_2, none the other way.
    HPresentation const pres = presentation(named_datum("B3"));
    GenModule const e2 = generalized_simple(pres, 1), e3 = generalized_simple(pres, 2);
    CHECK(ext1_resolution(pres, e2, e3) == 0);
    CHECK(ext1_euler(pres, e2, e3) == 0);
    CHECK(ext1_resolution(pres, e3, e2) == 2);
    CHECK(ext1_euler(pres, e3, e2) == 2);
  }

  TEST_CASE("Euler identity on random pairs") {
    std::mt19937_64 rng(99);
    for (auto const& name : testutil::battery()) {
      CAPTURE(name);
      HPresentation const pres = presentation(named_datum(name));
      std::size_t const n = pres.vertices();
      for (int t = 0; t < 30; ++t) {
        double const density = t % 3 == 0 ? 0.3 : 1.0;
        GenModule const m = random_locally_free(pres, testutil::random_vector(rng, n, 0, 2), rng, density);
        GenModule const k = random_locally_free(pres, testutil::random_vector(rng, n, 0, 2), rng, density);
        ResolutionDims const rd = resolution_dims(pres, m, k);
        CHECK(rd.hom == hom(pres, m, k).dim);
        Int const euler = euler_form(pres.data(), *is_locally_free(pres, m), *is_locally_free(pres, k));
        CHECK(static_cast<Int>(rd.hom) - static_cast<Int>(rd.ext1) == euler);
        CHECK(static_cast<Int>(rd.ext1) == ext1_euler(pres, m, k));
      }
    }
  }

  TEST_CASE("not locally free inputs") {
    HPresentation const pres = presentation(named_datum("B3"));
    GenModule const s1 = simple_s1(pres);
    GenModule const e1 = generalized_simple(pres, 0);
    CHECK(error_of([&] { ext1_euler(pres, s1, e1); }) == ErrorCode::NotLocallyFree);
    CHECK(error_of([&] { ext1_resolution(pres, s1, e1); }) == ErrorCode::NotLocallyFree);
    CHECK(ext1_resolution(pres, e1, s1) >= 0);
  }

  TEST_CASE("generic rigid modules") {
    HPresentation const pres = presentation(named_datum("B3"));
    auto const m = generic_rigid(pres, RootVector{1, 2, 2}, 0, 32);
    REQUIRE(m);
    CHECK(is_locally_free(pres, *m) == RootVector{1, 2, 2});
    CHECK(hom(pres, *m, *m).dim == 2);
    CHECK(ext1_euler(pres, *m, *m) == 0);
    CHECK(ext1_resolution(pres, *m, *m) == 0);
    for (std::size_t i = 0; i < 3; ++i) {
      auto const e = generic_rigid(pres, RootVector::unit(3, i), 0, 32);
      REQUIRE(e);
      CHECK(static_cast<Int>(hom(pres, *e, *e).dim) == pres.loop_order(i));
    }
    HPresentation const c2 = presentation(named_datum("C2~"));
    CHECK_FALSE(generic_rigid(c2, RootVector{1, 2, 1}, 0, 64));
    std::mt19937_64 rng(1);
    GenModule const delta = random_locally_free(c2, RootVector{1, 2, 1}, rng);
    CHECK(hom(c2, delta, delta).dim >= 1);
    CHECK(ext1_euler(c2, delta, delta) >= 1);
    CHECK_FALSE(is_rigid(c2, delta));
  }

  TEST_CASE("generic rigid is independent of the number of jobs") {
    HPresentation const pres = presentation(named_datum("B3"));
    for (auto const& r : enumerate_schur(pres.data(), 3).roots) {
      auto const a = generic_rigid(pres, r, 3, 8, 1);
      auto const b = generic_rigid(pres, r, 3, 8, 4);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(*a == *b);
    }
  }

  TEST_CASE("rank vectors determine rigid modules up to hom profile") {
    HPresentation const pres = presentation(named_datum("B3"));
    auto const roots = enumerate_schur(pres.data(), 3).roots;
    std::vector<GenModule> atlas;
    for (auto const& r : roots) atlas.push_back(*generic_rigid(pres, r, 0, 32));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      GenModule const other = *generic_rigid(pres, roots[k], 17, 32);
      for (auto const& x : atlas) {
        CHECK(hom(pres, other, x).dim == hom(pres, atlas[k], x).dim);
        CHECK(hom(pres, x, other).dim == hom(pres, x, atlas[k]).dim);
      }
    }
  }

  TEST_CASE("endomorphism algebras") {
    HPresentation const pres = presentation(named_datum("B3"));
    EndReport const e1 = end_algebra(pres, generalized_simple(pres, 0));
    CHECK(e1.dim == 2);
    CHECK(e1.is_local);
    CHECK(e1.nilpotency == 2);
    CHECK(e1.is_truncated_polynomial);
    CHECK(e1.free_over_end);

    EndReport const r = end_algebra(pres, *generic_rigid(pres, RootVector{1, 2, 2}, 0, 32));
    CHECK(r.dim == 2);
    CHECK(r.is_truncated_polynomial);
    CHECK(r.free_over_end);

    GenModule const sum = direct_sum(pres, generalized_simple(pres, 0), generalized_simple(pres, 0));
    EndReport const s = end_algebra(pres, sum);
    CHECK(s.dim == 8);
    CHECK_FALSE(s.is_local);
    CHECK(s.residue_dim == 4);
    CHECK_FALSE(s.is_truncated_polynomial);

    EndReport const e3 = end_algebra(pres, generalized_simple(pres, 2));
    CHECK(e3.dim == 1);
    CHECK(e3.nilpotency == 1);
    CHECK(e3.is_truncated_polynomial);
  }

  TEST_CASE("end algebra needs p > dim End") {
    HPresentation const pres = presentation(named_datum("A1"), FieldSpec{97});
    GenModule m = zero_module(pres);
    m.dims[0] = 10;
    m.eps[0] = FpMatrix(10, 10);
    CHECK(error_of([&] { end_algebra(pres, m); }) == ErrorCode::FieldTooSmall);
  }

  TEST_CASE("bricks") {
    HPresentation const pres = presentation(named_datum("B3"));
    BrickReport const b = brick_of(pres, *generic_rigid(pres, RootVector{1, 2, 2}, 0, 32));
    CHECK(b.dims == RootVector{1, 2, 1});
    CHECK(b.is_brick);
    CHECK(validate_rep(pres, b.quotient));
    for (std::size_t i = 0; i < 3; ++i) {
      BrickReport const s = brick_of(pres, generalized_simple(pres, i));
      CHECK(s.dims == RootVector::unit(3, i));
      CHECK(s.is_brick);
    }
    GenModule const sum = direct_sum(pres, generalized_simple(pres, 0), generalized_simple(pres, 0));
    CHECK(error_of([&] { brick_of(pres, sum); }) == ErrorCode::NotRigidIndecomposable);
  }

  TEST_CASE("direct sums") {
    HPresentation const pres = presentation(named_datum("G2"));
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
      RootVector const a = testutil::random_vector(rng, 2, 0, 2), b = testutil::random_vector(rng, 2, 0, 2);
      GenModule const m = random_locally_free(pres, a, rng), n = random_locally_free(pres, b, rng);
      GenModule const p = random_locally_free(pres, testutil::random_vector(rng, 2, 0, 2), rng);
      GenModule const s = direct_sum(pres, m, n);
      CHECK(is_locally_free(pres, s) == a + b);
      CHECK(hom(pres, s, p).dim == hom(pres, m, p).dim + hom(pres, n, p).dim);
      CHECK(direct_sum(pres, m, zero_module(pres)) == m);
    }
  }
}
