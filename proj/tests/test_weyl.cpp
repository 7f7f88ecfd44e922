#include <doctest.h>

#include "oracles.hpp"
#include "schurlat/weyl.hpp"
#include "test_util.hpp"

using namespace schurlat;
using testutil::error_of;

namespace {

std::vector<std::string> finite_battery() { return {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}; }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("simple reflections") {
    CartanData const b3 = named_datum("B3");
    CHECK(simple_reflection(b3, 0)(RootVector{0, 1, 0}) == RootVector{1, 1, 0});
    for (std::size_t i = 0; i < 3; ++i) CHECK(simple_reflection(b3, i)(RootVector::unit(3, i)) == -RootVector::unit(3, i));
    CHECK(simple_reflection(named_datum("C2~"), 1)(RootVector{1, 0, 0}) == RootVector{1, 2, 0});
    CHECK(error_of([&] { simple_reflection(b3, 3); }) == ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("reflections along roots") {
    CartanData const b3 = named_datum("B3");
    CHECK(reflect(b3, RootVector{1, 2, 2}, RootVector{1, 0, 0}) == RootVector{1, 0, 0});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      RootVector const u = testutil::random_vector(rng, 3, -5, 5);
      for (std::size_t i = 0; i < 3; ++i) CHECK(reflect(b3, RootVector::unit(3, i), u) == simple_reflection(b3, i)(u));
    }
    CHECK(error_of([] { reflect(named_datum("C2~"), RootVector{1, 2, 1}, RootVector{1, 0, 0}); }) ==
          ErrorCode::IsotropicReflection);
    CHECK(error_of([&] { reflect(b3, RootVector{1, 0, 1}, RootVector{0, 1, 0}); }) == ErrorCode::NonIntegralResult);
  }

  TEST_CASE("real roots agree with the alpha-string oracle in finite type") {
    for (auto const& name : finite_battery()) {
      CAPTURE(name);
      CartanData const d = named_datum(name);
      std::set<RootVector> const expected = oracle::positive_roots_by_strings(d.cartan());
      std::vector<RootVector> const pos = positive_roots(d);
      CHECK(std::set<RootVector>(pos.begin(), pos.end()) == expected);
      Int bound = 1;
      for (auto const& r : expected) bound = std::max(bound, r.max_abs());
      RootSet const all = real_roots(d, bound);
      CHECK(all.roots.size() == 2 * expected.size());
      CHECK(all.positive().roots.size() == expected.size());
    }
    CHECK(real_roots(named_datum("B3"), 3).roots.size() == 18);
    CHECK(real_roots(named_datum("A1"), 1).roots == std::vector<RootVector>{RootVector{-1}, RootVector{1}});
    CHECK(real_roots(named_datum("C2~"), 2).contains(RootVector{1, 2, 0}));
    CHECK(error_of([] { real_roots(named_datum("A2"), 0); }) == ErrorCode::BoundTooSmall);
  }

  TEST_CASE("real root invariants") {
    for (auto const& name : testutil::battery()) {
      CAPTURE(name);
      CartanData const d = named_datum(name);
      Int const bound = is_finite_type(d) ? 3 : 4;
      RootSet const roots = real_roots(d, bound);
      for (auto const& b : roots.roots) {
        CHECK(reflect(d, b, b) == -b);
        RootVector const dual = dual_root(d, b);
        CHECK(dual_root(transpose_data(d), dual) == b);
        for (std::size_t i = 0; i < d.rank(); ++i) {
          RootVector const image = simple_reflection(d, i)(b);
          if (image.max_abs() <= bound) CHECK(roots.contains(image));
        }
      }
    }
  }

  TEST_CASE("dual roots") {
    CartanData const b3 = named_datum("B3");
    CHECK(dual_root(b3, RootVector{1, 2, 2}) == RootVector{1, 2, 1});
    CHECK(dual_root(b3, RootVector{0, 1, 2}) == RootVector{0, 1, 1});
    for (std::size_t i = 0; i < 3; ++i) CHECK(dual_root(b3, RootVector::unit(3, i)) == RootVector::unit(3, i));
    CHECK(error_of([] { dual_root(named_datum("C2~"), RootVector{1, 2, 1}); }) == ErrorCode::IsotropicRoot);
    CHECK(error_of([&] { dual_root(b3, RootVector{1, 0, 1}); }) == ErrorCode::NonIntegralDual);
  }

  TEST_CASE("finite type by the determinant oracle") {
    CHECK(oracle::leading_minors(named_datum("B3").symmetrized()) == std::vector<Int>{4, 12, 8});
    CHECK(oracle::det(named_datum("C2~").symmetrized()) == 0);
    for (auto const& name : testutil::battery()) {
      CartanData const d = named_datum(name);
      auto const minors = oracle::leading_minors(d.symmetrized());
      bool const positive = std::all_of(minors.begin(), minors.end(), [](Int m) { return m > 0; });
      CHECK(is_finite_type(d) == positive);
    }
    CHECK(is_finite_type(named_datum("A1")));
    CHECK_FALSE(is_finite_type(named_datum("C2~")));
  }

  TEST_CASE("Coxeter element") {
    CartanData const a1 = named_datum("A1");
    CHECK(coxeter_element(a1) == simple_reflection(a1, 0));
    CartanData const b3 = named_datum("B3");
    WeylElement const c = coxeter_element(b3);
    RootVector const a3{0, 0, 1};
    CHECK(c(a3) == simple_reflection(b3, 0)(simple_reflection(b3, 1)(simple_reflection(b3, 2)(a3))));
    for (auto const& name : testutil::battery()) {
      CartanData const d = named_datum(name);
      Int const sign = d.rank() % 2 == 0 ? 1 : -1;
      CHECK(oracle::det(coxeter_element(d).matrix) == sign);
    }
  }

  TEST_CASE("absolute length agrees with Carter's rank formula on whole groups") {
    for (auto const& name : finite_battery()) {
      CAPTURE(name);
      CartanData const d = named_datum(name);
      AbsoluteLengthTable const table(d);
      auto const group = oracle::weyl_group(d.cartan());
      CHECK(table.group_order() == group.size());
      for (auto const& w : group) CHECK(table.length(WeylElement{w, {}}) == oracle::carter_length(w));
    }
    CartanData const b3 = named_datum("B3");
    CHECK(absolute_length(b3, WeylElement{IntMatrix::identity(3), {}}) == 0);
    CHECK(absolute_length(b3, coxeter_element(b3)) == 3);
    for (auto const& r : positive_roots(b3)) CHECK(absolute_length(b3, reflection_matrix(b3, r)) == 1);
    CHECK(error_of([] { absolute_length(named_datum("C2~"), coxeter_element(named_datum("C2~"))); }) ==
          ErrorCode::InfiniteType);
  }

  TEST_CASE("absolute length is conjugation invariant and bounded by word length in B2") {
    CartanData const b2 = named_datum("B2");
    AbsoluteLengthTable const table(b2);
    auto const group = oracle::weyl_group(b2.cartan());
    for (auto const& w : group)
      for (std::size_t i = 0; i < 2; ++i) {
        IntMatrix const s = simple_reflection(b2, i).matrix;
        CHECK(table.length(WeylElement{s * w * s, {}}) == table.length(WeylElement{w, {}}));
      }
    // A word of length k has absolute length at most k.
    std::vector<WeylElement> layer{WeylElement{IntMatrix::identity(2), {}}};
    for (int k = 1; k <= 4; ++k) {
      std::vector<WeylElement> next;
      for (auto const& w : layer)
        for (std::size_t i = 0; i < 2; ++i) {
          WeylElement const x = compose(w, simple_reflection(b2, i));
          CHECK(table.length(x) <= k);
          next.push_back(x);
        }
      layer = std::move(next);
    }
  }
}
