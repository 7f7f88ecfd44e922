#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schurlat/fp_matrix.hpp"
#include "test_util.hpp"

using namespace schurlat;
using testutil::error_of;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, PrimeField const& f, std::size_t r, std::size_t c, double zero_rate) {
  std::uniform_real_distribution<double> coin(0, 1);
  FpMatrix m(r, c);
  for (auto& x : m.data()) x = coin(rng) < zero_rate ? 0 : static_cast<FpMatrix::value_type>(rng() % f.modulus());
  return m;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= b;
  return out;
}

}  // namespace

TEST_SUITE("fp") {
  TEST_CASE("field arithmetic") {
    PrimeField const f(97);
    CHECK(f.add(96, 5) == 4);
    CHECK(f.sub(3, 5) == 95);
    CHECK(f.mul(50, 2) == 3);
    for (std::uint32_t a = 1; a < 97; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == 96);
    CHECK(error_of([] { PrimeField(91); }) == ErrorCode::BadField);
    CHECK(error_of([] { PrimeField(1); }) == ErrorCode::BadField);
  }

  TEST_CASE("rank and nullspace against kernel enumeration over F_5") {
    PrimeField const f(5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
      std::size_t const r = 1 + rng() % 4, c = 1 + rng() % 5;
      FpMatrix const a = random_matrix(rng, f, r, c, 0.4);
      std::size_t const rk = rank(f, a);
      CHECK(oracle::kernel_size(f, a) == ipow(5, c - rk));
      FpMatrix const ns = nullspace(f, a);
      CHECK(ns.cols() == c - rk);
      CHECK(multiply(f, a, ns).is_zero());
      CHECK(rank(f, a.transpose()) == rk);
      CHECK(column_basis(f, a).cols() == rk);
    }
  }

  TEST_CASE("inverse, complements and span coordinates") {
    PrimeField const f(32003);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      std::size_t const n = 1 + rng() % 8;
      FpMatrix const a = random_matrix(rng, f, n, n, 0.0);
      if (rank(f, a) < n) continue;
      CHECK(multiply(f, inverse(f, a), a) == FpMatrix::identity(n));
    }
    CHECK(error_of([&] { inverse(f, FpMatrix(2, 2)); }) == ErrorCode::InvariantBroken);

    FpMatrix const span = random_matrix(rng, f, 6, 2, 0.0);
    FpMatrix const comp = complement_basis(f, span);
    CHECK(comp.cols() == 4);
    CHECK(rank(f, hconcat(span, comp)) == 6);

    SpanCoordinates const sc(f, span);
    std::vector<FpMatrix::value_type> const coeff{7, 12345};
    auto const v = apply(f, span, coeff);
    CHECK(sc.coordinates(v) == coeff);
    CHECK(sc.in_span(v));
    std::vector<FpMatrix::value_type> e0(6, 0);
    e0[0] = 1;
    CHECK(sc.in_span(e0) == (rank(f, hconcat(span, from_columns(6, {e0}))) == 2));
  }

  TEST_CASE("shape errors") {
    PrimeField const f(97);
    CHECK(error_of([&] { multiply(f, FpMatrix(2, 3), FpMatrix(2, 3)); }) == ErrorCode::ShapeMismatch);
    CHECK(error_of([&] { add(f, FpMatrix(2, 3), FpMatrix(3, 2)); }) == ErrorCode::ShapeMismatch);
  }

  TEST_CASE("powers") {
    PrimeField const f(97);
    FpMatrix const j{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK(power(f, j, 0) == FpMatrix::identity(3));
    CHECK_FALSE(power(f, j, 2).is_zero());
    CHECK(power(f, j, 3).is_zero());
  }
}
