#include "doctest.h"
#include "wahl/curves/ci_curve.hpp"
#include "wahl/errors.hpp"

using namespace wahl;
using curves::CIType;
using exactlin::Prime;

namespace {
const Prime kP = exactlin::checked_prime(2147483629);
}

TEST_CASE("the six standard types and their columns") {
  const auto& types = curves::standard_ci_types();
  REQUIRE(types.size() == 6);

  struct Row {
    const char* label;
    int g, r, k;
  };
  const Row expect[] = {
      {"2,2,2,2", 5, 2, 2}, {"2,2,3", 4, 2, 2}, {"2,3,3", 4, 3, 3},
      {"2,4", 3, 2, 2},     {"3,4", 3, 3, 3},   {"4,4", 3, 4, 4},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(types[i].type.label() == expect[i].label);
    CHECK(types[i].type.ambient == expect[i].g);
    CHECK(types[i].g == expect[i].g);
    CHECK(types[i].r == expect[i].r);
    CHECK(types[i].type.k == expect[i].k);
  }
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS(curves::make_type(3, {2, 2}), InvalidInputError);  // k = 0
  CHECK_THROWS_AS(curves::make_type(3, {2}), InvalidInputError);
  CHECK_THROWS_AS(curves::make_type(3, {1, 5}), InvalidInputError);
  CHECK_THROWS_AS(curves::make_type(9, {2, 2, 2, 2, 2, 2, 2, 2}), InvalidInputError);
  CHECK_THROWS_AS(curves::parse_type("2,x"), InvalidInputError);
  CHECK_THROWS_AS(curves::parse_type(""), InvalidInputError);

  const CIType quartic = curves::make_type(2, {4});
  CHECK(quartic.k == 1);
  CHECK(quartic.genus() == 3);

  CHECK(curves::parse_type("2,4").label() == "2,4");
  CHECK(curves::parse_type("2,4").ambient == 3);
}

TEST_CASE("curve invariants") {
  const auto c24 = curves::make_ci_curve(curves::parse_type("2,4"), kP, 1);
  CHECK(c24.degree() == 8);
  CHECK(c24.genus() == 9);
  CHECK(c24.k() == 2);
  CHECK(c24.h0(c24.k()) == 9);
  CHECK(c24.piece(2).quotient_dim == 9);
  CHECK(c24.max_cached_degree() == 8);
  CHECK_THROWS_AS(c24.piece(9), ShapeError);

  const auto c223 = curves::make_ci_curve(curves::parse_type("2,2,3"), kP, 1);
  CHECK(c223.degree() == 12);
  CHECK(c223.genus() == 13);

  const auto c44 = curves::make_ci_curve(curves::parse_type("4,4"), kP, 1);
  CHECK(c44.degree() == 16);
  CHECK(c44.genus() == 33);
  CHECK(c44.piece(4).quotient_dim == 33);

  for (const auto& st : curves::standard_ci_types())
    CHECK(st.type.genus() ==
          1 + st.type.product_of_degrees() * st.type.k / 2);
}

TEST_CASE("curves are deterministic in (type, prime, seed)") {
  const CIType t = curves::parse_type("2,4");
  const auto a = curves::make_ci_curve(t, kP, 99);
  const auto b = curves::make_ci_curve(t, kP, 99);
  const auto c = curves::make_ci_curve(t, kP, 100);
  REQUIRE(a.generators().size() == b.generators().size());
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    CHECK(a.generators()[i].coeffs == b.generators()[i].coeffs);
  CHECK(a.generators()[0].coeffs != c.generators()[0].coeffs);
}

TEST_CASE("plane quartic model") {
  const auto quartic = curves::make_ci_curve(curves::make_type(2, {4}), kP, 1);
  CHECK(quartic.genus() == 3);
  CHECK(quartic.piece(1).quotient_dim == 3);   // h^0(omega)
  CHECK(quartic.piece(3).quotient_dim == 10);  // h^0(omega^3)
}
