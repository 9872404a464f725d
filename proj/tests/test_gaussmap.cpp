#include "doctest.h"
#include "wahl/errors.hpp"
#include "wahl/gaussmap/gaussian.hpp"
#include "wahl/rng.hpp"

using namespace wahl;
using curves::CICurve;
using curves::CIType;
using exactlin::FpMatrix;
using exactlin::Prime;
using gradedring::Form;

namespace {
const Prime kP = exactlin::checked_prime(2147483629);
const Prime kQ = exactlin::checked_prime(1073741827);

const CICurve& curve24() {
  static const CICurve c =
      curves::make_ci_curve(curves::parse_type("2,4"), kP, 1);
  return c;
}
}  // namespace

TEST_CASE("raw tuple on the projective line") {
  gradedring::GradedRing line(2);
  line.ensure_degree(1);
  const Form x0 = gradedring::monomial_form(line, 1, 0);
  const Form x1 = gradedring::monomial_form(line, 1, 1);
  const auto tuple = gaussmap::gaussian_tuple_forms(line, kP, x0, x1);
  REQUIRE(tuple.size() == 2);
  // (x0 d(x1) - x1 d(x0)) over (d/dx0, d/dx1) is (-x1, x0).
  CHECK(tuple[0].coeffs == std::vector<std::uint64_t>{0, kP.value - 1});
  CHECK(tuple[1].coeffs == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("tuple antisymmetry") {
  const CICurve& c = curve24();
  Rng rng(3);
  const Form f = gradedring::random_form(c.ring(), kP, 2, rng);
  const Form g = gradedring::random_form(c.ring(), kP, 2, rng);

  const auto fg = gaussmap::gaussian_tuple(c, f, g);
  const auto gf = gaussmap::gaussian_tuple(c, g, f);
  REQUIRE(fg.size() == gf.size());
  for (std::size_t i = 0; i < fg.size(); ++i)
    CHECK(fg[i] == (gf[i] ? kP.value - gf[i] : 0));

  for (std::uint64_t v : gaussmap::gaussian_tuple(c, f, f)) CHECK(v == 0);
}

TEST_CASE("fast monomial rows equal the generic tuple path") {
  const CICurve& c = curve24();
  const auto& piece = c.piece(2);
  const FpMatrix rows = gaussmap::wedge_rows(c, 2);
  REQUIRE(rows.rows() == 36);  // C(9, 2) basis pairs

  std::size_t r = 0;
  for (std::size_t i = 0; i < piece.standard_cols.size(); ++i) {
    for (std::size_t j = i + 1; j < piece.standard_cols.size(); ++j, ++r) {
      const Form fi =
          gradedring::monomial_form(c.ring(), 2, piece.standard_cols[i]);
      const Form fj =
          gradedring::monomial_form(c.ring(), 2, piece.standard_cols[j]);
      const auto generic = gaussmap::gaussian_tuple(c, fi, fj);
      const auto fast = rows.row(r);
      REQUIRE(generic.size() == fast.size());
      for (std::size_t t = 0; t < generic.size(); ++t)
        CHECK(generic[t] == fast[t]);
    }
  }
}

TEST_CASE("conormal row counts and independence") {
  const CICurve& c = curve24();
  const FpMatrix con = gaussmap::conormal_rows(c, 4);
  CHECK(con.rows() == 10);  // h0(2) + h0(0)
  // Twisted conormal sections embed into the tuple space, so the rows are
  // independent.
  CHECK(exactlin::rank(con, kP) == 10);
  CHECK(gaussmap::conormal_rows(c, 1).rows() == 0);

  const auto c2222 =
      curves::make_ci_curve(curves::parse_type("2,2,2,2"), kP, 1);
  const FpMatrix con4 = gaussmap::conormal_rows(c2222, 4);
  CHECK(con4.rows() == 68);  // 4 * h0(2)
  CHECK(exactlin::rank(con4, kP) == 68);
}

TEST_CASE("pair-mode rows span the full multiplication kernel") {
  const CICurve& c = curve24();
  // dim ker = h0(2) h0(4) - h0(6): the multiplication map is surjective on
  // an arithmetically Cohen-Macaulay curve.
  CHECK(gaussmap::pair_rows(c, 2, 4).rows() == 9 * 24 - 40);
}

TEST_CASE("coranks on the (2,4) model") {
  const CICurve& c = curve24();
  const auto wedge = gaussmap::corank_once(c, 2, 2);
  CHECK(wedge.target_dim == 40);
  CHECK(wedge.rank == 30);
  CHECK(wedge.corank == 10);

  const auto pair = gaussmap::corank_once(c, 2, 4);
  CHECK(pair.target_dim == 56);
  CHECK(pair.corank == 1);

  // Same numbers at an independent prime.
  const auto other = curves::make_ci_curve(curves::parse_type("2,4"), kQ, 1);
  CHECK(gaussmap::corank_once(other, 2, 2).corank == 10);
  CHECK(gaussmap::corank_once(other, 2, 4).corank == 1);
}

TEST_CASE("closed-form coranks and the guarded case") {
  auto type_of = [](const char* s) { return curves::parse_type(s); };
  CHECK(gaussmap::corank_formula(type_of("2,2,2,2")) == 4);
  CHECK(gaussmap::corank_formula(type_of("2,2,3")) == 7);
  CHECK(gaussmap::corank_formula(type_of("2,3,3")) == 2);
  CHECK(gaussmap::corank_formula(type_of("3,4")) == 5);
  CHECK(gaussmap::corank_formula(type_of("4,4")) == 2);
  CHECK_THROWS_AS(gaussmap::corank_formula(type_of("2,4")),
                  FormulaInapplicableError);
  // k = 1: below the closed form's validity range.
  CHECK_THROWS_AS(gaussmap::corank_formula(curves::make_type(2, {4})),
                  FormulaInapplicableError);
}

TEST_CASE("two-prime reports") {
  gaussmap::TwoPrimeConfig cfg;
  cfg.seed = 7;
  const auto rep = gaussmap::corank_wedge(curves::parse_type("2,4"), cfg);
  CHECK(rep.corank == 10);
  CHECK(rep.mode == "wedge");
  CHECK(rep.path == "matrix");
  CHECK(rep.primes.size() == 2);
  CHECK(rep.primes[0] != rep.primes[1]);
  CHECK(rep.retries == 0);
  CHECK(static_cast<std::int64_t>(rep.rank) + rep.corank == rep.target_dim);

  const auto again = gaussmap::corank_wedge(curves::parse_type("2,4"), cfg);
  CHECK(again.primes == rep.primes);
  CHECK(again.rank == rep.rank);

  gaussmap::TwoPrimeConfig explicit_cfg;
  explicit_cfg.primes = {2147483629ull, 1073741827ull};
  const auto pinned = gaussmap::corank_pair(curves::parse_type("2,4"), 2, 4,
                                            explicit_cfg);
  CHECK(pinned.corank == 1);
  CHECK(pinned.mode == "pair");
  CHECK(pinned.primes == explicit_cfg.primes);

  gaussmap::TwoPrimeConfig bad;
  bad.primes = {2147483629ull, 2147483629ull};
  CHECK_THROWS_AS(gaussmap::corank_wedge(curves::parse_type("2,4"), bad),
                  InvalidInputError);
}

TEST_CASE("Euler relation holds on assembled rows and detects corruption") {
  const CICurve& c = curve24();
  FpMatrix wedge = gaussmap::wedge_rows(c, 2);
  CHECK(gaussmap::rows_satisfy_euler(c, wedge, 4));
  CHECK(gaussmap::rows_satisfy_euler(c, gaussmap::pair_rows(c, 2, 4), 6));

  wedge.at(0, 0) = exactlin::addmod(wedge.at(0, 0), 1, kP.value);
  CHECK_FALSE(gaussmap::rows_satisfy_euler(c, wedge, 4));
}

TEST_CASE("lift independence") {
  const CICurve& c = curve24();
  const FpMatrix conormal = gaussmap::conormal_rows(c, 4);
  exactlin::Echelon span(conormal.cols(), kP);
  for (std::size_t r = 0; r < conormal.rows(); ++r)
    span.add_row(
        std::vector<std::uint64_t>(conormal.row(r).begin(), conormal.row(r).end()));

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Form q = gaussmap::random_ideal_element(c, 2, rng);
    const Form g = gradedring::random_form(c.ring(), kP, 2, rng);
    CHECK(span.in_span(gaussmap::gaussian_tuple(c, q, g)));
  }

  const FpMatrix plain = gaussmap::wedge_rows(c, 2);
  const FpMatrix perturbed = gaussmap::wedge_rows_perturbed(c, 2, rng);
  CHECK(exactlin::relative_rank(plain, conormal, kP) ==
        exactlin::relative_rank(perturbed, conormal, kP));
}
