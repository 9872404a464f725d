#include "doctest.h"
#include "wahl/errors.hpp"
#include "wahl/ledger/ledger.hpp"
#include "wahl/rng.hpp"

using namespace wahl;
using namespace wahl::ledger;

TEST_CASE("N(r, g)") {
  CHECK(n_rg(2, 3) == 9);
  CHECK(n_rg(1, 2) == 2);
  CHECK(n_rg(4, 3) == 33);
  CHECK(n_rg(3, 4) == 28);
  CHECK(n_rg(2, 6) == 21);
  CHECK_THROWS_AS(n_rg(0, 5), InvalidInputError);
  CHECK_THROWS_AS(n_rg(2, 1), InvalidInputError);
}

TEST_CASE("K3 family dimension and the parameter-count decomposition") {
  CHECK(k3_hilbert_dim(9) == 118);
  CHECK(k3_hilbert_dim(2) == 27);
  CHECK_THROWS_AS(k3_hilbert_dim(1), InvalidInputError);

  // 118 + (9 + 10) + 2*1 = 139.
  CHECK(k3_hilbert_dim(9) + (9 + 10) + 2 * 1 == fano_bound(2, 3, 10, 1));
  CHECK(fano_bound(2, 3, 10, 1) == 139);

  // The decomposition family dim + h0(N_C(-1)) + 2 h0(N_C(-2)) is an
  // identity in the formulas.
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + static_cast<int>(rng.below(5));
    const int g = 2 + static_cast<int>(rng.below(12));
    const auto c = static_cast<std::int64_t>(rng.below(20));
    const auto h = static_cast<std::int64_t>(rng.below(3));
    const std::int64_t big_n = n_rg(r, g);
    CHECK(k3_hilbert_dim(big_n) + (big_n + c) + 2 * h == fano_bound(r, g, c, h));
  }
}

TEST_CASE("threefold parameter counts") {
  CHECK(fano_bound(2, 4, 7, 0) == 234);
  CHECK(fano_bound(2, 5, 4, 0) == 363);
  CHECK(fano_bound(2, 6, 2, 0) == 525);
  CHECK(fano_bound(3, 4, 2, 0) == 889);
  CHECK(fano_bound(4, 3, 2, 0) == 1209);
  CHECK(fano_bound(2, 3, 10, 1) == 139);
}

TEST_CASE("n-fold parameter counts") {
  CHECK(mukai_bound(8, 1, 8, 7, 0) == 189);
  CHECK(mukai_bound(10, 1, 7, 9, 0) == 210);
  CHECK(mukai_bound(6, 1, 9, 5, 0) == 174);
  CHECK(mukai_bound(5, 1, 10, 4, 0) == 181);
  CHECK(mukai_bound(6, 1, 6, 10, 1) == 36 + 36 + 19 + 40 + 14);
  CHECK(mukai_bound(6, 1, 6, 10, 1) == 145);
  CHECK(mukai_bound(5, 2, 5, 4, 0) == 405);
  CHECK_THROWS_AS(mukai_bound(2, 1, 8, 7, 0), InvalidInputError);

  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + static_cast<int>(rng.below(5));
    const int g = 2 + static_cast<int>(rng.below(12));
    const auto c = static_cast<std::int64_t>(rng.below(20));
    const auto h = static_cast<std::int64_t>(rng.below(3));
    CHECK(mukai_bound(3, r, g, c, h) == fano_bound(r, g, c, h));
  }
}

TEST_CASE("extendability verdicts") {
  CHECK(zak_verdict(9, 1, 0).min_non_extendable == 2);
  CHECK(zak_verdict(n_rg(1, 7), 9, 0).min_non_extendable == 10);
  CHECK_FALSE(zak_verdict(n_rg(1, 6), 10, 1).conclusive);
  CHECK(zak_verdict(n_rg(1, 6), 10, 1).text == "inconclusive");
  CHECK_THROWS_AS(zak_verdict(3, 1, 0), InvalidInputError);

  // The criterion closes at corank + 1 and for every larger k: the genus-N
  // curve sits in P^{N-1} and h0(N_C(-1)) = N + corank.
  for (std::int64_t c : {0, 1, 4, 9}) {
    const std::int64_t big_n = 12;
    const auto v = zak_verdict(big_n, c, 0);
    for (std::int64_t k = 1; k <= c + 3; ++k) {
      const bool criterion = big_n + c <= big_n - 1 + k;
      CHECK(criterion == (k >= v.min_non_extendable));
    }
  }
}

TEST_CASE("corank table lookups") {
  CHECK(corank_row(1, 15)->corank == 1);
  CHECK(corank_row(1, 17)->corank == 1);
  CHECK(corank_row(1, 40)->curve_hypothesis == "any smooth");
  CHECK(corank_row(2, 9)->corank == 1);
  CHECK(corank_row(3, 2)->corank == 10);  // the generic-curve row
  CHECK(corank_row(3, 2)->h0n2->value == 1);
  CHECK(corank_row(5, 2)->corank == 1);
  CHECK(corank_row(7, 11)->corank == 1);
  CHECK_FALSE(corank_row(1, 5).has_value());

  CHECK(corank_row(2, 3)->h0n2->is_bound);
  CHECK(corank_row(2, 3)->h0n2->provenance == Provenance::kDerived);
  CHECK(corank_row(1, 6)->h0n2->is_bound);
  CHECK_FALSE(corank_row(2, 2)->h0n2.has_value());
}

TEST_CASE("stored cone bounds are consistent with the formula") {
  for (const auto& row : corank_table()) {
    if (!row.cone_bound) continue;
    REQUIRE(row.h0n2.has_value());
    CHECK(fano_bound(row.r_min, row.g_min, row.corank, row.h0n2->value) ==
          *row.cone_bound);
  }
}

TEST_CASE("classification verdicts") {
  auto entry = [](int r, int g, std::optional<int> n = {}) {
    return classification_report(r, g, n);
  };

  CHECK(entry(2, 5).verdict == kVerdictUnique);
  CHECK(entry(2, 5).f_value == 363);
  CHECK(entry(2, 3).verdict == kVerdictUnique);
  CHECK(entry(2, 3).f_value == 139);
  CHECK(entry(5, 2).verdict == kVerdictEmptyNumeric);
  CHECK(entry(3, 3).verdict == kVerdictEmptyNumeric);
  CHECK(entry(2, 2).verdict == kVerdictEmptyNumeric);
  CHECK(entry(2, 7).verdict == kVerdictEmptyZak);
  CHECK(entry(3, 9).verdict == kVerdictEmptyZak);
  CHECK(entry(4, 5).verdict == kVerdictEmptyZak);
  CHECK(entry(1, 4).verdict == kVerdictOutside);

  CHECK(entry(1, 6, 7).verdict == kVerdictEmptyZak);
  CHECK(entry(1, 8, 8).verdict == kVerdictUnique);
  CHECK(entry(1, 8, 8).bound_value == 189);
  CHECK(entry(1, 8, 9).verdict == kVerdictEmptyZak);
  CHECK(entry(1, 7, 10).verdict == kVerdictUnique);
  CHECK(entry(1, 7, 10).bound_value == 210);
  CHECK(entry(1, 7, 11).verdict == kVerdictEmptyZak);
  CHECK(entry(2, 5, 5).verdict == kVerdictUnique);
  CHECK(entry(2, 5, 5).bound_value == 405);
  CHECK(entry(2, 5, 6).verdict == kVerdictEmptyZak);
  CHECK(entry(2, 6, 4).verdict == kVerdictEmptyZak);
  CHECK(entry(2, 4, 4).verdict == kVerdictEmptyNumeric);
  CHECK(entry(1, 12, 5).verdict == kVerdictEmptyZak);
  CHECK(entry(1, 3, 5).verdict == kVerdictOutside);

  CHECK_THROWS_AS(entry(0, 5), InvalidInputError);
  CHECK_THROWS_AS(entry(2, 5, 2), InvalidInputError);

  // Structural invariants.
  for (int r = 1; r <= 6; ++r) {
    for (int g = 2; g <= 14; ++g) {
      const auto e3 = entry(r, g, 3);
      CHECK(e3.big_n == n_rg(r, g));
      CHECK(e3.bound_value == e3.f_value);
      if (e3.corank && e3.h0n2)
        CHECK(e3.f_value == fano_bound(r, g, e3.corank->value, e3.h0n2->value));
    }
  }

  // The (2,2) slot has no stored h0(N(-2)), so no parameter count either.
  CHECK_FALSE(entry(2, 2).f_value.has_value());
}
