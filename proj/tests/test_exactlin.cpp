#include <vector>

#include "doctest.h"
#include "wahl/errors.hpp"
#include "wahl/exactlin/elimination.hpp"
#include "wahl/rng.hpp"

using namespace wahl;
using exactlin::FpMatrix;
using exactlin::Prime;

namespace {

const Prime kP = exactlin::checked_prime(2147483629);
const Prime kQ = exactlin::checked_prime(1073741827);

FpMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows,
                   std::size_t cols) {
  FpMatrix m(0, cols);
  for (const auto& r : rows) m.push_row(r);
  return m;
}

FpMatrix random_matrix(std::size_t rows, std::size_t cols, Prime p, Rng& rng) {
  FpMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.below(p.value);
  return m;
}

}  // namespace

TEST_CASE("prime validation") {
  CHECK(exactlin::is_prime_u64(2));
  CHECK(exactlin::is_prime_u64(2147483647));
  CHECK_FALSE(exactlin::is_prime_u64(1));
  CHECK_FALSE(exactlin::is_prime_u64(2147483647ull * 3));

  CHECK(exactlin::checked_prime(2147483647).value == 2147483647);
  // 10007 is prime but below the 31-bit window the matrices require.
  CHECK_THROWS_AS(exactlin::checked_prime(10007), InvalidInputError);
  CHECK_THROWS_AS(exactlin::checked_prime(2147483629ull * 2), InvalidInputError);
  CHECK_THROWS_AS(exactlin::checked_prime((1ull << 30) + 1), InvalidInputError);
}

TEST_CASE("random primes are in range and reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 5; ++i) {
    const Prime p = exactlin::random_prime(a);
    CHECK(p.value > (1ull << 30));
    CHECK(p.value < (1ull << 31));
    CHECK((p.value & 1) == 1);
    CHECK(exactlin::is_prime_u64(p.value));
    CHECK(exactlin::random_prime(b).value == p.value);
  }
}

TEST_CASE("rank of simple matrices") {
  FpMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id.at(i, i) = 1;
  CHECK(rank(id, kP) == 5);

  CHECK(rank(FpMatrix(3, 7), kP) == 0);

  // Row 2 is twice row 1.
  const FpMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
  CHECK(rank(m, kP) == 2);
  CHECK(rank(m, kQ) == 2);
}

TEST_CASE("relative rank") {
  const FpMatrix a = from_rows({{1, 0}, {0, 1}}, 2);
  const FpMatrix b = from_rows({{1, 1}}, 2);
  CHECK(exactlin::relative_rank(a, b, kP) == 1);
  CHECK(exactlin::relative_rank(b, b, kP) == 0);
  CHECK(exactlin::relative_rank(a, FpMatrix(0, 2), kP) == 2);

  const FpMatrix wide = from_rows({{1, 0, 0}}, 3);
  CHECK_THROWS_AS(exactlin::relative_rank(a, wide, kP), ShapeError);
}

TEST_CASE("kernel basis") {
  FpMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(exactlin::kernel_basis(id, kP).rows() == 0);

  const FpMatrix zero(2, 3);
  const FpMatrix kz = exactlin::kernel_basis(zero, kP);
  CHECK(kz.rows() == 3);

  // x + y = 0: kernel spanned by (1, p-1) up to scale.
  const FpMatrix line = from_rows({{1, 1}}, 2);
  const FpMatrix k = exactlin::kernel_basis(line, kP);
  REQUIRE(k.rows() == 1);
  CHECK(exactlin::mulmod(k.at(0, 0), kP.value - 1, kP.value) == k.at(0, 1));
  CHECK(exactlin::addmod(k.at(0, 0), k.at(0, 1), kP.value) == 0);
}

TEST_CASE("elimination properties on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(10);
    const FpMatrix m = random_matrix(rows, cols, kP, rng);
    const std::size_t rk = rank(m, kP);
    CHECK(rk <= std::min(rows, cols));

    const FpMatrix kb = exactlin::kernel_basis(m, kP);
    CHECK(rk + kb.rows() == cols);
    for (std::size_t v = 0; v < kb.rows(); ++v) {
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t dot = 0;
        for (std::size_t c = 0; c < cols; ++c)
          dot = exactlin::addmod(
              dot, exactlin::mulmod(m.at(r, c), kb.at(v, c), kP.value), kP.value);
        CHECK(dot == 0);
      }
    }

    const FpMatrix b = random_matrix(1 + rng.below(4), cols, kP, rng);
    const std::size_t stacked = rank(FpMatrix::stacked(m, b), kP);
    CHECK(stacked >= std::max(rk, rank(b, kP)));
    CHECK(exactlin::relative_rank(m, b, kP) <= rk);
    CHECK(exactlin::relative_rank(m, b, kP) == stacked - rank(b, kP));

    // Row order must not change the rank.
    FpMatrix perm(0, cols);
    for (std::size_t r = rows; r-- > 0;) perm.push_row(m.row(r));
    CHECK(rank(perm, kP) == rk);
  }
}

TEST_CASE("integer matrices have the same rank at independent primes") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    FpMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.below(100);
    CHECK(rank(m, kP) == rank(m, kQ));
  }
}

TEST_CASE("unreduced entries are rejected") {
  FpMatrix m(1, 2);
  m.at(0, 0) = kP.value;  // = p, not a residue
  CHECK_THROWS_AS(rank(m, kP), ShapeError);
  CHECK_THROWS_AS(exactlin::kernel_basis(m, kP), ShapeError);
}

TEST_CASE("cell limit guards rank computations") {
  const FpMatrix big(6, 6);
  const std::size_t old = exactlin::max_cells();
  exactlin::set_max_cells(16);
  CHECK_THROWS_AS(FpMatrix(5, 5), SizingError);
  CHECK_THROWS_AS(rank(big, kP), SizingError);
  CHECK_THROWS_AS(exactlin::kernel_basis(big, kP), SizingError);
  exactlin::set_max_cells(old);
  CHECK_NOTHROW(FpMatrix(5, 5));
}
