#ifndef WAHL_GRADEDRING_QUOTIENT_HPP
#define WAHL_GRADEDRING_QUOTIENT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wahl/exactlin/elimination.hpp"
#include "wahl/gradedring/form.hpp"

namespace wahl::gradedring {

// Degree-m slice of R/I for a homogeneous ideal I: a row-echelon basis of
// I_m and the complementary standard monomials, which serve as the canonical
// basis (and canonical lifts) of the quotient piece.  When built with
// reduction support, the echelon is fully reduced and each pivot monomial
// carries its normal form in standard-monomial coordinates, so reducing a
// form is a single linear pass over its terms.
struct QuotientPiece {
  int degree = 0;
  std::size_t ring_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;

  exactlin::FpMatrix echelon;               // ideal_dim x ring_dim, monic leads
  std::vector<std::uint32_t> pivot_cols;    // increasing
  std::vector<std::uint32_t> standard_cols; // increasing
  std::vector<std::int32_t> std_rank;       // col -> index into standard_cols, -1 on pivots
  std::vector<std::int32_t> pivot_rank;     // col -> index into pivot_cols, -1 on standards

  bool has_reduction = false;
  // Normal forms of pivot monomials, standard coordinates; row i matches
  // pivot_cols[i].  Present only when has_reduction.
  std::vector<std::vector<std::uint64_t>> nf_rows;

  // acc += c * NF(monomial #idx), acc sized quotient_dim.
  void accumulate_nf(exactlin::Prime p, std::uint32_t idx, std::uint64_t c,
                     std::span<std::uint64_t> acc) const;

  // Standard coordinates of the class of f (deg f == degree).
  std::vector<std::uint64_t> reduce(exactlin::Prime p, const Form& f) const;
};

// Echelonises span{ monomial * Q : Q in generators, total degree m }.
// Generators of degree > m contribute nothing.  Ensures the ring's monomial
// caches up to degree m.
QuotientPiece ideal_piece(GradedRing& ring, exactlin::Prime p,
                          std::span<const Form> generators, int m,
                          bool with_reduction);

// Coefficient of t^m in prod_j (1 - t^{d_j}) / (1 - t)^{g+1}; 0 for m < 0.
// For a regular sequence this is dim (R/I)_m, i.e. h^0(O_C(m)) on the
// arithmetically Cohen-Macaulay curve cut out by the generators.
std::int64_t hilbert_ci(int ambient_dim, std::span<const int> degrees, int m);

}  // namespace wahl::gradedring

#endif
