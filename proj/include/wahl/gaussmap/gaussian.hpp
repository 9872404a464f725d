#ifndef WAHL_GAUSSMAP_GAUSSIAN_HPP
#define WAHL_GAUSSMAP_GAUSSIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wahl/curves/ci_curve.hpp"

namespace wahl::gaussmap {

// Gaussian (Wahl) maps on a complete-intersection curve, assembled as
// explicit matrices in the Euler-sequence tuple model.
//
// A pair of forms F (degree a) and G (degree b) yields the tuple
//     ( F dG/dx_i - G dF/dx_i )_{i = 0..ambient},
// each component taken in the quotient piece of degree a+b-1.  Rows of that
// shape, for F, G running over the canonical quotient-basis lifts, span the
// image of the Gaussian map inside sections of the restricted cotangent
// twist.  Projecting onward to sections of omega_C(a+b) kills exactly the
// span of the conormal rows c * dQ_j (a theorem for complete intersections:
// the conormal bundle splits as a sum of line bundles O(-d_j), so all its
// twisted sections are polynomial).  Hence
//     dim Im Phi = relative_rank(gaussian rows, conormal rows)
// and corank = h^0(O_C(k + a + b)) - dim Im Phi.
//
// Lift choices do not matter: replacing F by F + q with q in the ideal
// perturbs a row by an element of the conormal span.  For any non-CI ideal
// these conormal rows could span a proper subspace of the true kernel, and
// the result would only bound the corank from below; everything here is
// CI-only, where equality holds.

// Raw tuple over the ring (no ideal): ambient+1 forms of degree
// deg F + deg G - 1.
std::vector<gradedring::Form> gaussian_tuple_forms(
    const gradedring::GradedRing& ring, exactlin::Prime p,
    const gradedring::Form& F, const gradedring::Form& G);

// Tuple reduced on the curve, concatenated standard coordinates in
// ((R/I)_{a+b-1})^{ambient+1}.
std::vector<std::uint64_t> gaussian_tuple(const curves::CICurve& curve,
                                          const gradedring::Form& F,
                                          const gradedring::Form& G);

// Rows spanning the image of +_j H^0(O_C(m - d_j)) in the tuple space:
// one row c * (dQ_j/dx_i)_i per generator Q_j and standard monomial c of
// degree m - d_j.  Empty when m is below every generator degree.
exactlin::FpMatrix conormal_rows(const curves::CICurve& curve, int m);

// Wedge-mode rows: tuples of standard-monomial pairs (i < j) in degree a = b.
exactlin::FpMatrix wedge_rows(const curves::CICurve& curve, int a);

// Same rows but with each basis lift perturbed by a random ideal element;
// used to exercise lift independence.
exactlin::FpMatrix wedge_rows_perturbed(const curves::CICurve& curve, int a,
                                        Rng& rng);

// Random element of the degree-a ideal piece (zero when that piece is 0).
gradedring::Form random_ideal_element(const curves::CICurve& curve, int a,
                                      Rng& rng);

// Pair-mode rows: a basis of Ker{ (R/I)_a x (R/I)_b -> (R/I)_{a+b} } mapped
// through the tuple construction.
exactlin::FpMatrix pair_rows(const curves::CICurve& curve, int a, int b);

struct RankResult {
  std::size_t rank = 0;        // dim Im Phi
  std::int64_t corank = 0;     // target_dim - rank
  std::int64_t target_dim = 0; // h^0(O_C(k + a + b))
};

// Single-prime corank on an already built curve; wedge mode when a == b.
RankResult corank_once(const curves::CICurve& curve, int a, int b);

inline constexpr std::uint64_t kDefaultSeed = 271828;

struct TwoPrimeConfig {
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::uint64_t> primes;  // explicit primes (at most 2)
  int retries = 3;
};

// Corank with provenance: the primes that agreed, the seed, the retry count
// and which path produced the number.
struct CorankReport {
  curves::CIType type;
  int a = 0, b = 0;
  std::string mode;  // "wedge" | "pair"
  std::size_t rank = 0;
  std::int64_t corank = 0;
  std::int64_t target_dim = 0;
  std::vector<std::uint64_t> primes;  // the agreeing pair, in order tried
  std::uint64_t seed = 0;
  int retries = 0;  // extra primes drawn beyond the first two
  std::string path = "matrix";
};

// Ranks are computed at two independent primes and must agree; a rank mod p
// can only drop below the characteristic-zero rank, so agreement at random
// 31-bit primes pins the corank.  Disagreement draws replacement primes, at
// most `retries` of them, then raises InstabilityError.
CorankReport corank_wedge(const curves::CIType& t, const TwoPrimeConfig& cfg = {});
CorankReport corank_pair(const curves::CIType& t, int a, int b,
                         const TwoPrimeConfig& cfg = {});

// Closed form sum_j h^0(O_C(d_j - k)), valid when k >= 2 and no generator
// degree equals 2k; otherwise throws FormulaInapplicableError and the matrix
// path must be used.
std::int64_t corank_formula(const curves::CIType& t);

// True when every row contracts to zero against the Euler vector field:
// sum_i x_i * row_i == 0 in (R/I)_m.  Holds for every Gaussian row, in wedge
// mode identically and in pair mode because the pair lies in the
// multiplication kernel; it pins the rows inside the twisted cotangent
// sections.
bool rows_satisfy_euler(const curves::CICurve& curve,
                        const exactlin::FpMatrix& rows, int m);

}  // namespace wahl::gaussmap

#endif
