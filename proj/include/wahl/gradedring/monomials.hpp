#ifndef WAHL_GRADEDRING_MONOMIALS_HPP
#define WAHL_GRADEDRING_MONOMIALS_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace wahl::gradedring {

// Up to 8 variables with exponents below 256: one packed byte per variable,
// so a monomial is a single 64-bit key.
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxDegree = 255;

using Exponents = std::array<std::uint8_t, kMaxVars>;

inline std::uint64_t pack_key(const Exponents& e) {
  std::uint64_t k = 0;
  for (int i = kMaxVars - 1; i >= 0; --i) k = (k << 8) | e[static_cast<std::size_t>(i)];
  return k;
}

// Monomials of each degree in descending lexicographic order on exponent
// vectors (x0 > x1 > ...), i.e. x0^d first and x_{n-1}^d last.  The listing
// order fixes every matrix layout downstream, so it must never change.
class GradedRing {
 public:
  explicit GradedRing(int nvars);

  int nvars() const { return nvars_; }

  // Number of degree-d monomials: binomial(nvars-1+d, d); 0 for d < 0.
  std::int64_t dim(int d) const;

  // Builds (once) the monomial list and index map for degrees 0..d.
  // Single-threaded; afterwards all lookups are const and shareable.
  void ensure_degree(int d);
  int max_degree() const { return static_cast<int>(bases_.size()) - 1; }

  const std::vector<Exponents>& monomials(int d) const;
  std::uint32_t index_of(int d, const Exponents& e) const;

 private:
  struct DegreeBasis {
    std::vector<Exponents> monomials;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
  };
  int nvars_;
  std::vector<DegreeBasis> bases_;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace wahl::gradedring

#endif
