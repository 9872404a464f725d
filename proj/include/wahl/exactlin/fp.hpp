#ifndef WAHL_EXACTLIN_FP_HPP
#define WAHL_EXACTLIN_FP_HPP

#include <cstdint>

#include "wahl/rng.hpp"

namespace wahl::exactlin {

// A verified 31-bit prime modulus: 2^30 < p < 2^31, p odd.  The window keeps
// products of two residues inside 62 bits, which the elimination kernels rely
// on for delayed reduction.
struct Prime {
  std::uint64_t value = 0;
  friend bool operator==(Prime a, Prime b) { return a.value == b.value; }
};

inline constexpr std::uint64_t kPrimeLo = 1ull << 30;
inline constexpr std::uint64_t kPrimeHi = 1ull << 31;

// Deterministic Miller-Rabin (fixed base set, exact for all 64-bit inputs).
bool is_prime_u64(std::uint64_t n);

// Validates the 31-bit window and primality; throws InvalidInputError.
Prime checked_prime(std::uint64_t p);

// Uniform over the primes in (2^30, 2^31), drawn by rejection.
Prime random_prime(Rng& rng);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, Prime p);

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

}  // namespace wahl::exactlin

#endif
