#include "wahl/exactlin/fp.hpp"

#include <string>

#include "wahl/errors.hpp"

namespace wahl::exactlin {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, Prime p) {
  return powmod(a % p.value, p.value - 2, p.value);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality exactly for every n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Prime checked_prime(std::uint64_t p) {
  if (p <= kPrimeLo || p >= kPrimeHi)
    throw InvalidInputError("prime " + std::to_string(p) + " outside (2^30, 2^31)");
  if (!is_prime_u64(p))
    throw InvalidInputError(std::to_string(p) + " is not prime");
  return Prime{p};
}

Prime random_prime(Rng& rng) {
  for (;;) {
    const std::uint64_t cand = kPrimeLo | rng.below(kPrimeLo) | 1ull;
    if (cand > kPrimeLo && is_prime_u64(cand)) return Prime{cand};
  }
}

}  // namespace wahl::exactlin
