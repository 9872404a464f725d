#ifndef WAHL_RNG_HPP
#define WAHL_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wahl {

// Deterministic random stream. mt19937_64 output is fixed by the standard,
// and draws below a bound use explicit rejection sampling, so sequences are
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased draw from [0, n).  n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t rem = (0ull - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t v = next();
      if (v <= ~rem) return v % n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Fold several values into one stream seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  for (std::uint64_t v : parts) h = splitmix64(h ^ v);
  return h;
}

}  // namespace wahl

#endif
