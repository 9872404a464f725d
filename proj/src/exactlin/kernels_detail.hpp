#ifndef WAHL_EXACTLIN_KERNELS_DETAIL_HPP
#define WAHL_EXACTLIN_KERNELS_DETAIL_HPP

#include <cstdint>

namespace wahl::exactlin::kernels::detail {

// Precomputed-quotient multiplication by a fixed f < p (Shoup).  One 128-bit
// division up front, then each element costs three 64-bit multiplies and a
// correction, no division.  Requires f < p < 2^31 and x < p.
struct MulPrecon {
  std::uint64_t f;
  std::uint64_t w;  // floor(f * 2^64 / p)
  std::uint64_t p;
};

inline MulPrecon make_precon(std::uint64_t f, std::uint64_t p) {
  const auto w = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(f) << 64) / p);
  return MulPrecon{f, w, p};
}

// (f * x) mod p with the quotient approximated from above; the remainder
// lands in [0, 2p) and one conditional subtract finishes it.
inline std::uint64_t mul_precon(std::uint64_t x, const MulPrecon& c) {
  const auto q = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(c.w) * x) >> 64);
  std::uint64_t r = c.f * x - q * c.p;
  if (r >= c.p) r -= c.p;
  return r;
}

}  // namespace wahl::exactlin::kernels::detail

#endif
