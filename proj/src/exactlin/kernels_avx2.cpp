// AVX2 variants of the elimination kernels.  This translation unit is built
// with -mavx2 and entered only after a runtime CPU check, so the rest of the
// binary stays generic.
//
// Lane layout: four residues per __m256i, one per 64-bit lane.  Residues are
// below 2^31, so the low 32 bits of a lane hold the full value and
// _mm256_mul_epu32 gives exact 62-bit products.  The fixed multiplier f uses
// the same precomputed-quotient reduction as the scalar backend:
//   q = floor(w * x / 2^64)  with  w = floor(f * 2^64 / p),
// where for x < 2^32 the high product splits into 32x32 pieces:
//   q = (w_hi * x + ((w_lo * x) >> 32)) >> 32.

#include "wahl/exactlin/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace wahl::exactlin::kernels {

namespace {

struct VecPrecon {
  __m256i f, wlo, whi, p;
  detail::MulPrecon tail;
};

inline VecPrecon make_vec_precon(std::uint64_t f, std::uint64_t p) {
  const auto c = detail::make_precon(f, p);
  return VecPrecon{_mm256_set1_epi64x(static_cast<long long>(f)),
                   _mm256_set1_epi64x(static_cast<long long>(c.w & 0xffffffffull)),
                   _mm256_set1_epi64x(static_cast<long long>(c.w >> 32)),
                   _mm256_set1_epi64x(static_cast<long long>(p)), c};
}

// (f * x) mod p on four lanes; result lanes in [0, p).
inline __m256i mul_precon4(__m256i x, const VecPrecon& c) {
  const __m256i lo = _mm256_srli_epi64(_mm256_mul_epu32(c.wlo, x), 32);
  const __m256i q =
      _mm256_srli_epi64(_mm256_add_epi64(_mm256_mul_epu32(c.whi, x), lo), 32);
  const __m256i r =
      _mm256_sub_epi64(_mm256_mul_epu32(c.f, x), _mm256_mul_epu32(q, c.p));
  // r < 2p < 2^32, so signed 64-bit compares are safe.
  const __m256i lt = _mm256_cmpgt_epi64(c.p, r);
  return _mm256_blendv_epi8(_mm256_sub_epi64(r, c.p), r, lt);
}

inline __m256i add_mod4(__m256i a, __m256i b, __m256i p) {
  const __m256i s = _mm256_add_epi64(a, b);
  const __m256i lt = _mm256_cmpgt_epi64(p, s);
  return _mm256_blendv_epi8(_mm256_sub_epi64(s, p), s, lt);
}

void axpy_avx2(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
               std::uint64_t f, std::uint64_t p) {
  const VecPrecon c = make_vec_precon(f, p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i out = add_mod4(yv, mul_precon4(xv, c), c.p);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) {
    const std::uint64_t t = y[i] + detail::mul_precon(x[i], c.tail);
    y[i] = t >= p ? t - p : t;
  }
}

void scale_avx2(std::uint64_t* y, std::size_t n, std::uint64_t f,
                std::uint64_t p) {
  const VecPrecon c = make_vec_precon(f, p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), mul_precon4(yv, c));
  }
  for (; i < n; ++i) y[i] = detail::mul_precon(y[i], c.tail);
}

const KernelSet kAvx2{"avx2", axpy_avx2, scale_avx2};

}  // namespace

const KernelSet* avx2_kernels_if_supported() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace wahl::exactlin::kernels

#endif
