// NEON variants of the elimination kernels (aarch64).  Same reduction scheme
// as the AVX2 backend, two 64-bit lanes per vector; 32x32->64 products come
// from vmull_u32, legal because residues stay below 2^31.

#include "wahl/exactlin/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace wahl::exactlin::kernels {

namespace {

struct VecPrecon {
  uint32x2_t f, wlo, whi, p32;
  uint64x2_t p;
  detail::MulPrecon tail;
};

inline VecPrecon make_vec_precon(std::uint64_t f, std::uint64_t p) {
  const auto c = detail::make_precon(f, p);
  return VecPrecon{vdup_n_u32(static_cast<std::uint32_t>(f)),
                   vdup_n_u32(static_cast<std::uint32_t>(c.w & 0xffffffffull)),
                   vdup_n_u32(static_cast<std::uint32_t>(c.w >> 32)),
                   vdup_n_u32(static_cast<std::uint32_t>(p)),
                   vdupq_n_u64(p), c};
}

inline uint64x2_t mul_precon2(uint64x2_t x, const VecPrecon& c) {
  const uint32x2_t xlo = vmovn_u64(x);  // residues < 2^31: exact narrow
  const uint64x2_t lo = vshrq_n_u64(vmull_u32(c.wlo, xlo), 32);
  const uint64x2_t q =
      vshrq_n_u64(vaddq_u64(vmull_u32(c.whi, xlo), lo), 32);
  const uint64x2_t r =
      vsubq_u64(vmull_u32(c.f, xlo), vmull_u32(vmovn_u64(q), c.p32));
  const uint64x2_t ge = vcgeq_u64(r, c.p);
  return vsubq_u64(r, vandq_u64(ge, c.p));
}

inline uint64x2_t add_mod2(uint64x2_t a, uint64x2_t b, uint64x2_t p) {
  const uint64x2_t s = vaddq_u64(a, b);
  const uint64x2_t ge = vcgeq_u64(s, p);
  return vsubq_u64(s, vandq_u64(ge, p));
}

void axpy_neon(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
               std::uint64_t f, std::uint64_t p) {
  const VecPrecon c = make_vec_precon(f, p);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t xv = vld1q_u64(x + i);
    const uint64x2_t yv = vld1q_u64(y + i);
    vst1q_u64(y + i, add_mod2(yv, mul_precon2(xv, c), c.p));
  }
  for (; i < n; ++i) {
    const std::uint64_t t = y[i] + detail::mul_precon(x[i], c.tail);
    y[i] = t >= p ? t - p : t;
  }
}

void scale_neon(std::uint64_t* y, std::size_t n, std::uint64_t f,
                std::uint64_t p) {
  const VecPrecon c = make_vec_precon(f, p);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(y + i, mul_precon2(vld1q_u64(y + i), c));
  }
  for (; i < n; ++i) y[i] = detail::mul_precon(y[i], c.tail);
}

const KernelSet kNeon{"neon", axpy_neon, scale_neon};

}  // namespace

const KernelSet* neon_kernels() { return &kNeon; }

}  // namespace wahl::exactlin::kernels

#endif
