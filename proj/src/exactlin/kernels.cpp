#include "wahl/exactlin/kernels.hpp"

#include <cstdlib>

#include "kernels_detail.hpp"
#include "wahl/errors.hpp"

namespace wahl::exactlin::kernels {

namespace {

void axpy_reference(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
                    std::uint64_t f, std::uint64_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint64_t>(
        (y[i] + static_cast<unsigned __int128>(f) * x[i]) % p);
  }
}

void scale_reference(std::uint64_t* y, std::size_t n, std::uint64_t f,
                     std::uint64_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(f) * y[i]) % p);
  }
}

void axpy_scalar(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
                 std::uint64_t f, std::uint64_t p) {
  const auto c = detail::make_precon(f, p);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t t = y[i] + detail::mul_precon(x[i], c);
    y[i] = t >= p ? t - p : t;
  }
}

void scale_scalar(std::uint64_t* y, std::size_t n, std::uint64_t f,
                  std::uint64_t p) {
  const auto c = detail::make_precon(f, p);
  for (std::size_t i = 0; i < n; ++i) y[i] = detail::mul_precon(y[i], c);
}

const KernelSet kReference{"reference", axpy_reference, scale_reference};
const KernelSet kScalar{"scalar", axpy_scalar, scale_scalar};

const KernelSet* pick_default(const std::vector<const KernelSet*>& sets) {
  if (const char* env = std::getenv("WAHL_KERNELS")) {
    for (const KernelSet* s : sets)
      if (s->name == std::string(env)) return s;
    // Unknown name: fall through to auto-selection.
  }
  return sets.back();
}

const KernelSet*& active_slot() {
  static const KernelSet* active = pick_default(available_kernels());
  return active;
}

}  // namespace

#if defined(WAHL_HAVE_AVX2_TU)
const KernelSet* avx2_kernels_if_supported();  // kernels_avx2.cpp
#endif
#if defined(WAHL_HAVE_NEON_TU)
const KernelSet* neon_kernels();  // kernels_neon.cpp
#endif

const KernelSet& reference_kernels() { return kReference; }

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&kReference, &kScalar};
#if defined(WAHL_HAVE_AVX2_TU)
  if (const KernelSet* s = avx2_kernels_if_supported()) sets.push_back(s);
#endif
#if defined(WAHL_HAVE_NEON_TU)
  if (const KernelSet* s = neon_kernels()) sets.push_back(s);
#endif
  return sets;
}

const KernelSet& active_kernels() { return *active_slot(); }

void set_active_kernels(const std::string& name) {
  for (const KernelSet* s : available_kernels()) {
    if (name == s->name) {
      active_slot() = s;
      return;
    }
  }
  throw InvalidInputError("unknown or unavailable kernel backend: " + name);
}

}  // namespace wahl::exactlin::kernels
