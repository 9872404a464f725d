#ifndef WAHL_EXACTLIN_KERNELS_HPP
#define WAHL_EXACTLIN_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wahl::exactlin::kernels {

// Inner loops of the mod-p elimination.  Contracts shared by every backend:
//   * p is an odd prime with 2^30 < p < 2^31,
//   * f and all array entries are reduced residues in [0, p),
//   * outputs are reduced residues, bit-identical across backends,
//   * x and y must not alias in axpy.
//
// axpy:  y[i] <- (y[i] + f * x[i]) mod p        (eliminations pass f = p - c)
// scale: y[i] <- (f * y[i]) mod p               (pivot normalisation)
using AxpyFn = void (*)(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
                        std::uint64_t f, std::uint64_t p);
using ScaleFn = void (*)(std::uint64_t* y, std::size_t n, std::uint64_t f,
                         std::uint64_t p);

struct KernelSet {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

// Plain `% p` loops; the semantic reference the other backends are tested
// against.
const KernelSet& reference_kernels();

// Backends compiled into this binary and usable on this machine, reference
// first.  Selection happens once at startup: the fastest available backend
// wins unless the WAHL_KERNELS environment variable (reference | scalar |
// avx2 | neon) forces one.
std::vector<const KernelSet*> available_kernels();
const KernelSet& active_kernels();
void set_active_kernels(const std::string& name);  // throws InvalidInputError

inline void axpy(std::uint64_t* y, const std::uint64_t* x, std::size_t n,
                 std::uint64_t f, std::uint64_t p) {
  active_kernels().axpy(y, x, n, f, p);
}

inline void scale(std::uint64_t* y, std::size_t n, std::uint64_t f,
                  std::uint64_t p) {
  active_kernels().scale(y, n, f, p);
}

}  // namespace wahl::exactlin::kernels

#endif
