// Micro-benchmark for the elimination kernels and a representative
// echelon reduction.  Usage: wahl_bench [elements] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "wahl/exactlin/elimination.hpp"
#include "wahl/exactlin/kernels.hpp"
#include "wahl/rng.hpp"

using namespace wahl;
namespace kernels = exactlin::kernels;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1 << 16;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 2000;
  const std::uint64_t p = 2147483629ull;

  Rng rng(1);
  std::vector<std::uint64_t> x(n), y0(n);
  for (auto& v : x) v = rng.below(p);
  for (auto& v : y0) v = rng.below(p);
  const std::uint64_t f = rng.below(p - 1) + 1;

  std::printf("axpy mod p: %zu elements, %d reps\n", n, reps);
  for (const kernels::KernelSet* s : kernels::available_kernels()) {
    std::vector<std::uint64_t> y = y0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) s->axpy(y.data(), x.data(), n, f, p);
    const double dt = seconds_since(t0);
    std::printf("  %-10s %8.1f Melem/s\n", s->name,
                static_cast<double>(n) * reps / dt / 1e6);
  }

  const std::size_t dim = 600;
  exactlin::FpMatrix m(dim, dim + 40);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.below(p);
  std::printf("rank of a dense %zux%zu matrix\n", m.rows(), m.cols());
  const std::string active = kernels::active_kernels().name;
  for (const kernels::KernelSet* s : kernels::available_kernels()) {
    kernels::set_active_kernels(s->name);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t rk = exactlin::rank(m, exactlin::Prime{p});
    const double dt = seconds_since(t0);
    std::printf("  %-10s %7.1f ms  (rank %zu)\n", s->name, dt * 1e3, rk);
  }
  kernels::set_active_kernels(active);
  return 0;
}
