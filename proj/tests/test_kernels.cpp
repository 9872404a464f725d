#include <vector>

#include "doctest.h"
#include "wahl/errors.hpp"
#include "wahl/exactlin/fp.hpp"
#include "wahl/exactlin/kernels.hpp"
#include "wahl/rng.hpp"

using namespace wahl;
namespace kernels = exactlin::kernels;

TEST_CASE("every backend matches the reference kernels exactly") {
  const auto sets = kernels::available_kernels();
  REQUIRE(!sets.empty());
  CHECK(std::string(sets.front()->name) == "reference");

  const std::uint64_t primes[] = {2147483629ull, 1073741827ull, 2147483647ull};
  const std::size_t lengths[] = {0, 1, 3, 4, 5, 7, 8, 31, 64, 1000};

  Rng rng(123);
  for (std::uint64_t p : primes) {
    for (std::size_t n : lengths) {
      std::vector<std::uint64_t> x(n), y(n);
      for (auto& v : x) v = rng.below(p);
      for (auto& v : y) v = rng.below(p);
      // Hit the boundary values too.
      if (n > 1) x[0] = p - 1, y[0] = p - 1;

      for (std::uint64_t f : {std::uint64_t(0), std::uint64_t(1), p - 1,
                              rng.below(p)}) {
        std::vector<std::uint64_t> want_axpy = y, want_scale = y;
        kernels::reference_kernels().axpy(want_axpy.data(), x.data(), n, f, p);
        kernels::reference_kernels().scale(want_scale.data(), n, f, p);
        for (const kernels::KernelSet* s : sets) {
          std::vector<std::uint64_t> got = y;
          s->axpy(got.data(), x.data(), n, f, p);
          CHECK_MESSAGE(got == want_axpy, s->name << " axpy n=" << n);
          got = y;
          s->scale(got.data(), n, f, p);
          CHECK_MESSAGE(got == want_scale, s->name << " scale n=" << n);
        }
      }
    }
  }
}

TEST_CASE("backend selection") {
  const std::string before = kernels::active_kernels().name;
  kernels::set_active_kernels("reference");
  CHECK(std::string(kernels::active_kernels().name) == "reference");
  kernels::set_active_kernels("scalar");
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  CHECK_THROWS_AS(kernels::set_active_kernels("sse99"), InvalidInputError);
  kernels::set_active_kernels(before);
}
