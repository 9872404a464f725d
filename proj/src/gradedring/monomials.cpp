#include "wahl/gradedring/monomials.hpp"

#include <string>

#include "wahl/errors.hpp"

namespace wahl::gradedring {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GradedRing::GradedRing(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw InvalidInputError("variable count " + std::to_string(nvars) +
                            " outside 1.." + std::to_string(kMaxVars));
}

std::int64_t GradedRing::dim(int d) const {
  if (d < 0) return 0;
  return binomial(nvars_ - 1 + d, d);
}

namespace {

void enumerate(int nvars, int var, int remaining, Exponents& e,
               std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(e);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(a);
    enumerate(nvars, var + 1, remaining - a, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

void GradedRing::ensure_degree(int d) {
  if (d > kMaxDegree)
    throw SizingError("degree " + std::to_string(d) + " exceeds limit " +
                      std::to_string(kMaxDegree));
  while (static_cast<int>(bases_.size()) <= d) {
    const int deg = static_cast<int>(bases_.size());
    DegreeBasis b;
    b.monomials.reserve(static_cast<std::size_t>(dim(deg)));
    Exponents e{};
    enumerate(nvars_, 0, deg, e, b.monomials);
    b.index.reserve(b.monomials.size() * 2);
    for (std::uint32_t i = 0; i < b.monomials.size(); ++i)
      b.index.emplace(pack_key(b.monomials[i]), i);
    bases_.push_back(std::move(b));
  }
}

const std::vector<Exponents>& GradedRing::monomials(int d) const {
  return bases_.at(static_cast<std::size_t>(d)).monomials;
}

std::uint32_t GradedRing::index_of(int d, const Exponents& e) const {
  return bases_.at(static_cast<std::size_t>(d)).index.at(pack_key(e));
}

}  // namespace wahl::gradedring
