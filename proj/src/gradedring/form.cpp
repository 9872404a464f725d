#include "wahl/gradedring/form.hpp"

#include "wahl/errors.hpp"

namespace wahl::gradedring {

using exactlin::Prime;

Form zero_form(const GradedRing& ring, int degree) {
  return Form{degree, std::vector<std::uint64_t>(
                          static_cast<std::size_t>(ring.dim(degree)), 0)};
}

Form monomial_form(const GradedRing& ring, int degree, std::uint32_t index) {
  Form f = zero_form(ring, degree);
  f.coeffs.at(index) = 1;
  return f;
}

Form random_form(const GradedRing& ring, Prime p, int degree, Rng& rng) {
  Form f = zero_form(ring, degree);
  for (auto& c : f.coeffs) c = rng.below(p.value);
  return f;
}

Form add(const GradedRing& ring, Prime p, const Form& f, const Form& g) {
  if (f.degree != g.degree) throw ShapeError("add: degree mismatch");
  Form out = zero_form(ring, f.degree);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = exactlin::addmod(f.coeffs[i], g.coeffs[i], p.value);
  return out;
}

Form scale(const GradedRing& ring, Prime p, const Form& f, std::uint64_t c) {
  Form out = zero_form(ring, f.degree);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = exactlin::mulmod(f.coeffs[i], c, p.value);
  return out;
}

Form multiply(const GradedRing& ring, Prime p, const Form& f, const Form& g) {
  Form out = zero_form(ring, f.degree + g.degree);
  const auto& fm = ring.monomials(f.degree);
  const auto& gm = ring.monomials(g.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (!f.coeffs[i]) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (!g.coeffs[j]) continue;
      Exponents e = fm[i];
      for (int v = 0; v < ring.nvars(); ++v)
        e[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(e[static_cast<std::size_t>(v)] +
                                      gm[j][static_cast<std::size_t>(v)]);
      const std::uint32_t idx = ring.index_of(out.degree, e);
      out.coeffs[idx] = exactlin::addmod(
          out.coeffs[idx], exactlin::mulmod(f.coeffs[i], g.coeffs[j], p.value),
          p.value);
    }
  }
  return out;
}

Form partial_derivative(const GradedRing& ring, Prime p, const Form& f, int var) {
  if (f.degree == 0) return zero_form(ring, 0);
  Form out = zero_form(ring, f.degree - 1);
  const auto& fm = ring.monomials(f.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const std::uint8_t a = fm[i][static_cast<std::size_t>(var)];
    if (!f.coeffs[i] || a == 0) continue;
    Exponents e = fm[i];
    e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(a - 1);
    const std::uint32_t idx = ring.index_of(out.degree, e);
    out.coeffs[idx] = exactlin::addmod(
        out.coeffs[idx], exactlin::mulmod(f.coeffs[i], a, p.value), p.value);
  }
  return out;
}

}  // namespace wahl::gradedring
