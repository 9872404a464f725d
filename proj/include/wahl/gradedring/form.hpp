#ifndef WAHL_GRADEDRING_FORM_HPP
#define WAHL_GRADEDRING_FORM_HPP

#include <cstdint>
#include <vector>

#include "wahl/exactlin/fp.hpp"
#include "wahl/gradedring/monomials.hpp"
#include "wahl/rng.hpp"

namespace wahl::gradedring {

// Homogeneous form: coefficient vector indexed by the ring's degree-d
// monomial list.  The ring and modulus travel with the operations.
struct Form {
  int degree = 0;
  std::vector<std::uint64_t> coeffs;

  bool is_zero() const {
    for (std::uint64_t c : coeffs)
      if (c) return false;
    return true;
  }
};

Form zero_form(const GradedRing& ring, int degree);
Form monomial_form(const GradedRing& ring, int degree, std::uint32_t index);
Form random_form(const GradedRing& ring, exactlin::Prime p, int degree, Rng& rng);

Form add(const GradedRing& ring, exactlin::Prime p, const Form& f, const Form& g);
Form scale(const GradedRing& ring, exactlin::Prime p, const Form& f, std::uint64_t c);
Form multiply(const GradedRing& ring, exactlin::Prime p, const Form& f, const Form& g);

// d/dx_i with the exponent rule; a degree-0 input yields the zero form of
// degree 0.
Form partial_derivative(const GradedRing& ring, exactlin::Prime p, const Form& f,
                        int var);

}  // namespace wahl::gradedring

#endif
