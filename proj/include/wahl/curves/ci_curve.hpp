#ifndef WAHL_CURVES_CI_CURVE_HPP
#define WAHL_CURVES_CI_CURVE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "wahl/gradedring/quotient.hpp"

namespace wahl::curves {

// Complete-intersection curve type: a curve in P^ambient cut out by forms of
// the given degrees (one fewer than the ambient dimension), with canonical
// bundle O_C(k) for k = sum(degrees) - ambient - 1.
struct CIType {
  int ambient = 0;             // curve lives in P^ambient
  std::vector<int> degrees;    // d_1 <= ... listing as given, each >= 2
  int k = 0;                   // canonical twist, >= 1

  std::int64_t product_of_degrees() const;
  std::int64_t genus() const;  // 1 + (prod d_j) * k / 2
  std::string label() const;   // "2,2,3"
};

// Validates and fills in k; throws InvalidInputError.
CIType make_type(int ambient, std::vector<int> degrees);
CIType parse_type(const std::string& label, int ambient_hint = -1);

// The six complete-intersection types whose generic members are hyperplane
// sections of r-fold re-embedded K3 surfaces of genus g, with that (r, g).
struct StandardType {
  CIType type;
  int r = 0;
  int g = 0;
};
const std::vector<StandardType>& standard_ci_types();

// A realised curve: seeded random generators over one prime, with the graded
// quotient pieces cached for degrees 0..max_cached_degree().  Construction
// verifies dim (R/I)_m against the complete-intersection Hilbert function in
// every cached degree; that check certifies the draw is a regular sequence
// (it fails with probability O(1/p) per draw and triggers a redraw), and it
// is what licenses reading h^0(O_C(m)) off the graded pieces.  Instances are
// immutable afterwards.
class CICurve {
 public:
  const CIType& type() const { return type_; }
  exactlin::Prime prime() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  int k() const { return type_.k; }
  std::int64_t degree() const { return degree_; }
  std::int64_t genus() const { return genus_; }

  const gradedring::GradedRing& ring() const { return *ring_; }
  const std::vector<gradedring::Form>& generators() const { return generators_; }

  int max_cached_degree() const { return static_cast<int>(pieces_.size()) - 1; }
  const gradedring::QuotientPiece& piece(int m) const;

  // h^0(O_C(m)) from the Hilbert series (any m; 0 when negative).
  std::int64_t h0(int m) const;

 private:
  friend CICurve make_ci_curve(const CIType&, exactlin::Prime, std::uint64_t, int,
                               const std::vector<int>&);
  CIType type_;
  exactlin::Prime p_;
  std::uint64_t seed_ = 0;
  std::int64_t degree_ = 0, genus_ = 0;
  std::shared_ptr<gradedring::GradedRing> ring_;
  std::vector<gradedring::Form> generators_;
  std::vector<gradedring::QuotientPiece> pieces_;
};

// Draws generators from the seed, caches pieces for degrees 0..max_degree
// (default 4k, enough for the Gaussian map of the canonical bundle against
// its square) and equips the degrees in reduce_at (default: the four the
// Gaussian assemblies touch) with normal-form tables.  Throws
// DegenerateDrawError after repeated regular-sequence failures.
CICurve make_ci_curve(const CIType& t, exactlin::Prime p, std::uint64_t seed,
                      int max_degree = -1, const std::vector<int>& reduce_at = {});

}  // namespace wahl::curves

#endif
