#include "wahl/curves/ci_curve.hpp"

#include <set>
#include <sstream>
#include <string>

#include "wahl/errors.hpp"

namespace wahl::curves {

using exactlin::Prime;
using gradedring::Form;
using gradedring::GradedRing;

std::int64_t CIType::product_of_degrees() const {
  std::int64_t prod = 1;
  for (int d : degrees) prod *= d;
  return prod;
}

std::int64_t CIType::genus() const {
  // deg(omega) = k * deg(C) = 2g - 2; the product k * prod(d_j) is always
  // even, so this is exact integer arithmetic.
  return 1 + product_of_degrees() * k / 2;
}

std::string CIType::label() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ',';
    os << degrees[i];
  }
  return os.str();
}

CIType make_type(int ambient, std::vector<int> degrees) {
  if (ambient < 2 || ambient + 1 > gradedring::kMaxVars)
    throw InvalidInputError("ambient dimension " + std::to_string(ambient) +
                            " outside 2.." +
                            std::to_string(gradedring::kMaxVars - 1));
  if (static_cast<int>(degrees.size()) != ambient - 1)
    throw InvalidInputError("a curve in P^" + std::to_string(ambient) +
                            " needs exactly " + std::to_string(ambient - 1) +
                            " generator degrees");
  int sum = 0;
  for (int d : degrees) {
    if (d < 2) throw InvalidInputError("generator degrees must be >= 2");
    if (d > 100) throw InvalidInputError("generator degrees must be <= 100");
    sum += d;
  }
  CIType t;
  t.ambient = ambient;
  t.degrees = std::move(degrees);
  t.k = sum - ambient - 1;
  if (t.k < 1)
    throw InvalidInputError("type (" + t.label() +
                            ") has non-positive canonical twist");
  return t;
}

CIType parse_type(const std::string& label, int ambient_hint) {
  std::vector<int> degrees;
  std::stringstream ss(label);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      degrees.push_back(d);
    } catch (const std::exception&) {
      throw InvalidInputError("bad degree tuple: " + label);
    }
  }
  if (degrees.empty()) throw InvalidInputError("empty degree tuple");
  const int ambient =
      ambient_hint > 0 ? ambient_hint : static_cast<int>(degrees.size()) + 1;
  return make_type(ambient, std::move(degrees));
}

const std::vector<StandardType>& standard_ci_types() {
  static const std::vector<StandardType> types = [] {
    std::vector<StandardType> v;
    v.push_back({make_type(5, {2, 2, 2, 2}), 2, 5});
    v.push_back({make_type(4, {2, 2, 3}), 2, 4});
    v.push_back({make_type(4, {2, 3, 3}), 3, 4});
    v.push_back({make_type(3, {2, 4}), 2, 3});
    v.push_back({make_type(3, {3, 4}), 3, 3});
    v.push_back({make_type(3, {4, 4}), 4, 3});
    return v;
  }();
  return types;
}

const gradedring::QuotientPiece& CICurve::piece(int m) const {
  if (m < 0 || m > max_cached_degree())
    throw ShapeError("degree " + std::to_string(m) + " not cached (0.." +
                     std::to_string(max_cached_degree()) + ")");
  return pieces_[static_cast<std::size_t>(m)];
}

std::int64_t CICurve::h0(int m) const {
  return gradedring::hilbert_ci(type_.ambient, type_.degrees, m);
}

CICurve make_ci_curve(const CIType& t, Prime p, std::uint64_t seed,
                      int max_degree, const std::vector<int>& reduce_at) {
  const int cap = max_degree >= 0 ? max_degree : 4 * t.k;
  std::set<int> reduce;
  if (reduce_at.empty()) {
    for (int m : {2 * t.k - 1, 2 * t.k, 3 * t.k - 1, 3 * t.k})
      if (m >= 0 && m <= cap) reduce.insert(m);
  } else {
    for (int m : reduce_at)
      if (m >= 0 && m <= cap) reduce.insert(m);
  }

  CICurve curve;
  curve.type_ = t;
  curve.p_ = p;
  curve.seed_ = seed;
  curve.degree_ = t.product_of_degrees();
  curve.genus_ = t.genus();
  curve.ring_ = std::make_shared<GradedRing>(t.ambient + 1);
  curve.ring_->ensure_degree(cap);

  std::uint64_t h = mix_seed({seed, p.value, static_cast<std::uint64_t>(t.ambient)});
  for (int d : t.degrees) h = splitmix64(h ^ static_cast<std::uint64_t>(d));
  Rng rng(h);

  constexpr int kDrawAttempts = 4;
  for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
    std::vector<Form> gens;
    gens.reserve(t.degrees.size());
    for (int d : t.degrees)
      gens.push_back(gradedring::random_form(*curve.ring_, p, d, rng));

    std::vector<gradedring::QuotientPiece> pieces;
    pieces.reserve(static_cast<std::size_t>(cap) + 1);
    bool regular = true;
    for (int m = 0; m <= cap && regular; ++m) {
      auto piece = gradedring::ideal_piece(*curve.ring_, p, gens, m,
                                           reduce.count(m) > 0);
      regular = static_cast<std::int64_t>(piece.quotient_dim) ==
                gradedring::hilbert_ci(t.ambient, t.degrees, m);
      pieces.push_back(std::move(piece));
    }
    if (!regular) continue;

    curve.generators_ = std::move(gens);
    curve.pieces_ = std::move(pieces);
    if (static_cast<std::int64_t>(curve.piece(t.k).quotient_dim) != curve.genus_)
      throw std::logic_error("h^0(omega) disagrees with the genus formula");
    return curve;
  }
  throw DegenerateDrawError("no regular sequence of type (" + t.label() +
                            ") after " + std::to_string(kDrawAttempts) +
                            " draws at p=" + std::to_string(p.value));
}

}  // namespace wahl::curves
