#ifndef WAHL_LEDGER_TABLES_HPP
#define WAHL_LEDGER_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wahl::ledger {

inline constexpr int kDatasetVersion = 1;

// A quantity from the classification literature.  Some slots are only
// published as upper bounds; where a value can nevertheless be pinned down
// by inverting a parameter count, we store that value marked "derived" and
// never present it as a direct citation.
enum class Provenance { kLiterature, kDerived, kTrivial };
std::string provenance_name(Provenance p);

struct BoundedValue {
  std::int64_t value = 0;
  bool is_bound = false;  // published as "<= value"
  Provenance provenance = Provenance::kLiterature;
};

// One row of the corank table for curve sections C_{r,g} of r-fold
// re-embedded K3 surfaces of genus g: corank of the canonical Gaussian map,
// h^0(N_C(-2)), and (where threefolds exist) the cone bound on
// h^0 of the normal bundle of the cone over the surface.  g_max absent
// means "this g and larger".  Genus-2 rows depend on the curve class, hence
// the curve_class discriminator.
struct CorankTableRow {
  int r_min = 0;
  std::optional<int> r_max;  // absent: this r and larger
  int g_min = 0;
  std::optional<int> g_max;
  std::int64_t corank = 0;
  std::optional<BoundedValue> h0n2;      // empty cell on the (2,2) row
  std::optional<std::int64_t> cone_bound;
  std::string surface_hypothesis;
  std::string curve_hypothesis;  // "any smooth" | "general" | "special"
};

const std::vector<CorankTableRow>& corank_table();

// Matching row for a concrete (r, g); rows for "special" curves are skipped
// (the generic member is what the toolkit models).  Absent for r = 1, g < 6.
std::optional<CorankTableRow> corank_row(int r, int g);

// Families of index-r Fano threefolds of the principal series with
// anticanonical curve sections of genus g.
struct FanoExample {
  int r, g;
  std::int64_t degree;      // cube of the primitive class
  std::int64_t big_n;       // N(r, g) = 1 + r^2 (g - 1)
  std::int64_t parameters;  // dimension of the family
  std::string description;
};
const std::vector<FanoExample>& fano_examples();
std::optional<FanoExample> fano_example(int r, int g);

// Families of higher-dimensional varieties with canonical curve sections;
// n_max is the largest dimension realised, smaller ones are its linear
// sections.
struct MukaiExample {
  int r, g;
  int n_max;
  std::int64_t parameters;  // at dimension n_max
  std::string description;
};
const std::vector<MukaiExample>& mukai_examples();
std::optional<MukaiExample> mukai_example(int r, int g);

}  // namespace wahl::ledger

#endif
