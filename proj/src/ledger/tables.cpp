#include "wahl/ledger/tables.hpp"

namespace wahl::ledger {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kLiterature: return "literature";
    case Provenance::kDerived: return "derived";
    case Provenance::kTrivial: return "trivial";
  }
  return "unknown";
}

namespace {

constexpr auto kLit = Provenance::kLiterature;
constexpr auto kDer = Provenance::kDerived;

std::optional<int> up_to(int g) { return g; }
constexpr std::optional<int> kOpen = std::nullopt;

BoundedValue val(std::int64_t v) { return BoundedValue{v, false, kLit}; }
// Published as a bound; the stored value is recovered from the parameter
// counts, so it carries derived provenance.
BoundedValue bound_derived(std::int64_t v) { return BoundedValue{v, true, kDer}; }

}  // namespace

const std::vector<CorankTableRow>& corank_table() {
  static const std::vector<CorankTableRow> rows = {
      {1, up_to(1), 6, up_to(6), 10, bound_derived(1), 85, "general", "general"},
      {1, up_to(1), 7, up_to(7), 9, val(0), 98, "general", "general"},
      {1, up_to(1), 8, up_to(8), 7, val(0), 114, "general", "general"},
      {1, up_to(1), 9, up_to(9), 5, val(0), 132, "general", "general"},
      {1, up_to(1), 10, up_to(10), 4, val(0), 153, "general", "general"},
      {1, up_to(1), 11, up_to(11), 1, val(0), std::nullopt, "general", "general"},
      {1, up_to(1), 12, up_to(12), 2, val(0), 201, "general", "general"},
      {1, up_to(1), 13, up_to(16), 1, val(0), std::nullopt, "general", "general"},
      {1, up_to(1), 17, kOpen, 1, val(0), std::nullopt, "general", "any smooth"},
      {2, up_to(2), 2, up_to(2), 13, std::nullopt, std::nullopt, "any smooth", "any smooth"},
      {2, up_to(2), 3, up_to(3), 10, bound_derived(1), 139, "any smooth", "any smooth"},
      {2, up_to(2), 4, up_to(4), 7, val(0), 234, "any smooth", "any smooth"},
      {2, up_to(2), 5, up_to(5), 4, val(0), 363, "non trigonal", "any smooth"},
      {2, up_to(2), 6, up_to(6), 2, val(0), 525, "non trigonal", "any smooth"},
      {2, up_to(2), 7, kOpen, 1, val(0), std::nullopt, "general", "any smooth"},
      {3, up_to(3), 2, up_to(2), 10, val(1), std::nullopt, "smooth ramif. div.", "general"},
      {3, up_to(3), 2, up_to(2), 18, val(1), std::nullopt, "smooth ramif. div.", "special"},
      {3, up_to(3), 3, up_to(3), 5, val(0), std::nullopt, "any smooth", "any smooth"},
      {3, up_to(3), 4, up_to(4), 2, val(0), 889, "any smooth", "any smooth"},
      {3, up_to(3), 5, kOpen, 1, val(0), std::nullopt, "non trigonal", "any smooth"},
      {4, up_to(4), 2, up_to(2), 1, val(0), std::nullopt, "smooth ramif. div.", "any smooth"},
      {4, up_to(4), 3, up_to(3), 2, val(0), 1209, "any smooth", "any smooth"},
      {4, up_to(4), 4, kOpen, 1, val(0), std::nullopt, "any smooth", "any smooth"},
      {5, kOpen, 2, up_to(2), 1, val(0), std::nullopt, "smooth ramif. div.", "any smooth"},
      {5, kOpen, 3, kOpen, 1, val(0), std::nullopt, "any smooth", "any smooth"},
  };
  return rows;
}

std::optional<CorankTableRow> corank_row(int r, int g) {
  for (const CorankTableRow& row : corank_table()) {
    if (row.curve_hypothesis == "special") continue;
    const bool r_ok = r >= row.r_min && (!row.r_max || r <= *row.r_max);
    const bool g_ok = g >= row.g_min && (!row.g_max || g <= *row.g_max);
    if (r_ok && g_ok) return row;
  }
  return std::nullopt;
}

const std::vector<FanoExample>& fano_examples() {
  static const std::vector<FanoExample> rows = {
      {4, 3, 1, 33, 1209, "projective 3-space"},
      {3, 4, 2, 28, 889, "quadric in P^4"},
      {2, 3, 2, 9, 139, "double cover of P^3 ramified along a quartic"},
      {2, 4, 3, 13, 234, "cubic in P^4"},
      {2, 5, 4, 17, 363, "complete intersection of two quadrics in P^5"},
      {2, 6, 5, 21, 525, "G(1,4) cap P^6 in P^9"},
  };
  return rows;
}

std::optional<FanoExample> fano_example(int r, int g) {
  for (const FanoExample& e : fano_examples())
    if (e.r == r && e.g == g) return e;
  return std::nullopt;
}

const std::vector<MukaiExample>& mukai_examples() {
  static const std::vector<MukaiExample> rows = {
      {1, 6, 6, 145, "cone over G(1,4) cap quadric in P^10"},
      {1, 7, 10, 210, "SO(10)/P in P^15"},
      {1, 8, 8, 189, "G(1,5) in P^14"},
      {1, 9, 6, 174, "Sp(6)/P in P^13"},
      {1, 10, 5, 181, "G2/P in P^13"},
      {2, 5, 5, 405, "second Veronese of P^5 in P^20"},
  };
  return rows;
}

std::optional<MukaiExample> mukai_example(int r, int g) {
  for (const MukaiExample& e : mukai_examples())
    if (e.r == r && e.g == g) return e;
  return std::nullopt;
}

}  // namespace wahl::ledger
