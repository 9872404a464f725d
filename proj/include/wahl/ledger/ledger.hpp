#ifndef WAHL_LEDGER_LEDGER_HPP
#define WAHL_LEDGER_LEDGER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wahl/ledger/tables.hpp"

namespace wahl::ledger {

// N(r, g) = 1 + r^2 (g - 1): the dimension of the projective space carrying
// the re-embedded K3 surface, and the genus of its curve section.
std::int64_t n_rg(int r, int g);

// Dimension of the K3 Hilbert-scheme component: 18 + (N + 1)^2.
std::int64_t k3_hilbert_dim(std::int64_t big_n);

// Parameter count bounding the Hilbert-scheme tangent space at the cone for
// threefolds: N^2 + 3N + 19 + corank + 2 h0n2.
std::int64_t fano_bound(int r, int g, std::int64_t corank, std::int64_t h0n2);

// n-fold generalisation: N^2 + nN + 19 + (n-2) corank
// + (3n - 7 + C(n-3, 2)) h0n2.  Reduces to fano_bound at n = 3.
std::int64_t mukai_bound(int n, int r, int g, std::int64_t corank,
                         std::int64_t h0n2);

// Smallest k such that a canonical curve of genus N in P^{N-1} cannot be cut
// out by a non-cone variety k planes up: with h^0(N_C(-1)) = N + corank the
// criterion h^0(N_C(-1)) <= (N - 1) + k closes exactly at k = corank + 1,
// provided h^0(N_C(-2)) = 0; otherwise the criterion is silent.
struct ZakVerdict {
  bool conclusive = false;
  std::int64_t min_non_extendable = 0;  // meaningful when conclusive
  std::string text;                     // "not k-extendable for k >= v" | "inconclusive"
};
ZakVerdict zak_verdict(std::int64_t big_n, std::int64_t corank, std::int64_t h0n2);

struct LedgerEntry {
  int r = 0, g = 0;
  std::optional<int> n;
  std::int64_t big_n = 0;
  std::optional<BoundedValue> corank;
  std::optional<BoundedValue> h0n2;
  std::optional<std::int64_t> f_value;      // threefold parameter bound
  std::optional<std::int64_t> bound_value;  // n-fold bound; equals f at n = 3
  std::int64_t hilbert_k3_dim = 0;
  std::optional<ZakVerdict> zak;
  std::string verdict;
  std::vector<std::string> annotations;  // hypotheses and caveats
};

// Assembles the stored constants, formula values and the classification
// verdict for (r, g) and dimension n (3 when absent).  Constants come either
// from the stored tables or, via the caller, from a matrix computation; the
// provenance travels in the BoundedValue slots.  Unknown (r, g) yield the
// verdict "outside classified range" rather than an error.
LedgerEntry classification_report(int r, int g, std::optional<int> n = {});

inline constexpr const char* kVerdictUnique = "unique component, examples dense";
inline constexpr const char* kVerdictEmptyZak = "empty (no examples + not extendable)";
inline constexpr const char* kVerdictEmptyNumeric = "empty (numerical obstruction)";
inline constexpr const char* kVerdictOutside = "outside classified range";

}  // namespace wahl::ledger

#endif
