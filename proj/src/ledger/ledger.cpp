#include "wahl/ledger/ledger.hpp"

#include <string>

#include "wahl/errors.hpp"

namespace wahl::ledger {

std::int64_t n_rg(int r, int g) {
  if (r < 1 || g < 2) throw InvalidInputError("n_rg needs r >= 1, g >= 2");
  if (r > 100 || g > 10000)
    throw InvalidInputError("n_rg limited to r <= 100, g <= 10000");
  const auto rr = static_cast<std::int64_t>(r);
  return 1 + rr * rr * (g - 1);
}

std::int64_t k3_hilbert_dim(std::int64_t big_n) {
  if (big_n < 2) throw InvalidInputError("k3_hilbert_dim needs N >= 2");
  return 18 + (big_n + 1) * (big_n + 1);
}

std::int64_t fano_bound(int r, int g, std::int64_t corank, std::int64_t h0n2) {
  const std::int64_t n = n_rg(r, g);
  return n * n + 3 * n + 19 + corank + 2 * h0n2;
}

std::int64_t mukai_bound(int n, int r, int g, std::int64_t corank,
                         std::int64_t h0n2) {
  if (n < 3 || n > 1000)
    throw InvalidInputError("mukai_bound needs 3 <= n <= 1000");
  const std::int64_t big_n = n_rg(r, g);
  const std::int64_t choose = static_cast<std::int64_t>(n - 3) * (n - 4) / 2;
  const std::int64_t h_coeff = 3 * n - 7 + choose;
  return big_n * big_n + n * big_n + 19 + (n - 2) * corank + h_coeff * h0n2;
}

ZakVerdict zak_verdict(std::int64_t big_n, std::int64_t corank, std::int64_t h0n2) {
  if (big_n <= 3)
    throw InvalidInputError("extendability criterion needs codimension >= 2");
  ZakVerdict v;
  if (h0n2 != 0) {
    v.conclusive = false;
    v.text = "inconclusive";
    return v;
  }
  v.conclusive = true;
  v.min_non_extendable = corank + 1;
  v.text = "not k-extendable for k >= " + std::to_string(v.min_non_extendable);
  return v;
}

namespace {

void fill_constants(LedgerEntry& e) {
  const auto row = corank_row(e.r, e.g);
  if (!row) return;
  e.corank = BoundedValue{row->corank, false, Provenance::kLiterature};
  e.h0n2 = row->h0n2;
  if (!row->surface_hypothesis.empty() && row->surface_hypothesis != "any smooth")
    e.annotations.push_back("surface hypothesis: " + row->surface_hypothesis +
                            " (not checkable in this model)");
  if (!row->curve_hypothesis.empty() && row->curve_hypothesis != "any smooth")
    e.annotations.push_back("curve hypothesis: " + row->curve_hypothesis);
  if (e.r == 3 && e.g == 2)
    e.annotations.push_back(
        "special members of the genus-2 index-3 family have corank 18");
  if (e.h0n2 && e.h0n2->is_bound)
    e.annotations.push_back(
        "h0(N(-2)) published as a bound; stored value recovered from the "
        "parameter counts");
}

std::string fano_verdict(LedgerEntry& e) {
  if (e.r == 1) {
    e.annotations.push_back("threefold tables cover index r >= 2");
    return kVerdictOutside;
  }
  if (fano_example(e.r, e.g)) return kVerdictUnique;
  if (e.g == 2) {
    e.annotations.push_back(
        e.r == 2 ? "twice the primitive class is never very ample here"
                 : "primitive degree 2(g-1)/r is not an integer");
    return kVerdictEmptyNumeric;
  }
  if (e.r == 3 && e.g == 3) {
    e.annotations.push_back("primitive degree 2(g-1)/r is not an integer");
    return kVerdictEmptyNumeric;
  }
  if (e.r == 2) {
    e.annotations.push_back(
        "holds on the closure of the Picard-number-one locus, for a general "
        "surface section");
  }
  return kVerdictEmptyZak;
}

std::string mukai_verdict(LedgerEntry& e, int n) {
  if (const auto ex = mukai_example(e.r, e.g)) {
    if (n <= ex->n_max) return kVerdictUnique;
    if (e.r == 1 && e.g == 6)
      e.annotations.push_back(
          "nonexistence is geometric (quadric sections of cones extend the "
          "Grassmannian only as cones); the extendability criterion is "
          "silent here");
    return kVerdictEmptyZak;
  }
  if (e.r == 1) {
    if (e.g >= 11) return kVerdictEmptyZak;
    e.annotations.push_back(
        "index-one sections of genus <= 5 are classical complete "
        "intersections, outside the stored tables");
    return kVerdictOutside;
  }
  if (e.g == 2 || (e.r == 3 && e.g == 3)) return fano_verdict(e);
  if (e.r == 2 && (e.g == 3 || e.g == 4)) {
    e.annotations.push_back("degree of the primitive class forces n <= 3");
    return kVerdictEmptyNumeric;
  }
  if (e.r == 2) {
    e.annotations.push_back(
        e.g >= 7 ? "holds on the closure of the Picard-number-one locus"
                 : "assumes a non-trigonal surface section");
  }
  if (e.r == 3 && e.g >= 5)
    e.annotations.push_back("assumes a non-trigonal surface section");
  return kVerdictEmptyZak;
}

}  // namespace

LedgerEntry classification_report(int r, int g, std::optional<int> n) {
  if (r < 1 || g < 2)
    throw InvalidInputError("classification_report needs r >= 1, g >= 2");
  if (n && *n < 3)
    throw InvalidInputError("dimension must be >= 3 when given");

  LedgerEntry e;
  e.r = r;
  e.g = g;
  e.n = n;
  e.big_n = n_rg(r, g);
  e.hilbert_k3_dim = k3_hilbert_dim(e.big_n);
  fill_constants(e);

  if (e.corank && e.h0n2) {
    e.f_value = fano_bound(r, g, e.corank->value, e.h0n2->value);
    e.bound_value = n && *n > 3
                        ? mukai_bound(*n, r, g, e.corank->value, e.h0n2->value)
                        : e.f_value;
    if (e.big_n > 3) e.zak = zak_verdict(e.big_n, e.corank->value, e.h0n2->value);
  }

  e.verdict = (!n || *n == 3) ? fano_verdict(e) : mukai_verdict(e, *n);
  return e;
}

}  // namespace wahl::ledger
