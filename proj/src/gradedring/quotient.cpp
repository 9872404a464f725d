#include "wahl/gradedring/quotient.hpp"

#include <algorithm>
#include <string>

#include "wahl/errors.hpp"
#include "wahl/exactlin/kernels.hpp"

namespace wahl::gradedring {

using exactlin::Prime;

void QuotientPiece::accumulate_nf(Prime p, std::uint32_t idx, std::uint64_t c,
                                  std::span<std::uint64_t> acc) const {
  if (!c) return;
  const std::int32_t sr = std_rank[idx];
  if (sr >= 0) {
    acc[static_cast<std::size_t>(sr)] =
        exactlin::addmod(acc[static_cast<std::size_t>(sr)], c, p.value);
    return;
  }
  if (!has_reduction)
    throw ShapeError("degree " + std::to_string(degree) +
                     " piece was built without reduction support");
  const auto& nf = nf_rows[static_cast<std::size_t>(pivot_rank[idx])];
  exactlin::kernels::axpy(acc.data(), nf.data(), acc.size(), c, p.value);
}

std::vector<std::uint64_t> QuotientPiece::reduce(Prime p, const Form& f) const {
  if (f.degree != degree) throw ShapeError("reduce: degree mismatch");
  if (!has_reduction)
    throw ShapeError("reduce: piece was built without reduction support");
  std::vector<std::uint64_t> acc(quotient_dim, 0);
  for (std::uint32_t i = 0; i < f.coeffs.size(); ++i)
    accumulate_nf(p, i, f.coeffs[i], acc);
  return acc;
}

QuotientPiece ideal_piece(GradedRing& ring, Prime p,
                          std::span<const Form> generators, int m,
                          bool with_reduction) {
  ring.ensure_degree(m);
  const auto ring_dim = static_cast<std::size_t>(ring.dim(m));
  QuotientPiece piece;
  piece.degree = m;
  piece.ring_dim = ring_dim;

  std::size_t row_count = 0;
  for (const Form& q : generators)
    if (q.degree <= m) row_count += static_cast<std::size_t>(ring.dim(m - q.degree));
  exactlin::check_cells(row_count, ring_dim);

  exactlin::Echelon ech(ring_dim, p);
  std::vector<std::uint64_t> row(ring_dim);
  for (const Form& q : generators) {
    if (q.degree > m) continue;
    const int cdeg = m - q.degree;
    const auto& cofactors = ring.monomials(cdeg);
    const auto& qm = ring.monomials(q.degree);
    for (const Exponents& mono : cofactors) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t t = 0; t < q.coeffs.size(); ++t) {
        if (!q.coeffs[t]) continue;
        Exponents e = mono;
        for (int v = 0; v < ring.nvars(); ++v)
          e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
              e[static_cast<std::size_t>(v)] + qm[t][static_cast<std::size_t>(v)]);
        row[ring.index_of(m, e)] = q.coeffs[t];
      }
      ech.add_row(row);
    }
  }
  if (with_reduction) ech.to_rref();

  piece.ideal_dim = ech.rank();
  piece.quotient_dim = ring_dim - piece.ideal_dim;
  piece.pivot_cols = ech.pivot_cols();
  piece.echelon = ech.extract_sorted();
  piece.std_rank.assign(ring_dim, -1);
  piece.pivot_rank.assign(ring_dim, -1);
  for (std::size_t i = 0; i < piece.pivot_cols.size(); ++i)
    piece.pivot_rank[piece.pivot_cols[i]] = static_cast<std::int32_t>(i);
  for (std::uint32_t c = 0; c < ring_dim; ++c) {
    if (piece.pivot_rank[c] < 0) {
      piece.std_rank[c] = static_cast<std::int32_t>(piece.standard_cols.size());
      piece.standard_cols.push_back(c);
    }
  }

  if (with_reduction) {
    piece.has_reduction = true;
    piece.nf_rows.reserve(piece.ideal_dim);
    for (std::size_t i = 0; i < piece.ideal_dim; ++i) {
      std::vector<std::uint64_t> nf(piece.quotient_dim, 0);
      for (std::size_t j = 0; j < piece.quotient_dim; ++j) {
        const std::uint64_t v = piece.echelon.at(i, piece.standard_cols[j]);
        nf[j] = v ? p.value - v : 0;
      }
      piece.nf_rows.push_back(std::move(nf));
    }
  }
  return piece;
}

std::int64_t hilbert_ci(int ambient_dim, std::span<const int> degrees, int m) {
  if (m < 0) return 0;
  // Expand the numerator prod (1 - t^{d_j}); degree stays small.
  std::vector<std::int64_t> num{1};
  for (int d : degrees) {
    std::vector<std::int64_t> next(num.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + static_cast<std::size_t>(d)] -= num[i];
    }
    num = std::move(next);
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const std::int64_t shift = m - static_cast<std::int64_t>(i);
    if (shift < 0 || !num[i]) continue;
    total += num[i] * binomial(ambient_dim + shift, ambient_dim);
  }
  return total;
}

}  // namespace wahl::gradedring
