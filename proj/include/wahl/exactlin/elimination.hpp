#ifndef WAHL_EXACTLIN_ELIMINATION_HPP
#define WAHL_EXACTLIN_ELIMINATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "wahl/exactlin/fp.hpp"
#include "wahl/exactlin/matrix.hpp"

namespace wahl::exactlin {

// Incremental forward echelon over F_p.  Rows are inserted in caller order;
// each incoming row is reduced against existing pivots left to right and, if
// anything survives, becomes the (monic) pivot row of its leading column.
// That pivoting rule is a fixed function of the input order, so ranks and
// kernels are reproducible run to run and backend to backend.
class Echelon {
 public:
  Echelon(std::size_t cols, Prime p) : p_(p), cols_(cols), pivot_row_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Consumes the row; returns true when the rank grew.
  bool add_row(std::vector<std::uint64_t> row);

  // Forward reduction only; true iff the row lies in the current row span.
  bool in_span(std::vector<std::uint64_t> row) const;

  // Back-substitutes so every pivot column is zero outside its own row.
  void to_rref();

  // Pivot columns in increasing order.
  std::vector<std::uint32_t> pivot_cols() const;

  // Row with the given lead, or nullptr.
  const std::vector<std::uint64_t>* row_for_pivot(std::size_t col) const;

  // Rows sorted by leading column, as a matrix.
  FpMatrix extract_sorted() const;

  // Invokes fn once per right-kernel basis vector (requires to_rref first).
  // Vectors are emitted in increasing free-column order; each has a 1 in its
  // free column, making the basis canonical.
  void for_each_kernel_vector(
      const std::function<void(const std::vector<std::uint64_t>&)>& fn) const;

 private:
  Prime p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> lead_;
  std::vector<std::int32_t> pivot_row_;
};

// Row rank of m over F_p.
std::size_t rank(const FpMatrix& m, Prime p);

// dim((A + B) / B) over row spans: rank of the stack minus rank of span_b.
// Throws ShapeError on column mismatch (an empty span_b is accepted).
std::size_t relative_rank(const FpMatrix& span_a, const FpMatrix& span_b, Prime p);

// Basis of the right null space, one row per basis vector;
// rows() == cols - rank(m).
FpMatrix kernel_basis(const FpMatrix& m, Prime p);

}  // namespace wahl::exactlin

#endif
