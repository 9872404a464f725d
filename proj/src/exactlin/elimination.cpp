#include "wahl/exactlin/elimination.hpp"

#include <algorithm>
#include <numeric>

#include "wahl/errors.hpp"
#include "wahl/exactlin/kernels.hpp"

namespace wahl::exactlin {

namespace {

std::size_t first_nonzero(const std::vector<std::uint64_t>& row, std::size_t from) {
  for (std::size_t c = from; c < row.size(); ++c)
    if (row[c]) return c;
  return row.size();
}

// row -= row[c] * pivot, on the tail starting at the pivot column.
void eliminate_at(std::vector<std::uint64_t>& row,
                  const std::vector<std::uint64_t>& pivot, std::size_t c,
                  Prime p) {
  const std::uint64_t f = p.value - row[c];
  kernels::axpy(row.data() + c, pivot.data() + c, row.size() - c, f, p.value);
}

}  // namespace

bool Echelon::add_row(std::vector<std::uint64_t> row) {
  if (row.size() != cols_) throw ShapeError("add_row: width mismatch");
  std::size_t c = first_nonzero(row, 0);
  while (c < cols_) {
    const std::int32_t pr = pivot_row_[c];
    if (pr < 0) {
      if (row[c] != 1) {
        const std::uint64_t inv = invmod(row[c], p_);
        kernels::scale(row.data() + c, cols_ - c, inv, p_.value);
      }
      pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
      lead_.push_back(c);
      rows_.push_back(std::move(row));
      return true;
    }
    eliminate_at(row, rows_[static_cast<std::size_t>(pr)], c, p_);
    c = first_nonzero(row, c + 1);
  }
  return false;
}

bool Echelon::in_span(std::vector<std::uint64_t> row) const {
  if (row.size() != cols_) throw ShapeError("in_span: width mismatch");
  std::size_t c = first_nonzero(row, 0);
  while (c < cols_) {
    const std::int32_t pr = pivot_row_[c];
    if (pr < 0) return false;
    eliminate_at(row, rows_[static_cast<std::size_t>(pr)], c, p_);
    c = first_nonzero(row, c + 1);
  }
  return true;
}

void Echelon::to_rref() {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lead_[a] < lead_[b]; });
  for (std::size_t t = order.size(); t-- > 0;) {
    const std::size_t i = order[t];
    const std::size_t c = lead_[i];
    for (std::size_t s = 0; s < t; ++s) {
      std::vector<std::uint64_t>& upper = rows_[order[s]];
      if (upper[c]) eliminate_at(upper, rows_[i], c, p_);
    }
  }
}

std::vector<std::uint32_t> Echelon::pivot_cols() const {
  std::vector<std::uint32_t> cols;
  cols.reserve(rows_.size());
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) cols.push_back(static_cast<std::uint32_t>(c));
  return cols;
}

const std::vector<std::uint64_t>* Echelon::row_for_pivot(std::size_t col) const {
  const std::int32_t pr = pivot_row_[col];
  return pr < 0 ? nullptr : &rows_[static_cast<std::size_t>(pr)];
}

FpMatrix Echelon::extract_sorted() const {
  FpMatrix out(0, cols_);
  for (std::uint32_t c : pivot_cols())
    out.push_row(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  return out;
}

void Echelon::for_each_kernel_vector(
    const std::function<void(const std::vector<std::uint64_t>&)>& fn) const {
  const auto pivots = pivot_cols();
  std::vector<std::uint64_t> v(cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (std::uint32_t pc : pivots) {
      const auto& row = rows_[static_cast<std::size_t>(pivot_row_[pc])];
      if (row[c]) v[pc] = p_.value - row[c];
    }
    fn(v);
  }
}

namespace {

void check_reduced(const FpMatrix& m, Prime p) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::uint64_t v : m.row(r))
      if (v >= p.value) throw ShapeError("entry not reduced mod p");
}

}  // namespace

std::size_t rank(const FpMatrix& m, Prime p) {
  check_cells(m.rows(), m.cols());
  check_reduced(m, p);
  Echelon e(m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    e.add_row(std::vector<std::uint64_t>(m.row(r).begin(), m.row(r).end()));
  return e.rank();
}

std::size_t relative_rank(const FpMatrix& span_a, const FpMatrix& span_b, Prime p) {
  if (span_b.rows() > 0 && span_a.rows() > 0 && span_a.cols() != span_b.cols())
    throw ShapeError("relative_rank: column counts differ");
  const std::size_t cols = span_a.rows() ? span_a.cols() : span_b.cols();
  check_cells(span_a.rows() + span_b.rows(), cols);
  check_reduced(span_a, p);
  check_reduced(span_b, p);
  Echelon e(cols, p);
  for (std::size_t r = 0; r < span_b.rows(); ++r)
    e.add_row(std::vector<std::uint64_t>(span_b.row(r).begin(), span_b.row(r).end()));
  std::size_t grew = 0;
  for (std::size_t r = 0; r < span_a.rows(); ++r)
    grew += e.add_row(std::vector<std::uint64_t>(span_a.row(r).begin(),
                                                 span_a.row(r).end()));
  return grew;
}

FpMatrix kernel_basis(const FpMatrix& m, Prime p) {
  check_cells(m.rows(), m.cols());
  check_reduced(m, p);
  Echelon e(m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    e.add_row(std::vector<std::uint64_t>(m.row(r).begin(), m.row(r).end()));
  e.to_rref();
  check_cells(m.cols() - e.rank(), m.cols());
  FpMatrix out(0, m.cols());
  e.for_each_kernel_vector(
      [&](const std::vector<std::uint64_t>& v) { out.push_row(v); });
  return out;
}

}  // namespace wahl::exactlin
