#include "wahl/exactlin/matrix.hpp"

#include <atomic>
#include <cstring>
#include <string>

#include "wahl/errors.hpp"

namespace wahl::exactlin {

namespace {
std::atomic<std::size_t> g_max_cells{16'000'000};
}

std::size_t max_cells() { return g_max_cells.load(); }

void set_max_cells(std::size_t cells) { g_max_cells.store(cells); }

void check_cells(std::size_t rows, std::size_t cols) {
  const std::size_t limit = max_cells();
  if (cols != 0 && rows > limit / cols) {
    throw SizingError("matrix of " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " cells exceeds limit " +
                      std::to_string(limit));
  }
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_cells(rows, cols);
  a_.assign(rows * cols, 0);
}

void FpMatrix::push_row(std::span<const std::uint64_t> row) {
  if (row.size() != cols_) throw ShapeError("push_row: width mismatch");
  check_cells(rows_ + 1, cols_);
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

FpMatrix FpMatrix::stacked(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw ShapeError("stack: column counts differ");
  const std::size_t cols = top.rows() ? top.cols() : bottom.cols();
  FpMatrix out(0, cols);
  check_cells(top.rows() + bottom.rows(), cols);
  for (std::size_t r = 0; r < top.rows(); ++r) out.push_row(top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.push_row(bottom.row(r));
  return out;
}

}  // namespace wahl::exactlin
