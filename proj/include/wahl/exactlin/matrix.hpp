#ifndef WAHL_EXACTLIN_MATRIX_HPP
#define WAHL_EXACTLIN_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wahl::exactlin {

// Guard applied wherever a dense matrix is materialised.  Default matches
// the CLI's --max-cells default.
std::size_t max_cells();
void set_max_cells(std::size_t cells);
void check_cells(std::size_t rows, std::size_t cols);  // throws SizingError

// Dense row-major matrix of residues.  The modulus lives with the operations,
// not the data; every entry must already be reduced.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<std::uint64_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  // Appends one row; the cell guard is re-checked as the matrix grows.
  void push_row(std::span<const std::uint64_t> row);

  static FpMatrix stacked(const FpMatrix& top, const FpMatrix& bottom);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> a_;
};

}  // namespace wahl::exactlin

#endif
