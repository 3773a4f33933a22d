#pragma once

#include <cstddef>
#include <vector>

#include "fanocert/exact/rational.hpp"

namespace fanocert::exact {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  /// Rows listed in `which`, in that order.
  IntMatrix select_rows(const std::vector<std::size_t>& which) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Signed determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// |det m|; throws on non-square input.
Integer lattice_index(const IntMatrix& m);

/// gcd of all maximal minors (index of the row lattice in its saturation
/// when the rows are independent); 0 when rank deficient.
Integer maximal_minor_gcd(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

}  // namespace fanocert::exact
