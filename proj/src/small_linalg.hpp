#pragma once

// Allocation-free exact kernels for the small square matrices used by the
// fan code. Matrices are row-major with an explicit row stride.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fores/int_math.hpp"

namespace fores::detail {

inline constexpr std::size_t kMaxDim = 8;

/// Bareiss elimination of an n x n block; stack storage up to kMaxDim.
inline Wide bareiss(const Int* m, std::size_t n, std::size_t stride) {
  if (n == 0) return 1;
  std::array<Wide, kMaxDim * kMaxDim> local;
  std::vector<Wide> heap;
  Wide* a = local.data();
  if (n > kMaxDim) {
    heap.resize(n * n);
    a = heap.data();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m[i * stride + j];
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
      sign = -sign;
    }
    const Wide pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = wide_add(wide_mul(a[i * n + j], pivot), -wide_mul(a[i * n + k], a[k * n + j])) / prev;
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

/// Determinant of `m` with row `skip_row` and column `skip_col` removed
/// (pass n to skip nothing along that axis).
inline Wide minor_det(const Int* m, std::size_t rows, std::size_t cols, std::size_t skip_row, std::size_t skip_col) {
  if (rows > kMaxDim + 1 || cols > kMaxDim + 1) throw std::invalid_argument("minor_det: matrix too large");
  std::array<Int, kMaxDim * kMaxDim> sub;
  std::size_t out_rows = 0, out_cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == skip_row) continue;
    out_cols = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == skip_col) continue;
      sub[out_rows * kMaxDim + out_cols++] = m[i * cols + j];
    }
    ++out_rows;
  }
  if (out_rows != out_cols) throw std::invalid_argument("minor is not square");
  return bareiss(sub.data(), out_rows, kMaxDim);
}

}  // namespace fores::detail
