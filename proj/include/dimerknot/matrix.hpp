#pragma once

// Dense row-major matrices over an exact commutative ring, and fraction-free
// determinants.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimerknot/error.hpp"

namespace dimerknot {

template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Ring operations spent by a determinant computation.
struct DeterminantStats {
  std::size_t multiplications = 0;
  std::size_t divisions = 0;
  std::size_t row_swaps = 0;
  std::size_t ring_operations() const { return multiplications + divisions; }
};

/// Bareiss elimination. Needs `exact_div(Ring, Ring)` findable by ADL; every
/// division performed is exact by Sylvester's identity.
template <class Ring>
Ring bareiss_determinant(DenseMatrix<Ring> m, DeterminantStats* stats = nullptr) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Ring(1);
  DeterminantStats local;
  DeterminantStats& st = stats ? *stats : local;
  const Ring zero{};
  Ring previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == zero) ++r;
      if (r == n) return zero;
      m.swap_rows(k, r);
      negate = !negate;
      ++st.row_swaps;
    }
    const Ring& pivot = m(k, k);
    const bool unit_previous = previous == Ring(1);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = m(i, k) == zero;
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring& target = m(i, j);
        const bool cross_zero = lead_zero || m(k, j) == zero;
        if (target == zero && cross_zero) continue;
        Ring value;
        if (cross_zero) {
          value = pivot * target;
          ++st.multiplications;
        } else if (target == zero) {
          value = -(m(i, k) * m(k, j));
          ++st.multiplications;
        } else {
          value = pivot * target - m(i, k) * m(k, j);
          st.multiplications += 2;
        }
        if (!unit_previous) {
          value = exact_div(value, previous);
          ++st.divisions;
        }
        target = std::move(value);
      }
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  Ring det = m(n - 1, n - 1);
  return negate ? Ring(-det) : det;
}

/// Laplace expansion along rows with minors memoised by their column set.
/// Division-free, so it works over any commutative ring (e.g. letter
/// polynomials). Exponential in the worst case; limited to 30 rows.
template <class Ring>
Ring laplace_determinant(const DenseMatrix<Ring>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 30) throw Error(ErrorCode::TooLarge, "Laplace expansion limited to 30 rows");
  std::unordered_map<std::uint32_t, Ring> memo;
  const Ring zero{};
  auto minor = [&](auto&& self, std::size_t row, std::uint32_t used) -> Ring {
    if (row == n) return Ring(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Ring sum;
    int position = 0;  // index of column c among unused columns
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1U << c)) continue;
      if (!(m(row, c) == zero)) {
        Ring sub = self(self, row + 1, used | (1U << c));
        if (!(sub == zero)) {
          Ring term = m(row, c) * sub;
          sum = position % 2 == 0 ? sum + term : sum - term;
        }
      }
      ++position;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return minor(minor, 0, 0U);
}

}  // namespace dimerknot
