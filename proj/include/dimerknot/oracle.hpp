#pragma once

// Exponential-time reference computations.

#include <cstdint>
#include <string>

#include "dimerknot/diagram.hpp"
#include "dimerknot/error.hpp"
#include "dimerknot/laurent.hpp"
#include "dimerknot/matrix.hpp"

namespace dimerknot {

struct StateSumOptions {
  int max_crossings = 24;
  unsigned threads = 1;  // > 1 splits the state range across threads
};

/// Kauffman bracket as a sum over all 2^c smoothings; loops are counted by
/// union-find over darts. The a-smoothing joins slots (0,1) and (2,3).
/// Throws TooManyCrossings above the cap.
LaurentPoly1 bracket_state_sum(const LinkDiagram& d, const StateSumOptions& options = {},
                               std::uint64_t* states_visited = nullptr);

/// (-A^-3)^writhe times the state-sum bracket of the closure.
LaurentPoly1 jones_state_sum(const BraidWord& w, const StateSumOptions& options = {});

/// Plain Laplace expansion along the first row. Throws TooLarge above 10.
template <class Ring>
Ring cofactor_det(const DenseMatrix<Ring>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 10) throw Error(ErrorCode::TooLarge, "cofactor expansion limited to 10 rows");
  if (n == 0) return Ring(1);
  if (n == 1) return m(0, 0);
  Ring sum;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == Ring{}) continue;
    DenseMatrix<Ring> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, j = 0; k < n; ++k)
        if (k != c) minor(r - 1, j++) = m(r, k);
    Ring term = m(0, c) * cofactor_det(minor);
    sum = c % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace dimerknot
