#pragma once

// Kasteleyn signing, modified adjacency matrices and the determinant route
// to the bracket and Jones polynomials.

#include <optional>
#include <string>
#include <vector>

#include "dimerknot/activity.hpp"
#include "dimerknot/braid.hpp"
#include "dimerknot/laurent.hpp"
#include "dimerknot/matrix.hpp"
#include "dimerknot/overlay.hpp"

namespace dimerknot {

/// Chooses edge signs so that every bounded face of length 0 mod 4 has an odd
/// number of negative edges and every bounded face of length 2 mod 4 an even
/// number, by solving the parity system over GF(2) per component. Throws
/// NoSolution if the system is inconsistent.
OverlayGraph kasteleyn_sign(OverlayGraph g);

struct FaceParity {
  int length = 0;
  int negative_edges = 0;  // counted along the boundary walk
  bool bounded = true;
  bool satisfied = true;   // meaningful for bounded faces only
};

std::vector<FaceParity> kasteleyn_report(const OverlayGraph& g);
bool is_kasteleyn(const OverlayGraph& g);

/// Rows: V1 in order; columns: W in order; entry = sign * specialised letter.
DenseMatrix<LaurentPoly1> adjacency_matrix(const OverlayGraph& g);
/// Same with the letters kept symbolic.
DenseMatrix<LetterPoly> symbolic_adjacency_matrix(const OverlayGraph& g);

/// Bareiss determinant over Z[A, A^-1].
LaurentPoly1 determinant(const DenseMatrix<LaurentPoly1>& m, DeterminantStats* stats = nullptr);
/// Determinant over the letter ring (small matrices).
LetterPoly symbolic_determinant(const DenseMatrix<LetterPoly>& m);

/// Some perfect matching by augmenting paths, as an edge per V1 vertex.
std::optional<std::vector<int>> find_matching(const OverlayGraph& g);

/// Global sign s with s * det = sum over perfect matchings of the weights.
/// Returns +1 when there is no perfect matching.
int fix_sign(const OverlayGraph& g);

/// Signed overlay of a homogeneous-family word; throws UnsupportedWord.
OverlayGraph signed_overlay(const BraidWord& w);

LaurentPoly1 bracket_via_det(const BraidWord& w, DeterminantStats* stats = nullptr);
/// (-A^-3)^writhe * s * det. Throws UnsupportedWord outside the family.
LaurentPoly1 jones_via_det(const BraidWord& w, DeterminantStats* stats = nullptr);

/// Aligned text and JSON renderings for the `matrix` command.
std::string matrix_to_text(const OverlayGraph& g, bool symbolic);
std::string matrix_to_json(const OverlayGraph& g, bool symbolic);

}  // namespace dimerknot
