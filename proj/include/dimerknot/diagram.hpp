#pragma once

// Combinatorial planar diagram of a braid closure.
//
// Each crossing owns four darts (half-edges) numbered 4 * index + corner,
// with corners in counterclockwise order: top-right, top-left, bottom-left,
// bottom-right. The corner at dart d is the angular sector from d to the next
// dart counterclockwise, so corner 0 faces up, 1 left, 2 down and 3 right.
// Strands run downward; closure arcs go around the right side with strand n's
// arc innermost.

#include <array>
#include <string>
#include <vector>

#include "dimerknot/braid.hpp"

namespace dimerknot {

enum Corner : int { kTop = 0, kLeft = 1, kBottom = 2, kRight = 3 };

inline constexpr int dart_of(int crossing_index, int corner) { return 4 * crossing_index + corner; }
inline constexpr int crossing_of(int dart) { return dart / 4; }
inline constexpr int corner_of(int dart) { return dart % 4; }
inline constexpr int rotate_ccw(int dart) { return 4 * (dart / 4) + (dart + 1) % 4; }
inline constexpr int rotate_cw(int dart) { return 4 * (dart / 4) + (dart + 3) % 4; }

struct Crossing {
  int id = 0;         // 1-based position in the expanded word
  int generator = 0;  // braid column i of sigma_i
  int oriented_sign = 0;
  // Darts in counterclockwise order; slots 0 and 2 carry the under-strand.
  std::array<int, 4> slots{};
  int checkerboard_sign = 0;  // set by checkerboard()
};

struct Arc {
  int position = 0;  // strand column 1..n
  std::array<int, 2> darts{};  // bottom dart of the upper crossing, top dart of the lower one
  bool closure = false;
};

struct Face {
  int id = 0;
  std::vector<int> boundary;  // corner darts in tracing order (clockwise about the face)
  bool shaded = false;
  bool is_outer = false;
};

struct LinkDiagram {
  BraidWord source;
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::vector<int> mate;            // dart -> opposite end of its arc
  std::vector<Face> faces;
  std::vector<int> face_of_corner;  // dart -> face id
  int outer_face = 0;
  int free_loops = 0;               // crossing-free components (empty word only)
  bool colored = false;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int face_at(int crossing_index, int corner) const {
    return face_of_corner[static_cast<std::size_t>(dart_of(crossing_index, corner))];
  }
  /// Face in the quadrant between slots s and s+1 of a crossing.
  int quadrant_face(int crossing_index, int slot) const {
    return face_of_corner[static_cast<std::size_t>(
        crossings[static_cast<std::size_t>(crossing_index)].slots[static_cast<std::size_t>(slot)])];
  }
};

/// Builds the closure with faces traced. Throws DisconnectedLink when some
/// generator sigma_1..sigma_(n-1) is absent (split diagram).
LinkDiagram close_braid(const BraidWord& w);

/// Proper 2-colouring with the outer face unshaded; fills checkerboard signs.
LinkDiagram checkerboard(LinkDiagram d);

/// close_braid followed by checkerboard.
LinkDiagram build_diagram(const BraidWord& w);

/// +1 when the shaded quadrants are those between slots (1,2) and (3,0),
/// i.e. the regions merged by the A-smoothing; -1 otherwise.
int checkerboard_sign(const LinkDiagram& d, int crossing_index);

/// Face right of strand n, inside the innermost closure arc.
int inner_face(const LinkDiagram& d);

/// Face between the closure arcs of strands p and p+1, 1 <= p <= n-1.
int band_face(const LinkDiagram& d, int p);

std::string diagram_to_json(const LinkDiagram& d);

}  // namespace dimerknot
