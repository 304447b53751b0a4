#pragma once

// Balanced overlaid Tait graph: crossings (V1) against faces (W), with one
// shaded and one unshaded face removed so that |V1| = |W|.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "dimerknot/activity.hpp"
#include "dimerknot/diagram.hpp"
#include "dimerknot/laurent.hpp"

namespace dimerknot {

struct OverlayEdge {
  int crossing = 0;  // index into V1
  int face = 0;      // index into W
  int corner_dart = 0;  // diagram corner realising the incidence
  Letter letter = Letter::L;
  int kasteleyn_sign = 1;
};

struct OverlayGraph {
  std::vector<int> crossing_ids;   // V1, braid-word order
  std::vector<int> crossing_signs; // sign that decides bars, per V1 vertex
  std::vector<int> face_ids;       // W: shaded by lowest crossing, then unshaded
  std::vector<bool> face_shaded;
  std::array<int, 2> deleted_faces{};  // diagram face ids
  std::vector<OverlayEdge> edges;
  // Embedding: counterclockwise edge order around each vertex.
  std::vector<std::vector<int>> crossing_rotation;
  std::vector<std::vector<int>> face_rotation;

  int size() const { return static_cast<int>(crossing_ids.size()); }
};

/// Faces of the overlay embedding as closed walks over edge darts
/// (dart 2e sits at the crossing end of edge e, 2e + 1 at the face end).
struct OverlayFace {
  std::vector<int> darts;
  int component = 0;
  bool bounded = true;
  int length() const { return static_cast<int>(darts.size()); }
};

struct PerfectMatching {
  std::vector<int> edges;  // one edge index per V1 vertex, in V1 order
  bool operator==(const PerfectMatching&) const = default;
};

/// Removes the face between the closure arcs of strands 1 and 2 and the face
/// just inside the closure arc of strand 2, then joins every crossing to each
/// surviving face it touches (one edge per pair). Letters are assigned.
/// Throws UnsupportedWord outside the homogeneous family, UnbalancedGraph if
/// the parts differ in size.
OverlayGraph build_overlay(const LinkDiagram& d);

/// Shaded face: L on the edge to its lowest crossing, D elsewhere; unshaded:
/// l and d. Edges at crossings with negative sign get barred letters.
OverlayGraph overlay_activity_letters(OverlayGraph g);

/// Connected component of every vertex: crossings first, then faces.
std::vector<int> overlay_components(const OverlayGraph& g, int* count = nullptr);

/// Traces the faces of the embedding per connected component. In each
/// component the longest walk is taken as the unbounded face.
std::vector<OverlayFace> overlay_faces(const OverlayGraph& g);

std::size_t for_each_perfect_matching(const OverlayGraph& g,
                                      const std::function<void(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> perfect_matchings(const OverlayGraph& g);

ActivityWord matching_word(const OverlayGraph& g, const PerfectMatching& m);

/// Sum over perfect matchings of the bracket-specialised words.
LaurentPoly1 partition_function(const OverlayGraph& g);

std::string overlay_to_dot(const OverlayGraph& g);
std::string overlay_to_json(const OverlayGraph& g);

}  // namespace dimerknot
