#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dimerknot/activity.hpp"
#include "dimerknot/diagram.hpp"
#include "dimerknot/laurent.hpp"

namespace dimerknot {

struct TaitEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
  int crossing_id = 0;
};

/// Signed multigraph on the faces of one colour class. Edge order is the
/// activity order; loops and parallel edges are allowed.
struct TaitGraph {
  std::vector<int> vertex_faces;  // vertex -> diagram face id
  std::vector<TaitEdge> edges;
  bool on_shaded = true;          // false for the dual (unshaded faces)

  int vertex_count() const { return static_cast<int>(vertex_faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Edge subset, as sorted edge indices.
struct SpanningTree {
  std::vector<int> edges;
  bool operator==(const SpanningTree&) const = default;
};

/// One vertex per shaded face, one edge per crossing joining its two shaded
/// quadrants, signed by the checkerboard sign.
TaitGraph build_tait(const LinkDiagram& d);

/// Tait graph of the opposite colour class (signs negated accordingly).
TaitGraph dual_tait(const TaitGraph& g, const LinkDiagram& d);

/// Calls visit once per spanning tree (contraction-deletion). Returns the
/// number of trees.
std::size_t for_each_spanning_tree(const TaitGraph& g,
                                   const std::function<void(const SpanningTree&)>& visit);
std::vector<SpanningTree> spanning_trees(const TaitGraph& g);

/// Letter of every edge relative to the tree, indexed like g.edges.
std::vector<Letter> tree_letters(const TaitGraph& g, const SpanningTree& t);
ActivityWord tree_activity_word(const TaitGraph& g, const SpanningTree& t);

/// Sum over spanning trees of the bracket-specialised activity words.
LaurentPoly1 thistlethwaite_sum(const TaitGraph& g);

/// DOT text; with a tree, edges carry their activity letters and tree edges
/// are bold.
std::string tait_to_dot(const TaitGraph& g, const std::optional<SpanningTree>& tree = std::nullopt);
std::string tait_to_json(const TaitGraph& g);

}  // namespace dimerknot
