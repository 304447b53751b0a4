#include "dimerknot/tait.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dimerknot/error.hpp"
#include "dimerknot/kauffman.hpp"
#include "json.hpp"

namespace dimerknot {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

TaitGraph tait_on(const LinkDiagram& d, bool shaded) {
  TaitGraph g;
  g.on_shaded = shaded;
  std::map<int, int> vertex_of_face;
  for (const auto& f : d.faces) {
    if (f.shaded != shaded) continue;
    vertex_of_face[f.id] = static_cast<int>(g.vertex_faces.size());
    g.vertex_faces.push_back(f.id);
  }
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const int ki = static_cast<int>(k);
    // Quadrant slots 1 and 3 are one colour class, 0 and 2 the other.
    const bool odd_slots_shaded = d.faces[static_cast<std::size_t>(d.quadrant_face(ki, 1))].shaded;
    const int s = odd_slots_shaded == shaded ? 1 : 0;
    TaitEdge e;
    e.u = vertex_of_face.at(d.quadrant_face(ki, s));
    e.v = vertex_of_face.at(d.quadrant_face(ki, s + 2));
    e.sign = shaded ? d.crossings[k].checkerboard_sign : -d.crossings[k].checkerboard_sign;
    e.crossing_id = d.crossings[k].id;
    g.edges.push_back(e);
  }
  return g;
}

bool connected_with(const TaitGraph& g, const std::vector<int>& edge_ids) {
  DisjointSets sets(g.vertex_count());
  int components = g.vertex_count();
  for (int i : edge_ids) {
    const auto& e = g.edges[static_cast<std::size_t>(i)];
    if (sets.unite(e.u, e.v)) --components;
  }
  return components <= 1;
}

class TreeEnumerator {
 public:
  TreeEnumerator(const TaitGraph& g, const std::function<void(const SpanningTree&)>& visit)
      : g_(g), visit_(visit) {}

  std::size_t run() {
    std::vector<int> all(static_cast<std::size_t>(g_.edge_count()));
    std::iota(all.begin(), all.end(), 0);
    if (g_.vertex_count() == 0 || !connected_with(g_, all)) return 0;
    chosen_.clear();
    recurse(0);
    return count_;
  }

 private:
  void recurse(int i) {
    if (static_cast<int>(chosen_.size()) == g_.vertex_count() - 1) {
      SpanningTree t{chosen_};
      visit_(t);
      ++count_;
      return;
    }
    if (i == g_.edge_count()) return;
    const auto& e = g_.edges[static_cast<std::size_t>(i)];
    // Loop after contracting the chosen edges: never in a tree.
    if (!closes_cycle(e)) {
      chosen_.push_back(i);
      recurse(i + 1);
      chosen_.pop_back();
    }
    // Deletion is allowed only if the rest can still span.
    std::vector<int> rest = chosen_;
    for (int j = i + 1; j < g_.edge_count(); ++j) rest.push_back(j);
    if (connected_with(g_, rest)) recurse(i + 1);
  }

  bool closes_cycle(const TaitEdge& e) const {
    DisjointSets sets(g_.vertex_count());
    for (int j : chosen_) {
      const auto& f = g_.edges[static_cast<std::size_t>(j)];
      sets.unite(f.u, f.v);
    }
    return sets.find(e.u) == sets.find(e.v);
  }

  const TaitGraph& g_;
  const std::function<void(const SpanningTree&)>& visit_;
  std::vector<int> chosen_;
  std::size_t count_ = 0;
};

}  // namespace

TaitGraph build_tait(const LinkDiagram& d) {
  if (!d.colored) throw Error(ErrorCode::InvalidArgument, "diagram is not checkerboard coloured");
  return tait_on(d, true);
}

TaitGraph dual_tait(const TaitGraph& g, const LinkDiagram& d) {
  if (!d.colored) throw Error(ErrorCode::InvalidArgument, "diagram is not checkerboard coloured");
  return tait_on(d, !g.on_shaded);
}

std::size_t for_each_spanning_tree(const TaitGraph& g,
                                   const std::function<void(const SpanningTree&)>& visit) {
  return TreeEnumerator(g, visit).run();
}

std::vector<SpanningTree> spanning_trees(const TaitGraph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

std::vector<Letter> tree_letters(const TaitGraph& g, const SpanningTree& t) {
  const int m = g.edge_count();
  std::vector<bool> in_tree(static_cast<std::size_t>(m), false);
  for (int i : t.edges) in_tree[static_cast<std::size_t>(i)] = true;
  std::vector<Letter> letters(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& e = g.edges[static_cast<std::size_t>(i)];
    DisjointSets sets(g.vertex_count());
    bool active;
    if (in_tree[static_cast<std::size_t>(i)]) {
      // Lowest edge of its fundamental cut: no lower edge reconnects T - e.
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        if (in_tree[static_cast<std::size_t>(j)] || j < i)
          sets.unite(g.edges[static_cast<std::size_t>(j)].u, g.edges[static_cast<std::size_t>(j)].v);
      }
      active = sets.find(e.u) != sets.find(e.v);
    } else {
      // Lowest edge of its fundamental cycle: the tree path avoids lower edges.
      for (int j = i + 1; j < m; ++j)
        if (in_tree[static_cast<std::size_t>(j)])
          sets.unite(g.edges[static_cast<std::size_t>(j)].u, g.edges[static_cast<std::size_t>(j)].v);
      active = sets.find(e.u) == sets.find(e.v);
    }
    Letter x = in_tree[static_cast<std::size_t>(i)] ? (active ? Letter::L : Letter::D)
                                                     : (active ? Letter::l : Letter::d);
    letters[static_cast<std::size_t>(i)] = barred(x, e.sign < 0);
  }
  return letters;
}

ActivityWord tree_activity_word(const TaitGraph& g, const SpanningTree& t) {
  ActivityWord w;
  for (Letter x : tree_letters(g, t)) w.add(x);
  return w;
}

LaurentPoly1 thistlethwaite_sum(const TaitGraph& g) {
  std::map<int, Integer> counts;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    const LaurentPoly1 image = specialize_bracket(tree_activity_word(g, t));
    const auto& term = image.terms()[0];
    counts[term.exp[0]] += term.coeff;
  });
  std::vector<LaurentPoly1::Term> terms;
  for (const auto& [e, c] : counts) terms.push_back({{e}, c});
  return LaurentPoly1::from_terms(std::move(terms));
}

std::string tait_to_dot(const TaitGraph& g, const std::optional<SpanningTree>& tree) {
  std::ostringstream out;
  out << "graph " << (g.on_shaded ? "tait" : "dual_tait") << " {\n";
  for (int f : g.vertex_faces) out << "  f" << f << " [shape=ellipse];\n";
  std::vector<Letter> letters;
  std::vector<bool> in_tree(g.edges.size(), false);
  if (tree) {
    letters = tree_letters(g, *tree);
    for (int i : tree->edges) in_tree[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    out << "  f" << g.vertex_faces[static_cast<std::size_t>(e.u)] << " -- f"
        << g.vertex_faces[static_cast<std::size_t>(e.v)] << " [label=\"" << (e.sign > 0 ? "+" : "-");
    if (tree) out << " " << letter_name(letters[i]);
    out << "\", crossing=" << e.crossing_id;
    if (tree && in_tree[i]) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tait_to_json(const TaitGraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = g.on_shaded ? "tait" : "dual";
  j["vertices"] = g.vertex_faces;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json ej;
    ej["u"] = g.vertex_faces[static_cast<std::size_t>(e.u)];
    ej["v"] = g.vertex_faces[static_cast<std::size_t>(e.v)];
    ej["sign"] = e.sign;
    ej["crossing"] = e.crossing_id;
    j["edges"].push_back(ej);
  }
  return j.dump(2);
}

}  // namespace dimerknot
