#include "dimerknot/overlay.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "dimerknot/error.hpp"
#include "dimerknot/kauffman.hpp"
#include "json.hpp"

namespace dimerknot {

namespace {

int lowest_crossing(const Face& f) {
  int low = -1;
  for (int dart : f.boundary) {
    const int k = crossing_of(dart);
    if (low == -1 || k < low) low = k;
  }
  return low;
}

class MatchingEnumerator {
 public:
  MatchingEnumerator(const OverlayGraph& g, const std::function<void(const PerfectMatching&)>& visit)
      : g_(g), visit_(visit) {
    const std::size_t n = static_cast<std::size_t>(g.size());
    crossing_edges_.resize(n);
    face_edges_.resize(g.face_ids.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      crossing_edges_[static_cast<std::size_t>(g.edges[e].crossing)].push_back(static_cast<int>(e));
      face_edges_[static_cast<std::size_t>(g.edges[e].face)].push_back(static_cast<int>(e));
    }
    crossing_match_.assign(n, -1);
    face_match_.assign(g.face_ids.size(), -1);
  }

  std::size_t run() {
    if (g_.face_ids.size() != static_cast<std::size_t>(g_.size())) return 0;
    recurse(0);
    return count_;
  }

 private:
  bool available(int e) const {
    const auto& edge = g_.edges[static_cast<std::size_t>(e)];
    return crossing_match_[static_cast<std::size_t>(edge.crossing)] == -1 &&
           face_match_[static_cast<std::size_t>(edge.face)] == -1;
  }

  void recurse(int matched) {
    if (matched == g_.size()) {
      visit_(PerfectMatching{crossing_match_});
      ++count_;
      return;
    }
    // Branch on the unmatched vertex with the fewest usable edges.
    const std::vector<int>* best = nullptr;
    int best_degree = -1;
    auto consider = [&](const std::vector<int>& incident, int match) {
      if (match != -1) return;
      int degree = 0;
      for (int e : incident) degree += available(e) ? 1 : 0;
      if (best_degree == -1 || degree < best_degree) {
        best_degree = degree;
        best = &incident;
      }
    };
    for (std::size_t k = 0; k < crossing_edges_.size(); ++k) consider(crossing_edges_[k], crossing_match_[k]);
    for (std::size_t w = 0; w < face_edges_.size(); ++w) consider(face_edges_[w], face_match_[w]);
    if (best_degree <= 0) return;
    const std::vector<int> choices = *best;
    for (int e : choices) {
      if (!available(e)) continue;
      const auto& edge = g_.edges[static_cast<std::size_t>(e)];
      crossing_match_[static_cast<std::size_t>(edge.crossing)] = e;
      face_match_[static_cast<std::size_t>(edge.face)] = e;
      recurse(matched + 1);
      crossing_match_[static_cast<std::size_t>(edge.crossing)] = -1;
      face_match_[static_cast<std::size_t>(edge.face)] = -1;
    }
  }

  const OverlayGraph& g_;
  const std::function<void(const PerfectMatching&)>& visit_;
  std::vector<std::vector<int>> crossing_edges_, face_edges_;
  std::vector<int> crossing_match_, face_match_;
  std::size_t count_ = 0;
};

int next_in(const std::vector<int>& rotation, int e) {
  const auto it = std::find(rotation.begin(), rotation.end(), e);
  const auto next = std::next(it);
  return next == rotation.end() ? rotation.front() : *next;
}

}  // namespace

OverlayGraph build_overlay(const LinkDiagram& d) {
  if (!d.colored) throw Error(ErrorCode::InvalidArgument, "diagram is not checkerboard coloured");
  if (!is_homogeneous_family(d.source))
    throw Error(ErrorCode::UnsupportedWord,
                "\"" + to_string(d.source) + "\" is not of the form s1^m1 ... s(n-1)^m(n-1)");
  OverlayGraph g;
  const int n = d.source.strands();
  const int first = band_face(d, 1);
  const int second = n >= 3 ? band_face(d, 2) : inner_face(d);
  g.deleted_faces = {first, second};
  if (d.faces[static_cast<std::size_t>(first)].shaded == d.faces[static_cast<std::size_t>(second)].shaded)
    throw Error(ErrorCode::UnbalancedGraph, "removed faces share a colour");

  for (const auto& c : d.crossings) {
    g.crossing_ids.push_back(c.id);
    g.crossing_signs.push_back(c.checkerboard_sign);
  }
  std::vector<std::tuple<bool, int, int>> order;  // (unshaded, lowest crossing, face id)
  for (const auto& f : d.faces) {
    if (f.id == first || f.id == second) continue;
    order.emplace_back(!f.shaded, lowest_crossing(f), f.id);
  }
  std::sort(order.begin(), order.end());
  std::map<int, int> w_of_face;
  for (const auto& [unshaded, low, id] : order) {
    w_of_face[id] = static_cast<int>(g.face_ids.size());
    g.face_ids.push_back(id);
    g.face_shaded.push_back(!unshaded);
  }
  if (g.face_ids.size() != g.crossing_ids.size())
    throw Error(ErrorCode::UnbalancedGraph, std::to_string(g.crossing_ids.size()) + " crossings vs " +
                                                std::to_string(g.face_ids.size()) + " faces");

  g.crossing_rotation.resize(g.crossing_ids.size());
  g.face_rotation.resize(g.face_ids.size());
  std::map<int, int> edge_of_corner;
  for (int k = 0; k < d.crossing_count(); ++k) {
    for (int corner = 0; corner < 4; ++corner) {
      const int f = d.face_at(k, corner);
      const auto it = w_of_face.find(f);
      if (it == w_of_face.end()) continue;
      bool seen = false;
      for (int e : g.crossing_rotation[static_cast<std::size_t>(k)])
        seen = seen || g.edges[static_cast<std::size_t>(e)].face == it->second;
      if (seen) continue;
      const int e = static_cast<int>(g.edges.size());
      g.edges.push_back({k, it->second, dart_of(k, corner), Letter::L, 1});
      g.crossing_rotation[static_cast<std::size_t>(k)].push_back(e);
      edge_of_corner[dart_of(k, corner)] = e;
    }
  }
  for (std::size_t w = 0; w < g.face_ids.size(); ++w) {
    const auto& boundary = d.faces[static_cast<std::size_t>(g.face_ids[w])].boundary;
    auto& rot = g.face_rotation[w];
    for (int dart : boundary) {
      const auto it = edge_of_corner.find(dart);
      if (it != edge_of_corner.end()) rot.push_back(it->second);
    }
    // Boundaries are traced clockwise about the face.
    std::reverse(rot.begin(), rot.end());
  }
  return overlay_activity_letters(std::move(g));
}

OverlayGraph overlay_activity_letters(OverlayGraph g) {
  for (std::size_t w = 0; w < g.face_ids.size(); ++w) {
    int lowest = -1;
    for (const auto& e : g.edges)
      if (e.face == static_cast<int>(w) && (lowest == -1 || e.crossing < lowest)) lowest = e.crossing;
    for (auto& e : g.edges) {
      if (e.face != static_cast<int>(w)) continue;
      Letter x = g.face_shaded[w] ? (e.crossing == lowest ? Letter::L : Letter::D)
                                  : (e.crossing == lowest ? Letter::l : Letter::d);
      e.letter = barred(x, g.crossing_signs[static_cast<std::size_t>(e.crossing)] < 0);
    }
  }
  return g;
}

std::vector<int> overlay_components(const OverlayGraph& g, int* count) {
  const int nv = g.size();
  const int total = nv + static_cast<int>(g.face_ids.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.crossing)].push_back(nv + e.face);
    adj[static_cast<std::size_t>(nv + e.face)].push_back(e.crossing);
  }
  std::vector<int> comp(static_cast<std::size_t>(total), -1);
  int next = 0;
  for (int s = 0; s < total; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<int> queue;
    queue.push(s);
    comp[static_cast<std::size_t>(s)] = next;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = next;
          queue.push(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<OverlayFace> overlay_faces(const OverlayGraph& g) {
  const auto comp = overlay_components(g);
  const std::size_t darts = 2 * g.edges.size();
  auto rotate = [&](int dart) {
    const auto& e = g.edges[static_cast<std::size_t>(dart / 2)];
    if (dart % 2 == 0) return 2 * next_in(g.crossing_rotation[static_cast<std::size_t>(e.crossing)], dart / 2);
    return 2 * next_in(g.face_rotation[static_cast<std::size_t>(e.face)], dart / 2) + 1;
  };
  std::vector<bool> seen(darts, false);
  std::vector<OverlayFace> faces;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    OverlayFace f;
    f.component = comp[static_cast<std::size_t>(g.edges[start / 2].crossing)];
    int dart = static_cast<int>(start);
    do {
      seen[static_cast<std::size_t>(dart)] = true;
      f.darts.push_back(dart);
      dart = rotate(dart) ^ 1;
    } while (dart != static_cast<int>(start));
    faces.push_back(std::move(f));
  }
  std::map<int, std::size_t> longest;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto [it, fresh] = longest.try_emplace(faces[i].component, i);
    if (!fresh && faces[i].length() > faces[it->second].length()) it->second = i;
  }
  for (const auto& [c, i] : longest) faces[i].bounded = false;
  return faces;
}

std::size_t for_each_perfect_matching(const OverlayGraph& g,
                                      const std::function<void(const PerfectMatching&)>& visit) {
  return MatchingEnumerator(g, visit).run();
}

std::vector<PerfectMatching> perfect_matchings(const OverlayGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

ActivityWord matching_word(const OverlayGraph& g, const PerfectMatching& m) {
  ActivityWord w;
  for (int e : m.edges) w.add(g.edges[static_cast<std::size_t>(e)].letter);
  return w;
}

LaurentPoly1 partition_function(const OverlayGraph& g) {
  std::map<int, Integer> counts;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    const LaurentPoly1 image = specialize_bracket(matching_word(g, m));
    const auto& term = image.terms()[0];
    counts[term.exp[0]] += term.coeff;
  });
  std::vector<LaurentPoly1::Term> terms;
  for (const auto& [e, c] : counts) terms.push_back({{e}, c});
  return LaurentPoly1::from_terms(std::move(terms));
}

std::string overlay_to_dot(const OverlayGraph& g) {
  std::ostringstream out;
  out << "graph overlay {\n";
  for (int id : g.crossing_ids) out << "  c" << id << " [shape=box];\n";
  for (std::size_t w = 0; w < g.face_ids.size(); ++w) {
    out << "  f" << g.face_ids[w] << " [shape=ellipse";
    if (g.face_shaded[w]) out << ", style=filled, fillcolor=gray80";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  c" << g.crossing_ids[static_cast<std::size_t>(e.crossing)] << " -- f"
        << g.face_ids[static_cast<std::size_t>(e.face)] << " [label=\"" << letter_name(e.letter) << "\"";
    if (e.kasteleyn_sign < 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string overlay_to_json(const OverlayGraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = "overlay";
  j["crossings"] = g.crossing_ids;
  j["faces"] = nlohmann::ordered_json::array();
  for (std::size_t w = 0; w < g.face_ids.size(); ++w) {
    nlohmann::ordered_json fj;
    fj["id"] = g.face_ids[w];
    fj["shaded"] = static_cast<bool>(g.face_shaded[w]);
    j["faces"].push_back(fj);
  }
  j["deleted_faces"] = g.deleted_faces;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json ej;
    ej["crossing"] = g.crossing_ids[static_cast<std::size_t>(e.crossing)];
    ej["face"] = g.face_ids[static_cast<std::size_t>(e.face)];
    ej["letter"] = letter_name(e.letter);
    ej["kasteleyn_sign"] = e.kasteleyn_sign;
    j["edges"].push_back(ej);
  }
  return j.dump(2);
}

}  // namespace dimerknot
