#include "dimerknot/diagram.hpp"

#include <algorithm>
#include <queue>

#include "dimerknot/error.hpp"
#include "json.hpp"

namespace dimerknot {

namespace {

// Top and bottom darts where a crossing meets a strand column.
struct ColumnVisit {
  int top;
  int bottom;
};

const char* corner_name(int corner) {
  static constexpr const char* names[] = {"top", "left", "bottom", "right"};
  return names[corner];
}

int first_crossing_with(const LinkDiagram& d, int generator) {
  for (std::size_t k = 0; k < d.crossings.size(); ++k)
    if (d.crossings[k].generator == generator) return static_cast<int>(k);
  throw Error(ErrorCode::InvalidArgument, "no crossing on generator " + std::to_string(generator));
}

}  // namespace

LinkDiagram close_braid(const BraidWord& w) {
  LinkDiagram d;
  d.source = w;
  const int n = w.strands();
  const auto word = w.crossings();
  const int c = static_cast<int>(word.size());

  if (c == 0) {
    if (n != 1) throw Error(ErrorCode::DisconnectedLink, "trivial braid on several strands");
    d.free_loops = 1;
    d.faces = {Face{0, {}, false, true}, Face{1, {}, false, false}};
    d.outer_face = 0;
    return d;
  }
  std::vector<bool> present(static_cast<std::size_t>(n), false);
  for (const auto& x : word) present[static_cast<std::size_t>(x.generator)] = true;
  for (int i = 1; i < n; ++i)
    if (!present[static_cast<std::size_t>(i)])
      throw Error(ErrorCode::DisconnectedLink,
                  "generator s" + std::to_string(i) + " absent, closure splits");

  // Dart k*4 + j is the top-right (j=0), top-left, bottom-left or
  // bottom-right (j=3) half-edge of crossing k.
  constexpr int kTopRightDart = 0, kTopLeftDart = 1, kBottomLeftDart = 2, kBottomRightDart = 3;
  std::vector<std::vector<ColumnVisit>> columns(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < c; ++k) {
    const auto& x = word[static_cast<std::size_t>(k)];
    Crossing cr;
    cr.id = k + 1;
    cr.generator = x.generator;
    cr.oriented_sign = x.sign;
    // A positive crossing has its over-strand from top-right to bottom-left,
    // so its under-strand runs through the top-left and bottom-right darts.
    const int first_under = x.sign > 0 ? kTopLeftDart : kTopRightDart;
    for (int s = 0; s < 4; ++s) cr.slots[static_cast<std::size_t>(s)] = dart_of(k, (first_under + s) % 4);
    d.crossings.push_back(cr);
    columns[static_cast<std::size_t>(x.generator)].push_back(
        {dart_of(k, kTopLeftDart), dart_of(k, kBottomLeftDart)});
    columns[static_cast<std::size_t>(x.generator) + 1].push_back(
        {dart_of(k, kTopRightDart), dart_of(k, kBottomRightDart)});
  }

  d.mate.assign(static_cast<std::size_t>(4 * c), -1);
  for (int p = 1; p <= n; ++p) {
    const auto& col = columns[static_cast<std::size_t>(p)];
    for (std::size_t j = 0; j < col.size(); ++j) {
      const bool closure = j + 1 == col.size();
      const int lower = col[closure ? 0 : j + 1].top;
      Arc arc{p, {col[j].bottom, lower}, closure};
      d.mate[static_cast<std::size_t>(arc.darts[0])] = arc.darts[1];
      d.mate[static_cast<std::size_t>(arc.darts[1])] = arc.darts[0];
      d.arcs.push_back(arc);
    }
  }

  // Face tracing: the corner after corner d is the one at the far end of the
  // arc leaving through the next dart counterclockwise.
  d.face_of_corner.assign(static_cast<std::size_t>(4 * c), -1);
  for (int start = 0; start < 4 * c; ++start) {
    if (d.face_of_corner[static_cast<std::size_t>(start)] != -1) continue;
    Face f;
    f.id = static_cast<int>(d.faces.size());
    int dart = start;
    do {
      d.face_of_corner[static_cast<std::size_t>(dart)] = f.id;
      f.boundary.push_back(dart);
      dart = d.mate[static_cast<std::size_t>(rotate_ccw(dart))];
    } while (dart != start);
    d.faces.push_back(std::move(f));
  }
  d.outer_face = d.face_at(first_crossing_with(d, 1), kLeft);
  d.faces[static_cast<std::size_t>(d.outer_face)].is_outer = true;
  return d;
}

LinkDiagram checkerboard(LinkDiagram d) {
  if (d.crossings.empty()) {
    for (auto& f : d.faces) f.shaded = !f.is_outer;
    d.colored = true;
    return d;
  }
  const std::size_t nf = d.faces.size();
  std::vector<std::vector<int>> across(nf);
  // The two corners flanking a dart lie on opposite sides of its arc.
  for (std::size_t dart = 0; dart < d.face_of_corner.size(); ++dart) {
    const int f = d.face_of_corner[dart];
    const int g = d.face_of_corner[static_cast<std::size_t>(rotate_cw(static_cast<int>(dart)))];
    across[static_cast<std::size_t>(f)].push_back(g);
    across[static_cast<std::size_t>(g)].push_back(f);
  }
  std::vector<int> color(nf, -1);
  std::queue<int> queue;
  color[static_cast<std::size_t>(d.outer_face)] = 0;
  queue.push(d.outer_face);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : across[static_cast<std::size_t>(f)]) {
      auto& cg = color[static_cast<std::size_t>(g)];
      const int want = 1 - color[static_cast<std::size_t>(f)];
      if (cg == -1) {
        cg = want;
        queue.push(g);
      } else if (cg != want) {
        throw Error(ErrorCode::ColoringContradiction,
                    "faces " + std::to_string(f) + " and " + std::to_string(g));
      }
    }
  }
  for (std::size_t f = 0; f < nf; ++f) {
    if (color[f] == -1) throw Error(ErrorCode::ColoringContradiction, "unreached face");
    d.faces[f].shaded = color[f] == 1;
  }
  d.colored = true;
  for (std::size_t k = 0; k < d.crossings.size(); ++k)
    d.crossings[k].checkerboard_sign = checkerboard_sign(d, static_cast<int>(k));
  return d;
}

LinkDiagram build_diagram(const BraidWord& w) { return checkerboard(close_braid(w)); }

int checkerboard_sign(const LinkDiagram& d, int crossing_index) {
  const int f = d.quadrant_face(crossing_index, 1);
  return d.faces[static_cast<std::size_t>(f)].shaded ? 1 : -1;
}

int inner_face(const LinkDiagram& d) {
  const int n = d.source.strands();
  return d.face_at(first_crossing_with(d, n - 1), kRight);
}

int band_face(const LinkDiagram& d, int p) {
  return d.face_at(first_crossing_with(d, p), kTop);
}

std::string diagram_to_json(const LinkDiagram& d) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["braid"] = to_string(d.source);
  j["strands"] = d.source.strands();
  j["crossings"] = ordered_json::array();
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const auto& c = d.crossings[k];
    ordered_json cj;
    cj["id"] = c.id;
    cj["generator"] = c.generator;
    cj["oriented_sign"] = c.oriented_sign;
    cj["checkerboard_sign"] = c.checkerboard_sign;
    cj["slots"] = c.slots;
    ordered_json quads = ordered_json::array();
    for (int s = 0; s < 4; ++s) quads.push_back(d.quadrant_face(static_cast<int>(k), s));
    cj["quadrant_faces"] = quads;
    j["crossings"].push_back(cj);
  }
  j["arcs"] = ordered_json::array();
  for (const auto& a : d.arcs) {
    ordered_json aj;
    aj["position"] = a.position;
    aj["darts"] = a.darts;
    aj["closure"] = a.closure;
    j["arcs"].push_back(aj);
  }
  j["faces"] = ordered_json::array();
  for (const auto& f : d.faces) {
    ordered_json fj;
    fj["id"] = f.id;
    fj["shaded"] = f.shaded;
    fj["outer"] = f.is_outer;
    ordered_json corners = ordered_json::array();
    for (int dart : f.boundary) {
      ordered_json cj;
      cj["crossing"] = crossing_of(dart) + 1;
      cj["corner"] = corner_name(corner_of(dart));
      corners.push_back(cj);
    }
    fj["boundary"] = corners;
    j["faces"].push_back(fj);
  }
  return j.dump(2);
}

}  // namespace dimerknot
