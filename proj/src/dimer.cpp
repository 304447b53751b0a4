#include "dimerknot/dimer.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "dimerknot/diagram.hpp"
#include "dimerknot/error.hpp"
#include "dimerknot/kauffman.hpp"
#include "json.hpp"

namespace dimerknot {

namespace {

// Dense GF(2) row: unknown bits followed by the right-hand side bit.
class Gf2Row {
 public:
  explicit Gf2Row(std::size_t unknowns) : unknowns_(unknowns), words_((unknowns + 64) / 64, 0) {}
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool rhs() const { return get(unknowns_); }
  void set_rhs(bool v) {
    if (rhs() != v) flip(unknowns_);
  }
  Gf2Row& operator^=(const Gf2Row& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

 private:
  std::size_t unknowns_;
  std::vector<std::uint64_t> words_;
};

std::vector<int> solve_gf2(std::vector<Gf2Row> rows, std::size_t unknowns) {
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r].get(col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
    pivot_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i].rhs()) throw Error(ErrorCode::NoSolution, "Kasteleyn parity system is inconsistent");
  std::vector<int> x(unknowns, 0);
  for (std::size_t i = 0; i < rank; ++i) x[static_cast<std::size_t>(pivot_of_row[i])] = rows[i].rhs() ? 1 : 0;
  return x;
}

bool needs_odd(int length) { return length % 4 == 0; }

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

template <class Entry, class Render>
std::string aligned_text(const OverlayGraph& g, const DenseMatrix<Entry>& m, Render render) {
  const std::size_t n = m.rows();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t c = 0; c < n; ++c) cells[0][c + 1] = "f" + std::to_string(g.face_ids[c]);
  for (std::size_t r = 0; r < n; ++r) {
    cells[r + 1][0] = "c" + std::to_string(g.crossing_ids[r]);
    for (std::size_t c = 0; c < n; ++c) cells[r + 1][c + 1] = render(m(r, c));
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c <= n; ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

OverlayGraph kasteleyn_sign(OverlayGraph g) {
  const auto faces = overlay_faces(g);
  const std::size_t unknowns = g.edges.size();
  std::vector<Gf2Row> rows;
  for (const auto& f : faces) {
    if (!f.bounded) continue;
    Gf2Row row(unknowns);
    for (int dart : f.darts) row.flip(static_cast<std::size_t>(dart / 2));
    row.set_rhs(needs_odd(f.length()));
    rows.push_back(std::move(row));
  }
  const auto x = solve_gf2(std::move(rows), unknowns);
  for (std::size_t e = 0; e < unknowns; ++e) g.edges[e].kasteleyn_sign = x[e] ? -1 : 1;
  return g;
}

std::vector<FaceParity> kasteleyn_report(const OverlayGraph& g) {
  std::vector<FaceParity> out;
  for (const auto& f : overlay_faces(g)) {
    FaceParity p;
    p.length = f.length();
    p.bounded = f.bounded;
    for (int dart : f.darts)
      if (g.edges[static_cast<std::size_t>(dart / 2)].kasteleyn_sign < 0) ++p.negative_edges;
    p.satisfied = !p.bounded || (p.negative_edges % 2 == 1) == needs_odd(p.length);
    out.push_back(p);
  }
  return out;
}

bool is_kasteleyn(const OverlayGraph& g) {
  const auto report = kasteleyn_report(g);
  return std::all_of(report.begin(), report.end(), [](const FaceParity& p) { return p.satisfied; });
}

DenseMatrix<LaurentPoly1> adjacency_matrix(const OverlayGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  DenseMatrix<LaurentPoly1> m(n, g.face_ids.size());
  for (const auto& e : g.edges) {
    LaurentPoly1 w = specialize_bracket(e.letter);
    m(static_cast<std::size_t>(e.crossing), static_cast<std::size_t>(e.face)) = e.kasteleyn_sign < 0 ? -w : w;
  }
  return m;
}

DenseMatrix<LetterPoly> symbolic_adjacency_matrix(const OverlayGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  DenseMatrix<LetterPoly> m(n, g.face_ids.size());
  for (const auto& e : g.edges)
    m(static_cast<std::size_t>(e.crossing), static_cast<std::size_t>(e.face)) =
        letter_poly(e.letter, e.kasteleyn_sign);
  return m;
}

LaurentPoly1 determinant(const DenseMatrix<LaurentPoly1>& m, DeterminantStats* stats) {
  return bareiss_determinant(m, stats);
}

LetterPoly symbolic_determinant(const DenseMatrix<LetterPoly>& m) { return laplace_determinant(m); }

std::optional<std::vector<int>> find_matching(const OverlayGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  if (g.face_ids.size() != n) return std::nullopt;
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    incident[static_cast<std::size_t>(g.edges[e].crossing)].push_back(static_cast<int>(e));
  std::vector<int> edge_of_crossing(n, -1), edge_of_face(n, -1);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, int k) -> bool {
    for (int e : incident[static_cast<std::size_t>(k)]) {
      const auto w = static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].face);
      if (visited[w]) continue;
      visited[w] = true;
      const int holder = edge_of_face[w];
      if (holder == -1 || self(self, g.edges[static_cast<std::size_t>(holder)].crossing)) {
        edge_of_face[w] = e;
        edge_of_crossing[static_cast<std::size_t>(k)] = e;
        return true;
      }
    }
    return false;
  };
  for (std::size_t k = 0; k < n; ++k) {
    visited.assign(n, false);
    if (!augment(augment, static_cast<int>(k))) return std::nullopt;
  }
  return edge_of_crossing;
}

int fix_sign(const OverlayGraph& g) {
  const auto matching = find_matching(g);
  if (!matching) return 1;
  std::vector<int> perm;
  int sign = 1;
  for (int e : *matching) {
    const auto& edge = g.edges[static_cast<std::size_t>(e)];
    perm.push_back(edge.face);
    sign *= edge.kasteleyn_sign;
  }
  return sign * permutation_sign(perm);
}

OverlayGraph signed_overlay(const BraidWord& w) {
  if (!is_homogeneous_family(w))
    throw Error(ErrorCode::UnsupportedWord,
                "\"" + to_string(w) + "\" is not of the form s1^m1 ... s(n-1)^m(n-1)");
  return kasteleyn_sign(build_overlay(build_diagram(w)));
}

LaurentPoly1 bracket_via_det(const BraidWord& w, DeterminantStats* stats) {
  const OverlayGraph g = signed_overlay(w);
  const LaurentPoly1 det = determinant(adjacency_matrix(g), stats);
  return fix_sign(g) < 0 ? -det : det;
}

LaurentPoly1 jones_via_det(const BraidWord& w, DeterminantStats* stats) {
  const int wr = writhe(w);
  const LaurentPoly1 correction = mono(-3 * wr, wr % 2 == 0 ? 1 : -1);
  return correction * bracket_via_det(w, stats);
}

std::string matrix_to_text(const OverlayGraph& g, bool symbolic) {
  if (symbolic) {
    return aligned_text(g, symbolic_adjacency_matrix(g),
                        [](const LetterPoly& p) { return to_string(p); });
  }
  return aligned_text(g, adjacency_matrix(g), [](const LaurentPoly1& p) { return to_string(p); });
}

std::string matrix_to_json(const OverlayGraph& g, bool symbolic) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["rows"] = g.crossing_ids;
  j["columns"] = g.face_ids;
  j["symbolic"] = symbolic;
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::vector<const OverlayEdge*>> at(n, std::vector<const OverlayEdge*>(g.face_ids.size()));
  for (const auto& e : g.edges) at[static_cast<std::size_t>(e.crossing)][static_cast<std::size_t>(e.face)] = &e;
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < g.face_ids.size(); ++c) {
      const OverlayEdge* e = at[r][c];
      if (!e) {
        row.push_back(nullptr);
      } else if (symbolic) {
        ordered_json cell;
        cell["sign"] = e->kasteleyn_sign;
        cell["letter"] = letter_name(e->letter);
        row.push_back(cell);
      } else {
        const LaurentPoly1 w = specialize_bracket(e->letter);
        row.push_back(ordered_json::parse(to_json(e->kasteleyn_sign < 0 ? -w : w)));
      }
    }
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["sign"] = fix_sign(g);
  return j.dump(2);
}

}  // namespace dimerknot
