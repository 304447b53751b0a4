#include <algorithm>

#include "support.hpp"
#include "dimerknot/jones.hpp"
#include "dimerknot/kauffman.hpp"
#include "dimerknot/overlay.hpp"
#include "dimerknot/tait.hpp"

using namespace dimerknot;

namespace {
OverlayGraph overlay_of(const BraidWord& w) { return build_overlay(build_diagram(w)); }

std::vector<ActivityWord> matching_words(const OverlayGraph& g) {
  std::vector<ActivityWord> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) { out.push_back(matching_word(g, m)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ActivityWord> pq_words(int q) {
  std::vector<ActivityWord> out;
  ActivityWord first;
  first.add(Letter::l);
  first.add(Letter::D, q - 1);
  out.push_back(first);
  for (int i = 1; i <= q - 1; ++i) {
    ActivityWord w;
    w.add(Letter::d);
    w.add(Letter::L, i);
    w.add(Letter::D, q - 1 - i);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Letter letter_between(const OverlayGraph& g, int crossing, int face) {
  for (const auto& e : g.edges)
    if (e.crossing == crossing && e.face == face) return e.letter;
  FAIL("no edge");
  return Letter::L;
}
}  // namespace

TEST_CASE("trefoil overlay") {
  const auto g = overlay_of(parse_braid("s1^3"));
  CHECK(g.size() == 3);
  CHECK(g.face_ids.size() == 3);
  CHECK(g.edges.size() == 7);
  // W = two shaded bigons then the outer face.
  CHECK(g.face_shaded == std::vector<bool>{true, true, false});
  CHECK(letter_between(g, 0, 0) == Letter::L);
  CHECK(letter_between(g, 1, 0) == Letter::D);
  CHECK(letter_between(g, 1, 1) == Letter::L);
  CHECK(letter_between(g, 2, 1) == Letter::D);
  CHECK(letter_between(g, 0, 2) == Letter::l);
  CHECK(letter_between(g, 1, 2) == Letter::d);
  CHECK(letter_between(g, 2, 2) == Letter::d);
}

TEST_CASE("ladder shape of (2,q) overlays") {
  for (int q = 2; q <= 8; ++q) {
    const auto g = overlay_of(family_word({q}));
    CHECK(g.size() == q);
    CHECK(g.edges.size() == static_cast<std::size_t>(3 * q - 2));
    for (int i = 0; i + 1 < q; ++i) {
      CHECK(letter_between(g, i, i) == Letter::L);
      CHECK(letter_between(g, i + 1, i) == Letter::D);
    }
    CHECK(letter_between(g, 0, q - 1) == Letter::l);
    for (int i = 1; i < q; ++i) CHECK(letter_between(g, i, q - 1) == Letter::d);
  }
}

TEST_CASE("negative words carry bars") {
  const auto g = overlay_of(parse_braid("s1^-2"));
  for (const auto& e : g.edges) CHECK(is_barred(e.letter));
}

TEST_CASE("matching counts") {
  CHECK(perfect_matchings(overlay_of(parse_braid("s1^3"))).size() == 3);
  for (int q = 1; q <= 10; ++q) CHECK(perfect_matchings(overlay_of(family_word({q}))).size() == static_cast<std::size_t>(q));
  OverlayGraph isolated = overlay_of(parse_braid("s1^2"));
  isolated.edges.erase(std::remove_if(isolated.edges.begin(), isolated.edges.end(),
                                      [](const OverlayEdge& e) { return e.crossing == 0; }),
                       isolated.edges.end());
  CHECK(perfect_matchings(isolated).empty());
}

TEST_CASE("partition function") {
  CHECK(partition_function(overlay_of(parse_braid("s1^3"))) == testing::A("-A^5 - A^-3 + A^-7"));
  for (int q = 2; q <= 8; ++q) {
    LaurentPoly1 pq;
    for (const auto& w : pq_words(q)) pq += specialize_bracket(w);
    CHECK(partition_function(overlay_of(family_word({q}))) == pq);
  }
}

TEST_CASE("matching words equal P_q and the tree words") {
  for (int q = 2; q <= 10; ++q) {
    const auto w = family_word({q});
    const auto m = matching_words(overlay_of(w));
    CHECK(m == pq_words(q));
    const auto g = build_tait(build_diagram(w));
    std::vector<ActivityWord> t;
    for_each_spanning_tree(g, [&](const SpanningTree& tree) { t.push_back(tree_activity_word(g, tree)); });
    std::sort(t.begin(), t.end());
    CHECK(m == t);
    for (const auto& word : m) CHECK(word.length() == q);
  }
}

TEST_CASE("balance and dimer identity on the corpus") {
  for (const auto& w : family_corpus(4, 3)) {
    const auto g = overlay_of(w);
    CHECK(g.size() == static_cast<int>(g.face_ids.size()));
    CHECK(partition_function(g) == bracket_state_sum(build_diagram(w)));
  }
}

TEST_CASE("two-column words factor over components") {
  for (int m1 = 1; m1 <= 4; ++m1) {
    for (int m2 = 1; m2 <= 4; ++m2) {
      const auto g = overlay_of(family_word({m1, m2}));
      int count = 0;
      const auto component = overlay_components(g, &count);
      CHECK(count == 2);
      // Restrict to each component and multiply the partition functions.
      LaurentPoly1 product(1);
      for (int c = 0; c < count; ++c) {
        OverlayGraph sub;
        std::vector<int> crossing_map(static_cast<std::size_t>(g.size()), -1), face_map(g.face_ids.size(), -1);
        for (std::size_t k = 0; k < static_cast<std::size_t>(g.size()); ++k)
          if (component[k] == c) {
            crossing_map[k] = sub.size();
            sub.crossing_ids.push_back(g.crossing_ids[k]);
            sub.crossing_signs.push_back(g.crossing_signs[k]);
          }
        for (std::size_t f = 0; f < g.face_ids.size(); ++f)
          if (component[static_cast<std::size_t>(g.size()) + f] == c) {
            face_map[f] = static_cast<int>(sub.face_ids.size());
            sub.face_ids.push_back(g.face_ids[f]);
            sub.face_shaded.push_back(g.face_shaded[f]);
          }
        for (const auto& e : g.edges)
          if (crossing_map[static_cast<std::size_t>(e.crossing)] >= 0) {
            OverlayEdge s = e;
            s.crossing = crossing_map[static_cast<std::size_t>(e.crossing)];
            s.face = face_map[static_cast<std::size_t>(e.face)];
            sub.edges.push_back(s);
          }
        product *= partition_function(sub);
      }
      CHECK(product == partition_function(g));
    }
  }
}

TEST_CASE("dot export") {
  const auto dot = overlay_to_dot(overlay_of(parse_braid("s1^3")));
  std::size_t boxes = 0, ellipses = 0;
  for (std::size_t p = dot.find("shape=box"); p != std::string::npos; p = dot.find("shape=box", p + 1)) ++boxes;
  for (std::size_t p = dot.find("shape=ellipse"); p != std::string::npos; p = dot.find("shape=ellipse", p + 1)) ++ellipses;
  CHECK(boxes == 3);
  CHECK(ellipses == 3);
}

TEST_CASE("non-family words are refused") {
  CHECK_THROWS_AS(overlay_of(parse_braid("s1 s2 s1")), Error);
}
