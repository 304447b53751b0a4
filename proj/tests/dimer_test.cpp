#include <random>

#include "support.hpp"
#include "dimerknot/dimer.hpp"
#include "dimerknot/jones.hpp"
#include "dimerknot/oracle.hpp"
#include "dimerknot/overlay.hpp"

using namespace dimerknot;
using testing::A;

TEST_CASE("kasteleyn signing of small overlays") {
  const auto g2 = signed_overlay(parse_braid("s1^2"));
  const auto faces = overlay_faces(g2);
  int bounded = 0;
  for (const auto& f : faces)
    if (f.bounded) {
      ++bounded;
      CHECK(f.length() == 4);
    }
  CHECK(bounded == 1);
  CHECK(is_kasteleyn(g2));
  int negative = 0;
  for (const auto& e : g2.edges) negative += e.kasteleyn_sign < 0;
  CHECK(negative % 2 == 1);

  CHECK(is_kasteleyn(signed_overlay(parse_braid("s1^3"))));
  CHECK(is_kasteleyn(signed_overlay(parse_braid("s1^3 s2^2"))));
}

TEST_CASE("trefoil matrix") {
  const auto g = signed_overlay(parse_braid("s1^3"));
  const auto m = symbolic_adjacency_matrix(g);
  CHECK(m.rows() == 3);
  const LetterPoly det = symbolic_determinant(m);
  const LetterPoly expected = word_poly(parse_word("L^2 d")) + word_poly(parse_word("d D L")) +
                              word_poly(parse_word("l D^2"));
  CHECK((det == expected || det == -expected));
  CHECK(fix_sign(g) * det == expected);
  // Zero entries exactly where there is no incidence.
  const auto numeric = adjacency_matrix(g);
  int nonzero = 0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) nonzero += !numeric(r, c).is_zero();
  CHECK(nonzero == static_cast<int>(g.edges.size()));
}

TEST_CASE("one crossing") {
  const auto g = signed_overlay(parse_braid("s1"));
  CHECK(g.size() == 1);
  const auto m = symbolic_adjacency_matrix(g);
  CHECK(m(0, 0) == letter_poly(Letter::l, g.edges[0].kasteleyn_sign));
  CHECK(fix_sign(g) * g.edges[0].kasteleyn_sign == 1);
  CHECK(bracket_via_det(parse_braid("s1")) == mono(3, -1));
}

TEST_CASE("determinant basics") {
  DenseMatrix<LaurentPoly1> upper(3, 3);
  upper(0, 0) = A("A + 1");
  upper(0, 1) = A("A^5");
  upper(0, 2) = A("7");
  upper(1, 1) = A("A^-2");
  upper(1, 2) = A("A^3 - 1");
  upper(2, 2) = A("2 A - 3");
  CHECK(determinant(upper) == A("A + 1") * A("A^-2") * A("2 A - 3"));
  CHECK(determinant(DenseMatrix<LaurentPoly1>::identity(5)) == LaurentPoly1(1));
  DenseMatrix<LaurentPoly1> swapped(2, 2);
  swapped(0, 1) = A("A");
  swapped(1, 0) = A("A^2");
  CHECK(determinant(swapped) == mono(3, -1));
  DenseMatrix<LaurentPoly1> singular(2, 2);
  singular(0, 1) = A("A");
  singular(1, 1) = A("A^2");
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("bareiss matches cofactor expansion on random sparse matrices") {
  std::mt19937 rng(42);
  std::bernoulli_distribution sparse(0.45);
  for (int trial = 0; trial < 25; ++trial) {
    DenseMatrix<LaurentPoly1> m(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        if (sparse(rng)) m(r, c) = testing::random_poly(rng, 3, 4);
    CHECK(determinant(m) == cofactor_det(m));
    CHECK(laplace_determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("sign-fixed determinant equals the partition function") {
  for (const auto& w : family_corpus(4, 3)) {
    const auto g = signed_overlay(w);
    CHECK(is_kasteleyn(g));
    const auto det = determinant(adjacency_matrix(g));
    CHECK(fix_sign(g) * det == partition_function(g));
  }
}

TEST_CASE("jones via determinant") {
  CHECK(jones_via_det(parse_braid("s1^3")) == A("A^-4 + A^-12 - A^-16"));
  CHECK(jones_via_det(parse_braid("s1^-3")) == A("A^-4 + A^-12 - A^-16").inverted());
  CHECK(jones_via_det(parse_braid("s1^2 s2^2")) == jones_state_sum(parse_braid("s1^2 s2^2")));
  try {
    (void)jones_via_det(parse_braid("s1 s2 s1"));
    FAIL("expected UnsupportedWord");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedWord);
  }
}

TEST_CASE("operation counts are reported") {
  DeterminantStats stats;
  (void)jones_via_det(family_word({5, 5}), &stats);
  CHECK(stats.ring_operations() > 0);
}

TEST_CASE("matrix rendering") {
  const auto g = signed_overlay(parse_braid("s1^3"));
  const auto text = matrix_to_text(g, true);
  CHECK(text.find("c1") != std::string::npos);
  CHECK(text.find("f") != std::string::npos);
  const auto json = matrix_to_json(g, true);
  CHECK(json.find("\"letter\": \"L\"") != std::string::npos);
  CHECK(matrix_to_json(g, false).find("\"variable\": \"A\"") != std::string::npos);
}
