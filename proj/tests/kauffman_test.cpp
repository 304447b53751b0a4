#include "support.hpp"
#include "dimerknot/jones.hpp"
#include "dimerknot/kauffman.hpp"
#include "dimerknot/overlay.hpp"

using namespace dimerknot;
using testing::A;
using testing::az;

TEST_CASE("bracket specialisation") {
  CHECK(specialize_bracket(parse_word("L^2 d")) == mono(-7));
  CHECK(specialize_bracket(parse_word("l D^2")) == mono(5, -1));
  CHECK(specialize_bracket(parse_word("Lbar lbar")) == LaurentPoly1(1));
  CHECK(specialize_bracket(Letter::Dbar) == mono(-1));
  CHECK(specialize_bracket(Letter::dbar) == mono(1));
}

TEST_CASE("kauffman specialisation") {
  CHECK(specialize_kauffman(parse_word("L d")) == az("a z"));
  CHECK(specialize_kauffman(parse_word("l D")) == az("a^-1 z"));
  CHECK(specialize_kauffman(parse_word("l")) == az("a^-1"));
  try {
    (void)specialize_kauffman(parse_word("Lbar"));
    FAIL("expected BarredLetter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BarredLetter);
  }
}

TEST_CASE("P_q") {
  CHECK(P(0) == az("(a + a^-1) z^-1 - 1"));
  CHECK(P(1) == az("a^-1"));
  CHECK(P(2) == az("a z + a^-1 z"));
  CHECK(P(3) == az("a^2 z + a z^2 + a^-1 z^2"));
  for (int q = 2; q <= 15; ++q) CHECK(P(q) == mono_az(q - 1, 1) + mono_az(0, 1) * P(q - 1));
  CHECK_THROWS_AS(P(-1), Error);
}

TEST_CASE("g_n") {
  CHECK(g(0) == LaurentPoly2(1));
  CHECK(g(1) == az("z"));
  CHECK(g(2) == az("z^2 - 1"));
  CHECK(g(3) == az("z^3 - 2 z"));
  for (int n = 2; n <= 20; ++n) {
    LaurentPoly2 rhs = mono_az(0, n);
    for (int i = 0; i <= n - 2; ++i) rhs -= mono_az(0, i) * g(n - 2 - i);
    CHECK(g(n) == rhs);
  }
  CHECK_THROWS_AS(g(-2), Error);
}

TEST_CASE("K(2,q)") {
  CHECK(K2q(0) == az("(a + a^-1) z^-1 - 1"));
  CHECK(K2q(1) == az("a^-1"));
  CHECK(K2q(2) == az("a z + a^-1 z - (a + a^-1) z^-1 + 1"));
  for (int q = 0; q <= 15; ++q) {
    const auto skein = K2q(q, KauffmanMethod::Skein);
    CHECK(K2q(q, KauffmanMethod::Prop) == skein);
    CHECK(K2q(q, KauffmanMethod::Closed) == skein);
  }
  CHECK_THROWS_AS(K2q(-1), Error);
}

TEST_CASE("F(2,q)") {
  CHECK(F2q(1) == az("a^-2"));
  CHECK(F2q(3) == mono_az(-3, 0) * K2q(3));
  // Odd q gives a knot and no z^-1 terms; even q gives a two-component link.
  for (int q = 1; q <= 15; q += 2)
    for (const auto& t : F2q(q).terms()) CHECK(t.exp[1] >= 0);
  bool even_has_negative = false;
  for (const auto& t : F2q(2).terms()) even_has_negative |= t.exp[1] < 0;
  CHECK(even_has_negative);
}

TEST_CASE("matching words specialise to P_q") {
  for (int q = 2; q <= 10; ++q) {
    const auto g = build_overlay(build_diagram(family_word({q})));
    LaurentPoly2 sum;
    for_each_perfect_matching(g, [&](const PerfectMatching& m) { sum += specialize_kauffman(matching_word(g, m)); });
    CHECK(sum == P(q));
  }
}
