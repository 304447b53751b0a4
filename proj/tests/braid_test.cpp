#include <random>

#include "support.hpp"

using namespace dimerknot;

namespace {
ErrorCode code_of(const char* text, std::optional<int> strands = std::nullopt) {
  try {
    (void)parse_braid(text, strands);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("parse") {
  auto w = parse_braid("s1^3");
  CHECK(w.strands() == 2);
  CHECK(w.syllables() == std::vector<Syllable>{{1, 3}});
  CHECK(parse_braid("s1^4").syllables() == std::vector<Syllable>{{1, 4}});
  w = parse_braid("s1^2 s2^-1");
  CHECK(w.strands() == 3);
  CHECK(w.syllables() == std::vector<Syllable>{{1, 2}, {2, -1}});
  CHECK(parse_braid("s1*s2*s1") == parse_braid("s1 s2 s1"));
  CHECK(parse_braid("s1", 4).strands() == 4);
  CHECK(parse_braid("s1 s1").syllables().size() == 2);
}

TEST_CASE("parse errors") {
  CHECK(code_of("x1") == ErrorCode::SyntaxError);
  CHECK(code_of("s0") == ErrorCode::SyntaxError);
  CHECK(code_of("s1^") == ErrorCode::SyntaxError);
  CHECK(code_of("") == ErrorCode::SyntaxError);
  CHECK(code_of("s1^0") == ErrorCode::ZeroExponent);
  CHECK(code_of("s3", 3) == ErrorCode::StrandMismatch);
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_braid("s1^3")) == 3);
  CHECK(writhe(parse_braid("s1^-1")) == -1);
  CHECK(writhe(parse_braid("s1^2 s2^-2")) == 0);
}

TEST_CASE("family membership") {
  CHECK(is_homogeneous_family(parse_braid("s1^3")));
  CHECK(is_homogeneous_family(parse_braid("s1^2 s2^5")));
  CHECK(is_homogeneous_family(parse_braid("s1^-2 s2^-1 s3^-4")));
  CHECK_FALSE(is_homogeneous_family(parse_braid("s1 s2 s1")));
  CHECK_FALSE(is_homogeneous_family(parse_braid("s1^2 s2^-1")));
  CHECK_FALSE(is_homogeneous_family(parse_braid("s2 s1")));
  CHECK_FALSE(is_homogeneous_family(parse_braid("s1", 3)));
}

TEST_CASE("round trip and writhe additivity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(1, 5), exp(-4, 4), len(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto random_word = [&] {
      std::vector<Syllable> s;
      for (int k = len(rng); k > 0; --k) {
        int e = 0;
        while (e == 0) e = exp(rng);
        s.push_back({gen(rng), e});
      }
      return BraidWord(6, s);
    };
    const BraidWord u = random_word(), v = random_word();
    CHECK(parse_braid(to_string(u), 6) == u);
    CHECK(writhe(concat(u, v)) == writhe(u) + writhe(v));
    CHECK(u.mirrored().mirrored() == u);
    CHECK(writhe(u.mirrored()) == -writhe(u));
  }
}

TEST_CASE("family word") {
  const auto w = family_word({2, 3, 1});
  CHECK(to_string(w) == "s1^2 s2^3 s3");
  CHECK(w.crossing_count() == 6);
}
