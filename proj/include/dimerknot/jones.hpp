#pragma once

// Bracket and Jones polynomial by any of the four equivalent routes.

#include <array>
#include <optional>
#include <vector>
#include <string>

#include "dimerknot/braid.hpp"
#include "dimerknot/laurent.hpp"
#include "dimerknot/matrix.hpp"
#include "dimerknot/oracle.hpp"

namespace dimerknot {

enum class Method { Det, Matchings, Trees, StateSum };

const char* to_string(Method m);
/// Accepts det, matchings, trees, statesum. Throws InvalidArgument.
Method parse_method(std::string_view text);

struct JonesOptions {
  StateSumOptions state_sum;
  DeterminantStats* stats = nullptr;  // filled by Method::Det
};

/// Det and Matchings need a homogeneous family word (UnsupportedWord);
/// Trees and StateSum refuse words above the crossing cap (TooManyCrossings).
LaurentPoly1 bracket(const BraidWord& w, Method method, const JonesOptions& options = {});

/// (-A^-3)^writhe times the bracket.
LaurentPoly1 jones(const BraidWord& w, Method method, const JonesOptions& options = {});

LaurentPoly1 writhe_factor(int writhe);

/// Every homogeneous family word with 2 <= n <= max_strands strands and
/// 1 <= |m_i| <= max_exponent, all exponents of one sign.
std::vector<BraidWord> family_corpus(int max_strands = 4, int max_exponent = 4);

struct VerifyReport {
  BraidWord word;
  std::array<LaurentPoly1, 4> jones;  // indexed by Method
  std::size_t matchings = 0;
  std::size_t trees = 0;
  bool kasteleyn = false;
  bool pass = false;
};

/// Runs all four methods on a family word and compares them.
VerifyReport verify_word(const BraidWord& w, const StateSumOptions& options = {});

}  // namespace dimerknot
