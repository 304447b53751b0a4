#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dimerknot {

/// sigma_generator^exponent, exponent nonzero.
struct Syllable {
  int generator = 1;
  int exponent = 1;
  bool operator==(const Syllable&) const = default;
};

/// One crossing of the expanded word, in reading order.
struct BraidCrossing {
  int generator;
  int sign;  // +1 for sigma_i, -1 for sigma_i^-1
};

/// A braid word on a fixed number of strands. Syllables are kept exactly as
/// written; equal neighbouring generators are not merged.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws StrandMismatch / ZeroExponent / InvalidArgument on bad input.
  BraidWord(int strands, std::vector<Syllable> syllables);

  int strands() const noexcept { return strands_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  int crossing_count() const noexcept;
  std::vector<BraidCrossing> crossings() const;

  /// Word with every exponent negated (the mirror image of the closure).
  BraidWord mirrored() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<Syllable> syllables_;
};

/// Grammar: tokens `s<k>` or `s<k>^<e>` separated by whitespace or `*`.
/// Strand count defaults to max(k) + 1.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// Canonical text, e.g. "s1^2 s2^-1". Exponent 1 is omitted.
std::string to_string(const BraidWord& w);

int writhe(const BraidWord& w);

/// True iff the word is literally s1^m1 s2^m2 ... s(n-1)^m(n-1) with every
/// generator present once and all exponents of one sign.
bool is_homogeneous_family(const BraidWord& w);

/// Concatenation on max(strands) strands.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// s1^m1 ... s(n-1)^m(n-1) on n = exponents.size() + 1 strands.
BraidWord family_word(const std::vector<int>& exponents);

}  // namespace dimerknot
