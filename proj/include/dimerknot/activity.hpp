#pragma once

#include <array>
#include <string>

#include "dimerknot/laurent.hpp"

namespace dimerknot {

/// The eight activity letters. Unbarred letters come first; bar(x) = x + 4.
enum class Letter : int { L = 0, l = 1, D = 2, d = 3, Lbar = 4, lbar = 5, Dbar = 6, dbar = 7 };

inline constexpr int kLetterCount = 8;

inline constexpr Letter barred(Letter x, bool bar) {
  return bar ? Letter{static_cast<int>(x) % 4 + 4} : x;
}
inline constexpr bool is_barred(Letter x) { return static_cast<int>(x) >= 4; }

/// ASCII names: "L", "l", "D", "d", "Lbar", "lbar", "Dbar", "dbar".
const char* letter_name(Letter x);

/// Commutative word over the letters, stored as letter counts.
struct ActivityWord {
  std::array<int, kLetterCount> counts{};

  void add(Letter x, int times = 1) { counts[static_cast<std::size_t>(x)] += times; }
  int count(Letter x) const { return counts[static_cast<std::size_t>(x)]; }
  int length() const;

  auto operator<=>(const ActivityWord&) const = default;
};

ActivityWord operator*(const ActivityWord& u, const ActivityWord& v);

/// Parses "L^2 d", "l D^2", "Lbar d" (juxtaposition, optional powers).
ActivityWord parse_word(const std::string& text);

/// Renders letters in enum order, e.g. "L^2 d"; the empty word is "1".
std::string to_string(const ActivityWord& w);

/// Polynomials over the letters with integer coefficients; used for the
/// symbolic adjacency matrix and its determinant.
using LetterPoly = Laurent<kLetterCount>;

LetterPoly letter_poly(Letter x, int sign = 1);
LetterPoly word_poly(const ActivityWord& w, const Integer& coeff = 1);
std::string to_string(const LetterPoly& p);

}  // namespace dimerknot
