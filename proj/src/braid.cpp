#include "dimerknot/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "dimerknot/error.hpp"

namespace dimerknot {

BraidWord::BraidWord(int strands, std::vector<Syllable> syllables)
    : strands_(strands), syllables_(std::move(syllables)) {
  if (strands_ < 1) throw Error(ErrorCode::InvalidArgument, "strand count must be positive");
  for (const auto& s : syllables_) {
    if (s.exponent == 0) throw Error(ErrorCode::ZeroExponent, "syllable with exponent 0");
    if (s.generator < 1 || s.generator > strands_ - 1)
      throw Error(ErrorCode::StrandMismatch, "generator s" + std::to_string(s.generator) +
                                                 " needs more than " + std::to_string(strands_) +
                                                 " strands");
  }
}

int BraidWord::crossing_count() const noexcept {
  int c = 0;
  for (const auto& s : syllables_) c += std::abs(s.exponent);
  return c;
}

std::vector<BraidCrossing> BraidWord::crossings() const {
  std::vector<BraidCrossing> out;
  out.reserve(static_cast<std::size_t>(crossing_count()));
  for (const auto& s : syllables_)
    for (int k = 0; k < std::abs(s.exponent); ++k)
      out.push_back({s.generator, s.exponent > 0 ? 1 : -1});
  return out;
}

BraidWord BraidWord::mirrored() const {
  auto syl = syllables_;
  for (auto& s : syl) s.exponent = -s.exponent;
  return BraidWord(strands_, std::move(syl));
}

namespace {

[[noreturn]] void syntax(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(ErrorCode::SyntaxError,
              why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

long read_number(std::string_view text, std::size_t& pos) {
  long value = 0;
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > std::numeric_limits<int>::max()) syntax(text, start, "number out of range");
    ++pos;
  }
  if (pos == start) syntax(text, start, "expected digits");
  return value;
}

bool is_separator(char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<Syllable> syllables;
  std::size_t pos = 0;
  int max_generator = 0;
  while (true) {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != 's') syntax(text, pos, "expected 's<k>'");
    ++pos;
    const long k = read_number(text, pos);
    if (k < 1) syntax(text, pos, "generator index must be at least 1");
    long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
      e = read_number(text, pos);
      if (negative) e = -e;
      if (e == 0) throw Error(ErrorCode::ZeroExponent, "exponent 0 in \"" + std::string(text) + "\"");
    }
    if (pos < text.size() && !is_separator(text[pos])) syntax(text, pos, "unexpected character");
    syllables.push_back({static_cast<int>(k), static_cast<int>(e)});
    max_generator = std::max(max_generator, static_cast<int>(k));
  }
  if (syllables.empty()) syntax(text, 0, "empty braid word");
  const int needed = max_generator + 1;
  if (strands && *strands < needed)
    throw Error(ErrorCode::StrandMismatch, std::to_string(*strands) + " strands given, " +
                                               std::to_string(needed) + " needed");
  return BraidWord(strands.value_or(needed), std::move(syllables));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

int writhe(const BraidWord& w) {
  int total = 0;
  for (const auto& s : w.syllables()) total += s.exponent;
  return total;
}

bool is_homogeneous_family(const BraidWord& w) {
  const auto& syl = w.syllables();
  if (w.strands() < 2 || static_cast<int>(syl.size()) != w.strands() - 1) return false;
  for (std::size_t i = 0; i < syl.size(); ++i) {
    if (syl[i].generator != static_cast<int>(i) + 1) return false;
    if ((syl[i].exponent > 0) != (syl[0].exponent > 0)) return false;
  }
  return true;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  auto syl = a.syllables();
  syl.insert(syl.end(), b.syllables().begin(), b.syllables().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(syl));
}

BraidWord family_word(const std::vector<int>& exponents) {
  std::vector<Syllable> syl;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    syl.push_back({static_cast<int>(i) + 1, exponents[i]});
  return BraidWord(static_cast<int>(exponents.size()) + 1, std::move(syl));
}

}  // namespace dimerknot
