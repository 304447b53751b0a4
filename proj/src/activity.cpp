#include "dimerknot/activity.hpp"

#include <cctype>

#include "dimerknot/error.hpp"

namespace dimerknot {

const char* letter_name(Letter x) {
  static constexpr const char* names[kLetterCount] = {"L",    "l",    "D",    "d",
                                                      "Lbar", "lbar", "Dbar", "dbar"};
  return names[static_cast<int>(x)];
}

int ActivityWord::length() const {
  int n = 0;
  for (int c : counts) n += c;
  return n;
}

ActivityWord operator*(const ActivityWord& u, const ActivityWord& v) {
  ActivityWord w;
  for (std::size_t i = 0; i < w.counts.size(); ++i) w.counts[i] = u.counts[i] + v.counts[i];
  return w;
}

ActivityWord parse_word(const std::string& text) {
  ActivityWord w;
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    throw Error(ErrorCode::SyntaxError, std::string(why) + " in activity word \"" + text + "\"");
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*') {
      ++pos;
      continue;
    }
    if (text.compare(pos, 1, "1") == 0 && w.length() == 0) {
      ++pos;
      continue;
    }
    int base = -1;
    switch (text[pos]) {
      case 'L': base = 0; break;
      case 'l': base = 1; break;
      case 'D': base = 2; break;
      case 'd': base = 3; break;
      default: fail("unknown letter");
    }
    ++pos;
    if (text.compare(pos, 3, "bar") == 0) {
      base += 4;
      pos += 3;
    }
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = 0;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("bad power");
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        power = power * 10 + (text[pos++] - '0');
    }
    w.add(Letter{base}, power);
  }
  return w;
}

std::string to_string(const ActivityWord& w) {
  std::string out;
  for (int i = 0; i < kLetterCount; ++i) {
    const int c = w.counts[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += ' ';
    out += letter_name(Letter{i});
    if (c != 1) out += "^" + std::to_string(c);
  }
  return out.empty() ? "1" : out;
}

LetterPoly letter_poly(Letter x, int sign) {
  LetterPoly::Exponent e{};
  e[static_cast<std::size_t>(x)] = 1;
  return LetterPoly::monomial(e, sign);
}

LetterPoly word_poly(const ActivityWord& w, const Integer& coeff) {
  return LetterPoly::monomial(w.counts, coeff);
}

std::string to_string(const LetterPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest letter powers first, so L^2 d precedes l D^2.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ActivityWord w;
    w.counts = it->exp;
    const Integer mag = abs(it->coeff);
    std::string body = to_string(w);
    if (mag != 1) body = body == "1" ? mag.str() : mag.str() + " " + body;
    if (out.empty()) {
      out = (it->coeff < 0 ? "-" : "") + body;
    } else {
      out += (it->coeff < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace dimerknot
