#include "dimerknot/laurent.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace dimerknot {

namespace {

std::vector<Integer> dense_coefficients(const LaurentPoly1& p) {
  const int lo = p.terms().front().exp[0];
  const int hi = p.terms().back().exp[0];
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exp[0] - lo)] = t.coeff;
  return out;
}

Rational rational_pow(const Rational& x, int e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  unsigned k = static_cast<unsigned>(e < 0 ? -static_cast<long>(e) : e);
  Rational r = 1;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return r;
}

std::string power_string(std::string_view var, int e) {
  if (e == 0) return {};
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Magnitude of a term with its variable part, e.g. "2 A^3", "A", "5".
std::string unsigned_term(const Integer& magnitude, const std::string& vars) {
  if (vars.empty()) return magnitude.str();
  if (magnitude == 1) return vars;
  return magnitude.str() + " " + vars;
}

struct Piece {
  bool negative;
  std::string body;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      out += pieces[i].negative ? "-" : "";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

// ---- parser -------------------------------------------------------------

template <std::size_t N>
class Parser {
 public:
  Parser(std::string_view text, std::array<std::string_view, N> vars)
      : text_(text), vars_(vars) {}

  Laurent<N> parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    Laurent<N> p = expr();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  using Poly = Laurent<N>;

  Poly expr() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    Poly acc = term();
    if (negative) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = get() == '-';
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    const char c = peek();
    if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) return true;
    for (auto v : vars_)
      if (text_.substr(pos_).starts_with(v)) return true;
    return false;
  }

  Poly factor() {
    Poly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    const int e = signed_int();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (!base.is_monomial() || abs(base.terms()[0].coeff) != 1)
      fail("negative power of a non-unit");
    const auto& t = base.terms()[0];
    typename Poly::Exponent inv{};
    for (std::size_t k = 0; k < N; ++k) inv[k] = -t.exp[k];
    return Poly::monomial(inv, t.coeff).pow(static_cast<unsigned>(-e));
  }

  Poly atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      get();
      Poly inner = expr();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      return Poly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    for (std::size_t k = 0; k < N; ++k) {
      if (text_.substr(pos_).starts_with(vars_[k])) {
        pos_ += vars_[k].size();
        typename Poly::Exponent e{};
        e[k] = 1;
        return Poly::monomial(e);
      }
    }
    fail("expected a number, variable or '('");
  }

  int signed_int() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > std::numeric_limits<int>::max()) fail("exponent out of range");
    }
    return static_cast<int>(negative ? -value : value);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::array<std::string_view, N> vars_;
  std::size_t pos_ = 0;
};

nlohmann::ordered_json coeff_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

}  // namespace

LaurentPoly1 exact_div(const LaurentPoly1& p, const LaurentPoly1& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (p.is_zero()) return {};
  if (q.is_monomial()) {
    const auto& m = q.terms()[0];
    std::vector<LaurentPoly1::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Integer quo, rem;
      divide_qr(t.coeff, m.coeff, quo, rem);
      if (rem != 0) throw Error(ErrorCode::NotDivisible, "coefficient not divisible");
      out.push_back({{t.exp[0] - m.exp[0]}, std::move(quo)});
    }
    return LaurentPoly1::from_terms(std::move(out));
  }
  // Strip lowest powers; divide from the constant term upward.
  std::vector<Integer> num = dense_coefficients(p);
  const std::vector<Integer> den = dense_coefficients(q);
  if (num.size() < den.size()) throw Error(ErrorCode::NotDivisible, "divisor degree too large");
  const std::size_t qlen = num.size() - den.size() + 1;
  std::vector<Integer> quot(qlen);
  Integer rem;
  for (std::size_t k = 0; k < qlen; ++k) {
    if (num[k] == 0) continue;
    divide_qr(num[k], den[0], quot[k], rem);
    if (rem != 0) throw Error(ErrorCode::NotDivisible, "non-integral quotient coefficient");
    for (std::size_t j = 0; j < den.size(); ++j)
      if (den[j] != 0) num[k + j] -= quot[k] * den[j];
  }
  for (std::size_t k = qlen; k < num.size(); ++k)
    if (num[k] != 0) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
  const int shift = p.terms().front().exp[0] - q.terms().front().exp[0];
  std::vector<LaurentPoly1::Term> out;
  for (std::size_t k = 0; k < qlen; ++k)
    if (quot[k] != 0) out.push_back({{shift + static_cast<int>(k)}, std::move(quot[k])});
  return LaurentPoly1::from_terms(std::move(out));
}

Rational evaluate(const LaurentPoly1& p, const Rational& a) {
  if (a == 0) throw Error(ErrorCode::ZeroAssignment, "A = 0");
  Rational sum = 0;
  for (const auto& t : p.terms()) sum += Rational(t.coeff) * rational_pow(a, t.exp[0]);
  return sum;
}

Rational evaluate(const LaurentPoly2& p, const Rational& a, const Rational& z) {
  if (a == 0) throw Error(ErrorCode::ZeroAssignment, "a = 0");
  if (z == 0) throw Error(ErrorCode::ZeroAssignment, "z = 0");
  Rational sum = 0;
  for (const auto& t : p.terms())
    sum += Rational(t.coeff) * rational_pow(a, t.exp[0]) * rational_pow(z, t.exp[1]);
  return sum;
}

std::string to_string(const LaurentPoly1& p, std::string_view var) {
  std::vector<Piece> pieces;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    pieces.push_back({it->coeff < 0, unsigned_term(abs(it->coeff), power_string(var, it->exp[0]))});
  return join_pieces(pieces);
}

std::string to_string(const LaurentPoly2& p) {
  std::vector<Piece> pieces;
  const auto& terms = p.terms();
  // Gather z-groups (ascending z), each with a-terms descending.
  std::map<int, std::vector<const LaurentPoly2::Term*>> groups;
  for (const auto& t : terms) groups[t.exp[1]].push_back(&t);
  for (auto& [ez, group] : groups) {
    std::reverse(group.begin(), group.end());
    const std::string zpart = power_string("z", ez);
    if (ez == 0 || group.size() == 1) {
      for (const auto* t : group) {
        std::string vars = power_string("a", t->exp[0]);
        if (!zpart.empty()) vars += (vars.empty() ? "" : " ") + zpart;
        pieces.push_back({t->coeff < 0, unsigned_term(abs(t->coeff), vars)});
      }
      continue;
    }
    const bool negate = group.front()->coeff < 0;
    std::vector<Piece> inner;
    for (const auto* t : group) {
      const Integer c = negate ? Integer(-t->coeff) : t->coeff;
      inner.push_back({c < 0, unsigned_term(abs(c), power_string("a", t->exp[0]))});
    }
    pieces.push_back({negate, "(" + join_pieces(inner) + ") " + zpart});
  }
  return join_pieces(pieces);
}

LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var) {
  return Parser<1>(text, {var}).parse();
}

LaurentPoly2 parse_laurent2(std::string_view text) {
  return Parser<2>(text, {"a", "z"}).parse();
}

std::string to_json(const LaurentPoly1& p, std::string_view var) {
  nlohmann::ordered_json j;
  j["variable"] = std::string(var);
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["exp"] = t.exp[0];
    term["coeff"] = coeff_json(t.coeff);
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

std::string to_json(const LaurentPoly2& p) {
  nlohmann::ordered_json j;
  j["variables"] = {"a", "z"};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["a"] = t.exp[0];
    term["z"] = t.exp[1];
    term["coeff"] = coeff_json(t.coeff);
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

}  // namespace dimerknot
