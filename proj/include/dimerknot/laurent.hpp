#pragma once

// Exact sparse Laurent polynomials with arbitrary-precision integer
// coefficients, templated on the number of variables.
//
// Laurent<1> is the bracket ring Z[A, A^-1], Laurent<2> the Kauffman ring
// Z[a^+-1, z^+-1]. Terms are kept sorted ascending by exponent tuple with no
// zero coefficients, so structural equality is polynomial equality.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dimerknot/error.hpp"

namespace dimerknot {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <std::size_t N>
class Laurent {
 public:
  static_assert(N >= 1);
  using Exponent = std::array<int, N>;

  struct Term {
    Exponent exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  Laurent() = default;
  Laurent(int constant) : Laurent(Integer(constant)) {}  // NOLINT: ring literal
  Laurent(const Integer& constant) {                     // NOLINT
    if (constant != 0) terms_.push_back({Exponent{}, constant});
  }

  static Laurent monomial(const Exponent& exp, const Integer& coeff = 1) {
    Laurent p;
    if (coeff != 0) p.terms_.push_back({exp, coeff});
    return p;
  }

  // Sums duplicate exponents and drops zeros.
  static Laurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.exp < y.exp; });
    Laurent p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Integer coeff(const Exponent& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Exponent& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
  }

  // Image under x_i -> x_i^-1 for every variable.
  Laurent inverted() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term u = t;
      for (auto& e : u.exp) e = -e;
      out.push_back(std::move(u));
    }
    return from_terms(std::move(out));
  }

  // Multiplies by the monomial x^shift.
  Laurent shifted(const Exponent& shift) const {
    Laurent p = *this;
    for (auto& t : p.terms_)
      for (std::size_t i = 0; i < N; ++i) t.exp[i] += shift[i];
    return p;
  }

  Laurent pow(unsigned k) const {
    Laurent result(1), base = *this;
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return result;
  }

  Laurent operator-() const {
    Laurent p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Laurent operator+(const Laurent& p, const Laurent& q) { return merge(p, q, false); }
  friend Laurent operator-(const Laurent& p, const Laurent& q) { return merge(p, q, true); }
  friend Laurent operator*(const Laurent& p, const Laurent& q) { return multiply(p, q); }

  Laurent& operator+=(const Laurent& q) { return *this = *this + q; }
  Laurent& operator-=(const Laurent& q) { return *this = *this - q; }
  Laurent& operator*=(const Laurent& q) { return *this = *this * q; }

  bool operator==(const Laurent&) const = default;

 private:
  static Laurent merge(const Laurent& p, const Laurent& q, bool negate_q) {
    Laurent r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    while (i != p.terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() || (i != p.terms_.end() && i->exp < j->exp)) {
        r.terms_.push_back(*i++);
      } else if (i == p.terms_.end() || j->exp < i->exp) {
        r.terms_.push_back({j->exp, negate_q ? Integer(-j->coeff) : j->coeff});
        ++j;
      } else {
        Integer c = negate_q ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
        if (c != 0) r.terms_.push_back({i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Laurent multiply(const Laurent& p, const Laurent& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (p.is_monomial() || q.is_monomial()) {
      const Laurent& m = p.is_monomial() ? p : q;
      const Laurent& other = p.is_monomial() ? q : p;
      Laurent r;
      r.terms_.reserve(other.terms_.size());
      for (const auto& t : other.terms_) {
        Term u{t.exp, t.coeff * m.terms_[0].coeff};
        for (std::size_t k = 0; k < N; ++k) u.exp[k] += m.terms_[0].exp[k];
        r.terms_.push_back(std::move(u));
      }
      return r;
    }
    if constexpr (N == 1) {
      // Dense accumulator over the exponent window.
      const int lo = p.terms_.front().exp[0] + q.terms_.front().exp[0];
      const int hi = p.terms_.back().exp[0] + q.terms_.back().exp[0];
      std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
      for (const auto& s : p.terms_)
        for (const auto& t : q.terms_)
          acc[static_cast<std::size_t>(s.exp[0] + t.exp[0] - lo)] += s.coeff * t.coeff;
      Laurent r;
      for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) r.terms_.push_back({Exponent{lo + static_cast<int>(k)}, std::move(acc[k])});
      return r;
    } else {
      std::map<Exponent, Integer> acc;
      for (const auto& s : p.terms_)
        for (const auto& t : q.terms_) {
          Exponent e;
          for (std::size_t k = 0; k < N; ++k) e[k] = s.exp[k] + t.exp[k];
          acc[e] += s.coeff * t.coeff;
        }
      Laurent r;
      for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
      return r;
    }
  }

  std::vector<Term> terms_;
};

using LaurentPoly1 = Laurent<1>;
using LaurentPoly2 = Laurent<2>;

// A^e in the one-variable ring.
inline LaurentPoly1 mono(int e, const Integer& coeff = 1) {
  return LaurentPoly1::monomial({e}, coeff);
}

// a^ea z^ez in the two-variable ring.
inline LaurentPoly2 mono_az(int ea, int ez, const Integer& coeff = 1) {
  return LaurentPoly2::monomial({ea, ez}, coeff);
}

/// Exact quotient p / q in Z[A, A^-1]. Throws NotDivisible when q does not
/// divide p, and InvalidArgument when q is zero.
LaurentPoly1 exact_div(const LaurentPoly1& p, const LaurentPoly1& q);

/// Exact rational evaluation; every assigned value must be nonzero.
Rational evaluate(const LaurentPoly1& p, const Rational& a);
Rational evaluate(const LaurentPoly2& p, const Rational& a, const Rational& z);

/// Text forms. One variable renders highest power first ("A^-4 + A^-12 -
/// A^-16"); two variables group by ascending z with each a-coefficient in
/// descending a ("(a + a^-1) z^-1 - 1").
std::string to_string(const LaurentPoly1& p, std::string_view var = "A");
std::string to_string(const LaurentPoly2& p);

/// Parses sums of products of integers, variables with optional integer
/// powers and parenthesised subexpressions. Throws SyntaxError.
LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var = "A");
LaurentPoly2 parse_laurent2(std::string_view text);

/// JSON text, terms ascending:
///   {"variable":"A","terms":[{"exp":-16,"coeff":-1},...]}
///   {"variables":["a","z"],"terms":[{"a":1,"z":1,"coeff":1},...]}
std::string to_json(const LaurentPoly1& p, std::string_view var = "A");
std::string to_json(const LaurentPoly2& p);

}  // namespace dimerknot
