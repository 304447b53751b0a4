#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "dimerknot/activity.hpp"
#include "dimerknot/braid.hpp"
#include "dimerknot/laurent.hpp"

namespace doctest {
template <std::size_t N>
struct StringMaker<dimerknot::Laurent<N>> {
  static String convert(const dimerknot::Laurent<N>& p) { return dimerknot::to_string(p).c_str(); }
};
template <>
struct StringMaker<dimerknot::ActivityWord> {
  static String convert(const dimerknot::ActivityWord& w) { return dimerknot::to_string(w).c_str(); }
};
template <>
struct StringMaker<dimerknot::BraidWord> {
  static String convert(const dimerknot::BraidWord& w) { return dimerknot::to_string(w).c_str(); }
};
}  // namespace doctest

namespace testing {

inline dimerknot::LaurentPoly1 A(const std::string& text) { return dimerknot::parse_laurent1(text); }
inline dimerknot::LaurentPoly2 az(const std::string& text) { return dimerknot::parse_laurent2(text); }

inline dimerknot::LaurentPoly1 random_poly(std::mt19937& rng, int max_terms = 4, int span = 6) {
  std::uniform_int_distribution<int> count(0, max_terms), exp(-span, span), coeff(-5, 5);
  std::vector<dimerknot::LaurentPoly1::Term> terms;
  for (int k = count(rng); k > 0; --k) terms.push_back({{exp(rng)}, coeff(rng)});
  return dimerknot::LaurentPoly1::from_terms(std::move(terms));
}

}  // namespace testing
