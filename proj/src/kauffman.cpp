#include "dimerknot/kauffman.hpp"

#include <vector>

#include "dimerknot/error.hpp"

namespace dimerknot {

namespace {

void require_nonnegative(int k, const char* what) {
  if (k < 0) throw Error(ErrorCode::NegativeIndex, std::string(what) + " index " + std::to_string(k));
}

const LaurentPoly2 kZ = mono_az(0, 1);

// K(2,0), K(2,1), ..., K(2,q) by the skein recursion.
std::vector<LaurentPoly2> skein_table(int q) {
  std::vector<LaurentPoly2> k{P(0), P(1)};
  for (int j = 2; j <= q; ++j) k.push_back(mono_az(j - 1, 1) + kZ * k[j - 1] - k[j - 2]);
  return k;
}

}  // namespace

LaurentPoly1 specialize_bracket(Letter x) {
  switch (x) {
    case Letter::L:
    case Letter::lbar: return mono(-3, -1);
    case Letter::l:
    case Letter::Lbar: return mono(3, -1);
    case Letter::D:
    case Letter::dbar: return mono(1);
    case Letter::d:
    case Letter::Dbar: return mono(-1);
  }
  return {};
}

LaurentPoly1 specialize_bracket(const ActivityWord& w) {
  // Every image is +-A^k, so the product is a single signed monomial.
  int exponent = 0;
  int sign = 1;
  for (int i = 0; i < kLetterCount; ++i) {
    const int c = w.counts[static_cast<std::size_t>(i)];
    const LaurentPoly1 image = specialize_bracket(Letter{i});
    const auto& t = image.terms()[0];
    exponent += c * t.exp[0];
    if (t.coeff < 0 && c % 2 != 0) sign = -sign;
  }
  return mono(exponent, sign);
}

LaurentPoly2 specialize_kauffman(const ActivityWord& w) {
  for (int i = 4; i < kLetterCount; ++i)
    if (w.counts[static_cast<std::size_t>(i)] != 0)
      throw Error(ErrorCode::BarredLetter, "word " + to_string(w) + " has barred letters");
  const int ea = w.count(Letter::L) - w.count(Letter::l);
  const int ez = w.count(Letter::D) + w.count(Letter::d);
  return mono_az(ea, ez);
}

LaurentPoly2 P(int q) {
  require_nonnegative(q, "P");
  if (q == 0) return mono_az(1, -1) + mono_az(-1, -1) - LaurentPoly2(1);
  if (q == 1) return mono_az(-1, 0);
  ActivityWord first;
  first.add(Letter::l);
  first.add(Letter::D, q - 1);
  LaurentPoly2 sum = specialize_kauffman(first);
  for (int i = 1; i <= q - 1; ++i) {
    ActivityWord w;
    w.add(Letter::d);
    w.add(Letter::L, i);
    w.add(Letter::D, q - 1 - i);
    sum += specialize_kauffman(w);
  }
  return sum;
}

LaurentPoly2 g(int n) {
  require_nonnegative(n, "g");
  LaurentPoly2 prev(1), cur = kZ;
  if (n == 0) return prev;
  for (int j = 2; j <= n; ++j) {
    LaurentPoly2 next = kZ * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly2 K2q(int q, KauffmanMethod method) {
  require_nonnegative(q, "K(2,q)");
  if (q <= 1) return P(q);
  switch (method) {
    case KauffmanMethod::Skein:
      return skein_table(q).back();
    case KauffmanMethod::Prop: {
      std::vector<LaurentPoly2> k{P(0), P(1)};
      for (int j = 2; j <= q; ++j) {
        LaurentPoly2 v = P(j);
        for (int i = 0; i <= j - 2; ++i) v -= mono_az(0, j - 2 - i) * k[static_cast<std::size_t>(i)];
        k.push_back(std::move(v));
      }
      return k.back();
    }
    case KauffmanMethod::Closed: {
      LaurentPoly2 v = P(q);
      for (int i = 0; i <= q - 2; ++i) v -= P(i) * g(q - 2 - i);
      return v;
    }
  }
  return {};
}

LaurentPoly2 F2q(int q, KauffmanMethod method) {
  if (q < 1) throw Error(ErrorCode::NegativeIndex, "F(2,q) needs q >= 1");
  return mono_az(-q, 0) * K2q(q, method);
}

}  // namespace dimerknot
