#pragma once

// Activity-letter specialisations and the (2,q) torus-link Kauffman
// polynomial recursions.

#include "dimerknot/activity.hpp"
#include "dimerknot/laurent.hpp"

namespace dimerknot {

/// Bracket specialisation:
///   L, lbar -> -A^-3;  l, Lbar -> -A^3;  D, dbar -> A;  d, Dbar -> A^-1.
LaurentPoly1 specialize_bracket(Letter x);
LaurentPoly1 specialize_bracket(const ActivityWord& w);

/// Kauffman specialisation L -> a, l -> a^-1, D -> z, d -> z.
/// Throws BarredLetter on any barred letter.
LaurentPoly2 specialize_kauffman(const ActivityWord& w);

/// Matching-word sum for the (2,q) torus link, q >= 0. P_0 and P_1 are the
/// fixed base values (a + a^-1) z^-1 - 1 and a^-1.
LaurentPoly2 P(int q);

/// g_0 = 1, g_1 = z, g_n = z g_(n-1) - g_(n-2).
LaurentPoly2 g(int n);

enum class KauffmanMethod { Skein, Prop, Closed };

/// K(2,q) by the skein recursion, the P_q/K sum, or the P_q/g_n closed form.
LaurentPoly2 K2q(int q, KauffmanMethod method = KauffmanMethod::Skein);

/// a^-q K(2,q), q >= 1.
LaurentPoly2 F2q(int q, KauffmanMethod method = KauffmanMethod::Skein);

}  // namespace dimerknot
