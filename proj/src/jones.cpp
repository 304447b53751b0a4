#include "dimerknot/jones.hpp"

#include <algorithm>

#include "dimerknot/diagram.hpp"
#include "dimerknot/dimer.hpp"
#include "dimerknot/error.hpp"
#include "dimerknot/overlay.hpp"
#include "dimerknot/tait.hpp"

namespace dimerknot {

const char* to_string(Method m) {
  switch (m) {
    case Method::Det: return "det";
    case Method::Matchings: return "matchings";
    case Method::Trees: return "trees";
    case Method::StateSum: return "statesum";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Det, Method::Matchings, Method::Trees, Method::StateSum})
    if (text == to_string(m)) return m;
  throw Error(ErrorCode::InvalidArgument, "unknown method \"" + std::string(text) + "\"");
}

LaurentPoly1 bracket(const BraidWord& w, Method method, const JonesOptions& options) {
  switch (method) {
    case Method::Det: return bracket_via_det(w, options.stats);
    case Method::Matchings: {
      if (!is_homogeneous_family(w))
        throw Error(ErrorCode::UnsupportedWord, "\"" + to_string(w) + "\" is not of the form s1^m1 ... s(n-1)^m(n-1)");
      return partition_function(build_overlay(build_diagram(w)));
    }
    case Method::Trees: {
      const LinkDiagram d = build_diagram(w);
      if (d.crossing_count() > options.state_sum.max_crossings)
        throw Error(ErrorCode::TooManyCrossings,
                    std::to_string(d.crossing_count()) + " crossings exceed the cap of " +
                        std::to_string(options.state_sum.max_crossings));
      if (d.crossings.empty()) return LaurentPoly1(1);
      return thistlethwaite_sum(build_tait(d));
    }
    case Method::StateSum: return bracket_state_sum(build_diagram(w), options.state_sum);
  }
  return {};
}

LaurentPoly1 writhe_factor(int writhe) { return mono(-3 * writhe, writhe % 2 == 0 ? 1 : -1); }

LaurentPoly1 jones(const BraidWord& w, Method method, const JonesOptions& options) {
  return writhe_factor(writhe(w)) * bracket(w, method, options);
}

std::vector<BraidWord> family_corpus(int max_strands, int max_exponent) {
  std::vector<BraidWord> out;
  for (int n = 2; n <= max_strands; ++n) {
    for (int sign : {1, -1}) {
      std::vector<int> m(static_cast<std::size_t>(n - 1), 1);
      while (true) {
        std::vector<int> signed_m(m);
        for (int& x : signed_m) x *= sign;
        out.push_back(family_word(signed_m));
        std::size_t i = 0;
        while (i < m.size() && m[i] == max_exponent) m[i++] = 1;
        if (i == m.size()) break;
        ++m[i];
      }
    }
  }
  return out;
}

VerifyReport verify_word(const BraidWord& w, const StateSumOptions& options) {
  VerifyReport r;
  r.word = w;
  JonesOptions jo;
  jo.state_sum = options;
  for (Method m : {Method::Det, Method::Matchings, Method::Trees, Method::StateSum})
    r.jones[static_cast<std::size_t>(m)] = jones(w, m, jo);
  const LinkDiagram d = build_diagram(w);
  const OverlayGraph g = kasteleyn_sign(build_overlay(d));
  r.matchings = for_each_perfect_matching(g, [](const PerfectMatching&) {});
  r.trees = for_each_spanning_tree(build_tait(d), [](const SpanningTree&) {});
  r.kasteleyn = is_kasteleyn(g);
  r.pass = r.kasteleyn && std::all_of(r.jones.begin(), r.jones.end(),
                                       [&](const LaurentPoly1& p) { return p == r.jones[0]; });
  return r;
}

}  // namespace dimerknot
