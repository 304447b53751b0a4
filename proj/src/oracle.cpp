#include "dimerknot/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

namespace dimerknot {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// table[a][loops] counts states with `a` a-smoothings and that many loops.
using StateTable = std::vector<std::vector<std::uint64_t>>;

void count_states(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, StateTable& table) {
  const int c = d.crossing_count();
  const auto darts = static_cast<std::size_t>(4 * c);
  for (std::uint64_t state = begin; state < end; ++state) {
    DisjointSets sets(darts);
    int components = static_cast<int>(darts);
    for (std::size_t x = 0; x < darts; ++x) {
      const int y = d.mate[x];
      if (static_cast<int>(x) < y && sets.unite(static_cast<int>(x), y)) --components;
    }
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const auto& s = d.crossings[static_cast<std::size_t>(k)].slots;
      const bool a_smoothing = (state >> k) & 1U;
      if (a_smoothing) {
        ++a_count;
        components -= sets.unite(s[0], s[1]);
        components -= sets.unite(s[2], s[3]);
      } else {
        components -= sets.unite(s[1], s[2]);
        components -= sets.unite(s[3], s[0]);
      }
    }
    ++table[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(components)];
  }
}

}  // namespace

LaurentPoly1 bracket_state_sum(const LinkDiagram& d, const StateSumOptions& options,
                               std::uint64_t* states_visited) {
  const int c = d.crossing_count();
  if (c > options.max_crossings || c > 62)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(c) + " crossings exceed the state-sum cap of " +
                                                 std::to_string(std::min(options.max_crossings, 62)));
  if (c == 0) {
    if (states_visited) *states_visited = 1;
    const LaurentPoly1 loop = mono(2, -1) + mono(-2, -1);
    return loop.pow(static_cast<unsigned>(std::max(d.free_loops - 1, 0)));
  }
  const std::uint64_t total = std::uint64_t{1} << c;
  const auto sized = [&] {
    return StateTable(static_cast<std::size_t>(c) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(2 * c) + 2, 0));
  };
  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, total / 1024)));
  std::vector<StateTable> tables(threads, sized());
  if (threads == 1) {
    count_states(d, 0, total, tables[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { count_states(d, lo, hi, tables[t]); });
    }
    for (auto& th : pool) th.join();
  }
  StateTable merged = sized();
  for (const auto& t : tables)
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t l = 0; l < t[a].size(); ++l) merged[a][l] += t[a][l];

  const LaurentPoly1 loop = mono(2, -1) + mono(-2, -1);
  std::vector<LaurentPoly1> loop_powers{LaurentPoly1(1)};
  while (loop_powers.size() < merged[0].size()) loop_powers.push_back(loop_powers.back() * loop);
  LaurentPoly1 sum;
  for (std::size_t a = 0; a < merged.size(); ++a) {
    LaurentPoly1 inner;
    for (std::size_t l = 1; l < merged[a].size(); ++l)
      if (merged[a][l]) inner += loop_powers[l - 1] * LaurentPoly1(Integer(merged[a][l]));
    if (!inner.is_zero()) sum += mono(2 * static_cast<int>(a) - c) * inner;
  }
  if (states_visited) *states_visited = total;
  return sum;
}

LaurentPoly1 jones_state_sum(const BraidWord& w, const StateSumOptions& options) {
  const int wr = writhe(w);
  const LaurentPoly1 correction = mono(-3 * wr, wr % 2 == 0 ? 1 : -1);
  return correction * bracket_state_sum(build_diagram(w), options);
}

}  // namespace dimerknot
