#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zonotopal/problem.hpp"

namespace fixtures {

using namespace zonotopal;

inline VecQ v(std::initializer_list<long> entries) {
  VecQ out;
  for (auto e : entries) out.emplace_back(e);
  return out;
}

// Flat-mode problem with values given by a rule on flats of X.
inline Problem problem_from_rule(std::size_t n, std::vector<VecQ> x, const std::function<unsigned(IndexSet)>& rule,
                                 std::uint64_t seed = 0) {
  Problem p;
  p.n = n;
  p.x = std::move(x);
  p.seed = seed;
  VectorMatroid m(n, p.x);
  for (auto f : flats(m)) p.assignment.push_back({f.elements(), rule(f)});
  return p;
}

inline std::vector<VecQ> basis_x() { return {v({1, 0}), v({0, 1})}; }

// X = {e1, e2} with k(empty) = j, k(x_i) = k, k(X) = l.
inline Problem axes_problem(unsigned j, unsigned k, unsigned l, std::uint64_t seed = 0) {
  return problem_from_rule(
      2, basis_x(),
      [=](IndexSet f) {
        if (f.empty()) return j;
        return f.size() == 1 ? k : l;
      },
      seed);
}

inline Problem two_axes_problem(std::uint64_t seed = 7) { return axes_problem(1, 1, 2, seed); }

// X = {(1,0), (0,1), (0,1)}; k = 1 on the empty set and {x1}, 2 elsewhere.
inline Problem hilform_problem(std::uint64_t seed = 11) {
  return problem_from_rule(
      2, {v({1, 0}), v({0, 1}), v({0, 1})},
      [](IndexSet f) { return (f.empty() || f == IndexSet{0}) ? 1u : 2u; }, seed);
}

inline std::vector<VecQ> four_lines_x() { return {v({0, 1}), v({1, 0}), v({1, -1}), v({1, 1})}; }

inline Problem four_lines_problem() {
  auto p = problem_from_rule(2, four_lines_x(), [](IndexSet) { return 0u; }, 1);
  p.lambda = std::vector<Rat>{0, 0, 1, 5};
  return p;
}

struct RandomInstance {
  Problem problem;
  std::string label;
};

// Small random instances with certified-solid assignments: n <= 3, N <= 5,
// flat values <= 3. Even-numbered draws are also incremental: flats are
// visited by size and each value is drawn between the largest value below it
// and one more than the smallest value on a flat it covers, falling back to
// k = rank after 50 rejected attempts. Odd-numbered draws
// take the monotone hull k(F) = max over flats G in F of r(G), r random.
inline std::vector<RandomInstance> random_instances(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t size = 1 + rng() % 5;
    std::vector<VecQ> x;
    for (std::size_t i = 0; i < size; ++i) {
      VecQ col(n);
      for (auto& e : col) e = static_cast<long>(rng() % 5) - 2;
      x.push_back(col);
    }
    VectorMatroid m(n, x);
    const auto fl = flats(m);
    const bool incremental = t % 2 == 0;
    std::map<std::uint64_t, unsigned> k;
    for (int attempt = 0;; ++attempt) {
      k.clear();
      bool ok = true;
      for (auto f : fl) {
        unsigned lo = 0, hi = 3;
        if (incremental) {
          for (auto g : fl) {
            if (g == f || !f.contains(g)) continue;
            lo = std::max(lo, k[g.mask()]);
            if (m.rank(g) + 1 == m.rank(f)) hi = std::min(hi, k[g.mask()] + 1);
          }
          if (attempt > 50) lo = hi = static_cast<unsigned>(m.rank(f));
          if (lo > hi) {
            ok = false;
            break;
          }
          k[f.mask()] = lo + static_cast<unsigned>(rng() % (hi - lo + 1));
        } else {
          unsigned best = static_cast<unsigned>(rng() % 4);
          for (auto g : fl)
            if (g != f && f.contains(g)) best = std::max(best, k[g.mask()]);
          k[f.mask()] = best;
        }
      }
      if (ok) break;
    }
    auto p = problem_from_rule(n, x, [&](IndexSet f) { return k.at(f.mask()); }, rng() % 1000);
    out.push_back({std::move(p), "random #" + std::to_string(t) + (incremental ? " (incremental)" : " (solid)")});
  }
  return out;
}

}  // namespace fixtures
