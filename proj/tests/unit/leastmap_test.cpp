#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "zonotopal/leastmap.hpp"

using namespace zonotopal;
using namespace fixtures;

namespace {

// Least terms after full truncation at degree #Theta - 1, columns ordered by
// increasing degree.
PolySpace least_oracle(const std::vector<VecQ>& points, std::size_t nvars) {
  const auto ms = monomials_upto(nvars, static_cast<unsigned>(points.size() - 1));
  MatQ m(points.size(), ms.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      Rat value = 1;
      for (std::size_t k = 0; k < nvars; ++k)
        for (unsigned e = 0; e < ms[j][k]; ++e) value *= points[i][k];
      m(i, j) = value / Rat(factorial_product(ms[j]));
    }
  const auto r = rref(m);
  std::vector<Poly> least;
  for (std::size_t i = 0; i < r.rank; ++i) least.push_back(least_term(from_coefficients(r.reduced.row(i), ms)));
  return space_from_spanning(least, true, nvars);
}

std::vector<VecQ> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::set<VecQ> pts;
  while (pts.size() < count) {
    VecQ p(n);
    for (auto& e : p) e = static_cast<long>(rng() % 7) - 3;
    pts.insert(p);
  }
  return {pts.begin(), pts.end()};
}

std::set<std::uint64_t> minimal_transversals(const std::vector<IndexSet>& family) {
  IndexSet u;
  for (auto b : family) u = u | b;
  std::vector<IndexSet> hits;
  for_each_subset(u, [&](IndexSet s) {
    for (auto b : family)
      if (!b.intersects(s)) return;
    hits.push_back(s);
  });
  std::set<std::uint64_t> out;
  for (auto s : hits) {
    bool minimal = true;
    for (auto t : hits)
      if (t != s && s.contains(t)) minimal = false;
    if (minimal) out.insert(s.mask());
  }
  return out;
}

}  // namespace

TEST_CASE("least space of small sets") {
  const auto one = least_space({v({3, 4})}, 2);
  CHECK(one.space.dim() == 1);
  CHECK(one.space.contains(Poly::constant(2, 1)));

  const auto line = least_space({v({0, 0}), v({1, 0}), v({2, 0})}, 2);
  const auto t1 = Poly::monomial(Monomial::variable(2, 0));
  CHECK(line.space.contains(t1 * t1));
  CHECK(line.space.hilbert().at(2) == 1);

  const auto square = least_space({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}, 2);
  CHECK(square.space.hilbert().at(1) == 2);
  CHECK(square.space.contains(t1 * Poly::monomial(Monomial::variable(2, 1))));

  CHECK_THROWS_AS(least_space({}, 2), InputError);
  CHECK_THROWS_AS(least_space({v({1, 1}), v({1, 1})}, 2), InputError);
}

TEST_CASE("least space matches the fully truncated oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3, count = 1 + rng() % 7;
    const auto pts = random_points(rng, n, count);
    const auto ls = least_space(pts, n);
    const auto oracle = least_oracle(pts, n);
    CHECK(ls.space.dim() == count);
    CHECK(ls.space.hilbert().same_values(oracle.hilbert()));
    for (const auto& f : oracle.basis()) CHECK(ls.space.contains(f));
    CHECK(rank(evaluation_matrix(ls.space.basis(), pts)) == count);
    for (const auto& f : ls.space.basis())
      for (std::size_t i = 0; i < n; ++i) CHECK(ls.space.contains(partial_derivative(f, i)));
  }
}

TEST_CASE("minimal transversals agree with brute force") {
  for (const auto& r : random_instances(10, 3)) {
    const auto inst = make_instance(r.problem);
    const auto bk = enumerate_bk(inst.config, inst.assignment);
    const auto g = ideal_generators(inst.config, bk.family.members);
    std::set<std::uint64_t> got;
    for (auto s : g.sets) got.insert(s.mask());
    CHECK_MESSAGE(got == minimal_transversals(bk.family.members), r.label);
    CHECK(g.complete);
    for (std::size_t i = 0; i < g.sets.size(); ++i) CHECK(g.polys[i] == p_product(inst.config, g.sets[i]));
  }
  const auto inst = make_instance(two_axes_problem());
  const auto bk = enumerate_bk(inst.config, inst.assignment);
  CHECK_THROWS_AS(ideal_generators(inst.config, bk.family.members, 1), ValidationError);
  const auto none = ideal_generators(inst.config, {});
  REQUIRE(none.sets.size() == 1);
  CHECK(none.sets[0].empty());
}

TEST_CASE("coherence on the worked examples") {
  for (const auto& p : {two_axes_problem(), hilform_problem()}) {
    const auto inst = make_instance(p);
    const auto bk = enumerate_bk(inst.config, inst.assignment);
    const auto d = d_space(inst.config, bk);
    const auto g = ideal_generators(inst.config, bk.family.members);
    const auto coh = coherence_check(inst.config, inst.assignment, bk, d, g);
    CHECK(coh.certified);
    CHECK(coh.kernel_dim == bk.family.size());
    CHECK(coh.least_hilbert.same_values(coh.kernel_hilbert));
    CHECK_FALSE(coh.witness);

    auto junk = d.space.basis();
    junk.push_back(p_product(inst.config, inst.config.x_set() | inst.config.y_set()));
    const auto w = annihilation_check(junk, g);
    REQUIRE(w);
    CHECK(w->basis_index == junk.size() - 1);
    CHECK_FALSE(w->image.is_zero());
  }
}

TEST_CASE("gram matrices") {
  const auto t1 = Poly::monomial(Monomial::variable(2, 0));
  const auto t2 = Poly::monomial(Monomial::variable(2, 1));
  const auto one = Poly::constant(2, 1);
  CHECK(duality_gram({one, t1}, {one, t1}).nonsingular);
  const auto g = duality_gram({one, t1}, {one, t2});
  CHECK_FALSE(g.nonsingular);
  CHECK(g.rank == 1);
  CHECK(duality_gram({t1 * t1}, {t1 * t1}).gram(0, 0) == 2);
  CHECK_THROWS_AS(duality_gram({one}, {one, t1}), ValidationError);
}
