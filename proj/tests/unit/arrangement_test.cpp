#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "zonotopal/arrangement.hpp"

using namespace zonotopal;
using namespace fixtures;

TEST_CASE("example vertices") {
  const auto inst = make_instance(four_lines_problem());
  const auto& c = inst.config;
  CHECK(vertex(c, IndexSet{0, 1}).point == v({0, 0}));
  CHECK(vertex(c, IndexSet{0, 2}).point == v({1, 0}));
  CHECK(vertex(c, IndexSet{0, 3}).point == v({5, 0}));
  CHECK(vertex(c, IndexSet{1, 2}).point == v({0, -1}));
  CHECK(vertex(c, IndexSet{1, 3}).point == v({0, 5}));
  CHECK(vertex(c, IndexSet{2, 3}).point == v({3, 2}));
  CHECK_THROWS_AS(vertex(c, IndexSet{0}), ConsistencyError);
}

TEST_CASE("vertex vanishing sets are the bases") {
  for (const auto& p : {two_axes_problem(), hilform_problem(), four_lines_problem()}) {
    const auto inst = make_instance(p);
    const auto all = bases(inst.config.ground_matroid()).members;
    for (const auto& vx : vertices_of(inst.config, all)) CHECK(vanishing_set(inst.config, vx.point) == vx.basis);
  }
}

TEST_CASE("two-axes vertex set") {
  const auto inst = make_instance(two_axes_problem());
  const auto bk = enumerate_bk(inst.config, inst.assignment);
  const auto vk = vertex_set_vk(inst.config, bk);
  CHECK(vk.size() == 8);
  std::set<VecQ> pts;
  for (const auto& p : points_of(vk)) pts.insert(p);
  CHECK(pts.size() == 8);
  CHECK_FALSE(pts.count(vertex(inst.config, IndexSet{0, 4}).point));
  CHECK_FALSE(pts.count(vertex(inst.config, IndexSet{1, 4}).point));
}

TEST_CASE("shared vertices are reported") {
  ConfigurationRequest r;
  r.n = 2;
  r.x = {v({1, 0}), v({0, 1}), v({1, 1})};
  r.lambda = std::vector<Rat>{0, 0, 1};
  const auto c = make_configuration(r);
  CHECK(vertices_of(c, bases(c.x_matroid()).members).size() == 3);
  const std::vector<IndexSet> twice{IndexSet{0, 1}, IndexSet{0, 1}};
  CHECK_THROWS_AS(vertices_of(c, twice), ConsistencyError);
}
