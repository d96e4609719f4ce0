#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "zonotopal/lagrange.hpp"

using namespace zonotopal;
using namespace fixtures;

TEST_CASE("Lagrange data on the worked examples") {
  for (const auto& p : {two_axes_problem(), hilform_problem()}) {
    const auto inst = make_instance(p);
    const auto suite = lagrange_basis(inst.config, inst.assignment);
    const auto bk = enumerate_bk(suite.config, inst.assignment);
    const auto pk = pk_space(inst.x, inst.assignment);
    REQUIRE(suite.data.size() == bk.family.size());
    for (std::size_t i = 0; i < suite.data.size(); ++i) {
      const auto& d = suite.data[i];
      CHECK(d.b == bk.family.members[i]);
      CHECK(std::find(d.survivors.begin(), d.survivors.end(), d.b) != d.survivors.end());
      // Q_B alone is nonzero exactly on the survivors.
      for (std::size_t j = 0; j < suite.vertices.size(); ++j) {
        const bool survives =
            std::find(d.survivors.begin(), d.survivors.end(), suite.vertices[j].basis) != d.survivors.end();
        CHECK((eval(d.q_b, suite.vertices[j].point) != 0) == survives);
      }
      if (d.survivors.size() == 1) {
        CHECK(d.ell == Poly::constant(inst.config.n(), 1));
        CHECK_FALSE(d.y_prime);
      } else {
        CHECK(d.y_prime);
      }
      CHECK(d.l == d.q_b * d.ell);
    }
    const auto v = verify_lagrange(suite, pk);
    CHECK(v.pass());
    CHECK(v.rank == bk.family.size());
  }
}

TEST_CASE("a corrupted Lagrange polynomial is caught") {
  const auto inst = make_instance(hilform_problem());
  const auto suite = lagrange_basis(inst.config, inst.assignment);
  const auto pk = pk_space(inst.x, inst.assignment);
  std::vector<Poly> polys;
  std::optional<std::size_t> corrupted;
  for (std::size_t i = 0; i < suite.data.size(); ++i) {
    if (!corrupted && suite.data[i].survivors.size() > 1) {
      corrupted = i;
      polys.push_back(suite.data[i].q_b);
    } else {
      polys.push_back(suite.data[i].l);
    }
  }
  REQUIRE(corrupted);
  const auto v = verify_lagrange(polys, suite.vertices, pk);
  CHECK_FALSE(v.diagonal);
  REQUIRE(v.witness);
  CHECK(v.witness->first == *corrupted);
}

TEST_CASE("solidity is required") {
  const auto inst = make_instance(axes_problem(0, 2, 1, 2));
  CHECK_THROWS_AS(lagrange_basis(inst.config, inst.assignment), ValidationError);
}

TEST_CASE("central Lagrange basis") {
  const auto inst = make_instance(four_lines_problem());
  const auto lag = central_lagrange(inst.config);
  const auto cb = central_basis(inst.config);
  CHECK(lag.bases.size() == 6);
  const auto v = verify_lagrange(lag.polys, lag.vertices, cb.space);
  CHECK(v.pass());
  for (std::size_t i = 0; i < lag.bases.size(); ++i)
    CHECK(lag.polys[i] == q_product(inst.config, inst.config.x_set() - lag.bases[i]));
}
