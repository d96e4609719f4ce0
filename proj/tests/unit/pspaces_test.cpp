#include <doctest.h>

#include "fixtures.hpp"
#include "zonotopal/pspaces.hpp"

using namespace zonotopal;
using namespace fixtures;

namespace {

// P_k from every term p_{X\Z} Pi_{k(Z)} with no pruning.
PolySpace pk_unpruned(const VectorMatroid& x, const Assignment& a) {
  std::vector<Poly> spanning;
  for_each_subset(x.all(), [&](IndexSet z) {
    std::vector<VecQ> vectors;
    for (auto e : x.all() - z) vectors.push_back(x.vector(e));
    const auto base = product_over(vectors, {}, false, x.dim());
    for (const auto& alpha : monomials_upto(x.dim(), a.value(z))) spanning.push_back(base * Poly::monomial(alpha));
  });
  return space_from_spanning(std::move(spanning), true, x.dim());
}

}  // namespace

TEST_CASE("poly space basics") {
  const auto t1 = Poly::monomial(Monomial::variable(2, 0));
  const auto t2 = Poly::monomial(Monomial::variable(2, 1));
  const auto s = space_from_spanning({t1, t2, t1 + t2, t1 * t2}, true, 2);
  CHECK(s.dim() == 3);
  CHECK(s.basis().size() == 3);
  CHECK(s.contains(t1 * Rat(3) - t2));
  CHECK(s.contains(t1 + t1 * t2));
  CHECK_FALSE(s.contains(t1 * t1));
  CHECK(s.hilbert().at(1) == 2);
  CHECK_THROWS_AS(space_from_spanning({t1 + Poly::constant(2, 1)}, true, 2), InputError);
  const auto in = space_from_spanning({t1 + Poly::constant(2, 1), t2}, false, 2);
  CHECK(in.contains(t1 + t2 + Poly::constant(2, 1)));
  CHECK_FALSE(in.contains(t1));
  CHECK_THROWS_AS(in.hilbert(), InputError);
  CHECK(rank_of({t1, t1 * Rat(2)}, 2) == 1);
}

TEST_CASE("two-element example trichotomy") {
  struct Case {
    unsigned j, k, l;
    std::size_t dim;
  };
  for (auto c : std::vector<Case>{{0, 1, 4, 15}, {0, 1, 2, 6}, {1, 1, 2, 8}, {2, 2, 3, 13}, {0, 2, 3, 10}, {0, 0, 5, 21}}) {
    const auto p = axes_problem(c.j, c.k, c.l);
    VectorMatroid x(p.n, p.x);
    const auto a = validate_assignment(x, p.assignment);
    CHECK(pk_space(x, a).dim() == c.dim);
  }
}

TEST_CASE("pruned generators give the full sum") {
  for (const auto& r : random_instances(16, 41)) {
    VectorMatroid x(r.problem.n, r.problem.x);
    const auto a = validate_assignment(x, r.problem.assignment);
    const auto pruned = pk_space(x, a);
    const auto full = pk_unpruned(x, a);
    CHECK_MESSAGE(pruned.dim() == full.dim(), r.label);
    CHECK_MESSAGE(pruned.hilbert().same_values(full.hilbert()), r.label);
  }
}

TEST_CASE("solid assignments: dim P_k equals #B_k and hilbert formula holds") {
  for (const auto& r : random_instances(16, 77)) {
    const auto inst = make_instance(r.problem);
    const auto pk = pk_space(inst.x, inst.assignment);
    const auto bk = enumerate_bk(inst.config, inst.assignment);
    const auto hb = homogeneous_basis_bk(inst.config, inst.assignment, bk, pk);
    CHECK_MESSAGE(hb.all_in_pk, r.label);
    CHECK_MESSAGE(hb.rank == bk.family.size(), r.label);
    if (inst.assignment.incremental()) {
      CHECK_MESSAGE(pk.dim() == bk.family.size(), r.label);
      CHECK_MESSAGE(hilbert_formula(inst.config, inst.assignment).same_values(pk.hilbert()), r.label);
      const auto qb = inhomogeneous_basis_bk(inst.config, inst.assignment, bk, pk);
      CHECK_MESSAGE(qb.spans_pk, r.label);
    } else {
      CHECK_MESSAGE(pk.dim() >= bk.family.size(), r.label);
    }
  }
}

TEST_CASE("hilbert example") {
  const auto inst = make_instance(hilform_problem());
  const auto pk = pk_space(inst.x, inst.assignment);
  CHECK(pk.dim() == 13);
  const auto h = hilbert_formula(inst.config, inst.assignment);
  CHECK(h.same_values(pk.hilbert()));
  CHECK(h.provenance == HilbertProvenance::formula);
  CHECK(h.total() == 13);
}

TEST_CASE("inhomogeneous basis polynomial on two axes") {
  const auto inst = make_instance(two_axes_problem());
  const auto& c = inst.config;
  // B = {x1, y1}: I = {x1}, m = 2, X_B = {x1, x2, y1, y2}
  const auto q = q_basis_polynomial(c, inst.assignment, IndexSet{0, 2});
  CHECK(q == q_product(c, IndexSet{1}) * q_product(c, IndexSet{3}));
  CHECK(q.degree() == 2);
}

TEST_CASE("inhomogeneous basis requires incrementality") {
  const auto inst = make_instance(axes_problem(0, 1, 4, 3));
  const auto pk = pk_space(inst.x, inst.assignment);
  const auto bk = enumerate_bk(inst.config, inst.assignment);
  CHECK_THROWS_AS(inhomogeneous_basis_bk(inst.config, inst.assignment, bk, pk), ValidationError);
}

TEST_CASE("constant assignments match the closed form") {
  for (const auto& x : {basis_x(), four_lines_x(), hilform_problem().x}) {
    VectorMatroid m(2, x);
    for (unsigned c = 0; c <= 2; ++c) {
      const auto r = external_dim_check(m, c);
      CHECK(r.closed_form == r.direct);
    }
  }
  VectorMatroid b(2, basis_x());
  CHECK(external_dim_check(b, 0).direct == 4);
  CHECK(external_dim_check(b, 1).direct == 8);
}

TEST_CASE("P_k grows with k") {
  VectorMatroid x(2, four_lines_x());
  std::size_t prev = 0;
  for (unsigned c = 0; c <= 3; ++c) {
    const auto dim = pk_space(x, constant_assignment(x, c)).dim();
    CHECK(dim > prev);
    prev = dim;
  }
  CHECK_THROWS_AS(pk_space(x, constant_assignment(x, 2), 3u), InputError);
}

TEST_CASE("central space") {
  const auto inst = make_instance(four_lines_problem());
  const auto cb = central_basis(inst.config);
  CHECK(cb.space.dim() == 6);
  CHECK(cb.space.hilbert().same_values(central_hilbert(inst.config)));
  CHECK_FALSE(cb.rank_deficient);
}
