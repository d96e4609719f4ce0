#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "zonotopal/polyring.hpp"

using namespace zonotopal;
using fixtures::v;

namespace {

Poly t(std::size_t nvars, std::size_t i) { return Poly::monomial(Monomial::variable(nvars, i)); }

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned degree) {
  Poly p(nvars);
  for (const auto& m : monomials_upto(nvars, degree))
    if (rng() % 2) p.add_term(m, Rat(static_cast<long>(rng() % 7) - 3));
  return p;
}

}  // namespace

TEST_CASE("monomial enumeration in graded order") {
  const auto m = monomials_upto(2, 1);
  REQUIRE(m.size() == 3);
  CHECK(m[0].to_string() == "1");
  CHECK(m[1].to_string() == "t1");
  CHECK(m[2].to_string() == "t2");
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_upto(3, 2).size() == 10);
  CHECK(monomials_of_degree(2, 2)[0].to_string() == "t1^2");
}

TEST_CASE("affine forms and rendering") {
  const auto q = Poly::affine_form(v({1, -1}), 1);
  CHECK(q.to_string() == "t1 - t2 - 1");
  CHECK(Poly(2).to_string() == "0");
  CHECK(Poly::constant(2, 3).degree() == 0);
  CHECK(Poly(2).degree() == -1);
}

TEST_CASE("differentiation, pairing and evaluation") {
  const auto t1 = t(2, 0), t2 = t(2, 1);
  const auto f = t1 * t1 * t2 + t2 * Rat(3);
  CHECK(apply_diff(t1, f) == t1 * t2 * Rat(2));
  CHECK(apply_diff(t1 * t2, f) == t1 * Rat(2));
  CHECK(pairing(t1 * t1 * t2, f) == 2);
  CHECK(pairing(t2, f) == 3);
  CHECK(eval(f, VecQ{2, 5}) == 35);
  CHECK(partial_derivative(f, 1) == t1 * t1 + Poly::constant(2, 3));
}

TEST_CASE("least term and homogeneous components") {
  const auto t1 = t(2, 0), t2 = t(2, 1);
  const auto f = t1 * t2 + t2 - t1 * t1 * t1;
  CHECK(least_term(f) == t2);
  CHECK(homogeneous_component(f, 2) == t1 * t2);
  CHECK(f.min_degree() == 1);
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS(least_term(Poly(2)));
}

TEST_CASE("differential action composes multiplicatively") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_poly(rng, 2, 2), q = random_poly(rng, 2, 2), f = random_poly(rng, 2, 4);
    CHECK(apply_diff(p * q, f) == apply_diff(p, apply_diff(q, f)));
    CHECK(apply_diff(p + q, f) == apply_diff(p, f) + apply_diff(q, f));
  }
}

TEST_CASE("pairing on monomials is diagonal with alpha factorial") {
  const auto ms = monomials_upto(3, 3);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      const Rat expected = a == b ? Rat(factorial_product(a)) : Rat(0);
      CHECK(pairing(Poly::monomial(a), Poly::monomial(b)) == expected);
    }
}

TEST_CASE("affine products expand over subsets") {
  // q_Z = sum over S subset Z of p_S * prod_{z not in S} (-lambda_z)
  const std::vector<VecQ> vecs{v({1, 2}), v({0, 1}), v({3, -1})};
  const std::vector<Rat> lambdas{2, -1, 5};
  const auto q = product_over(vecs, lambdas, true, 2);
  Poly sum(2);
  for (std::uint64_t s = 0; s < 8; ++s) {
    std::vector<VecQ> chosen;
    Rat c = 1;
    for (std::size_t i = 0; i < 3; ++i)
      if ((s >> i) & 1)
        chosen.push_back(vecs[i]);
      else
        c *= -lambdas[i];
    sum += product_over(chosen, {}, false, 2) * c;
  }
  CHECK(q == sum);
  CHECK(product_over(std::vector<VecQ>{}, {}, false, 2) == Poly::constant(2, 1));
}

TEST_CASE("coefficient round trip") {
  const auto ms = monomials_upto(2, 2);
  const auto index = index_of(ms);
  std::mt19937_64 rng(3);
  const auto f = random_poly(rng, 2, 2);
  CHECK(from_coefficients(coefficients(f, index), ms) == f);
  CHECK_THROWS(coefficients(t(2, 0) * t(2, 0) * t(2, 0), index));
}
