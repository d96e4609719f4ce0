#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "zonotopal/exactla.hpp"

using namespace zonotopal;
using fixtures::v;

namespace {

MatQ random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  MatQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      m(i, j).canonicalize();
    }
  return m;
}

Rat det(MatQ m) {
  const std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const MatQ& m) {
  std::size_t best = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::uint64_t rs = 1; rs < (1ull << rows); ++rs)
    for (std::uint64_t cs = 1; cs < (1ull << cols); ++cs) {
      const auto ri = IndexSet(rs).elements(), ci = IndexSet(cs).elements();
      if (ri.size() != ci.size() || ri.size() <= best) continue;
      MatQ sub(ri.size(), ci.size());
      for (std::size_t a = 0; a < ri.size(); ++a)
        for (std::size_t b = 0; b < ci.size(); ++b) sub(a, b) = m(ri[a], ci[b]);
      if (det(sub) != 0) best = ri.size();
    }
  return best;
}

}  // namespace

TEST_CASE("parse_rat canonicalizes") {
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK(parse_rat("-6/3") == Rat(-2));
  CHECK(parse_rat("0/5") == Rat(0));
  CHECK(to_string(parse_rat("-3/6")) == "-1/2");
  CHECK_THROWS_AS(parse_rat("3/-6"), InputError);
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
  CHECK_THROWS_AS(parse_rat(""), InputError);
}

TEST_CASE("rref of a rank-two matrix") {
  const std::vector<VecQ> rows{v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})};
  auto r = rref(MatQ::from_rows(rows, 3));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced(0, 0) == 1);
  CHECK(r.reduced(0, 2) == 1);
  CHECK(r.reduced(1, 2) == 1);
  CHECK(is_zero(r.reduced.row(2)));
}

TEST_CASE("solve exact systems") {
  const std::vector<VecQ> cols{v({1, 1}), v({1, -1})};
  const auto a = MatQ::from_columns(cols, 2);
  CHECK(solve(a, v({3, 1})) == VecQ{2, 1});
  const std::vector<VecQ> dep{v({1, 2}), v({2, 4})};
  const auto singular = MatQ::from_columns(dep, 2);
  CHECK_THROWS_AS(solve(singular, v({1, 0})), NoSolution);
  CHECK_THROWS_AS(solve(singular, v({1, 2})), Underdetermined);
  CHECK(solve(singular, v({1, 2}), Uniqueness::any) == VecQ{1, 0});
  CHECK(is_consistent(singular, v({3, 6})));
  CHECK_FALSE(is_consistent(singular, v({3, 5})));
}

TEST_CASE("rank agrees with the minor oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c);
    if (t % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    CHECK(rank(m) == minor_rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("solve returns a true solution") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    auto a = random_matrix(rng, n, n);
    VecQ x(n);
    for (auto& e : x) e = static_cast<long>(rng() % 11) - 5;
    const auto b = a * x;
    if (rank(a) == n)
      CHECK(solve(a, b) == x);
    else
      CHECK(a * solve(a, b, Uniqueness::any) == b);
  }
}

TEST_CASE("incremental echelon matches rank and kernel") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto m = random_matrix(rng, r, c);
    IncrementalEchelon e(c);
    std::size_t added = 0;
    for (std::size_t i = 0; i < r; ++i) {
      VecQ row(m.row(i).begin(), m.row(i).end());
      added += e.add(row);
      CHECK(e.contains(row));
    }
    CHECK(added == rank(m));
    const auto kernel = e.kernel_basis();
    CHECK(kernel.size() == c - rank(m));
    for (const auto& k : kernel)
      for (std::size_t i = 0; i < r; ++i) CHECK(dot(m.row(i), k) == 0);
    for (std::size_t i = 0; i < e.rank(); ++i) CHECK(e.rows()[i][e.pivots()[i]] == 1);
  }
}
