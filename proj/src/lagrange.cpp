#include "zonotopal/lagrange.hpp"

#include "zonotopal/leastmap.hpp"

#include <algorithm>

namespace zonotopal {

namespace {

std::string set_string(IndexSet s) {
  std::string out = "{";
  for (auto e : s) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

std::size_t index_in(const ExternalBases& bk, IndexSet b) {
  const auto& m = bk.family.members;
  const auto it = std::find(m.begin(), m.end(), b);
  if (it == m.end()) throw InputError("basis " + set_string(b) + " is not in B_k");
  return static_cast<std::size_t>(it - m.begin());
}

IndexSet y_slice(const Configuration& config, std::size_t from, std::size_t to) {
  return config.y_prefix(static_cast<std::ptrdiff_t>(to)) - config.y_prefix(static_cast<std::ptrdiff_t>(from));
}

}  // namespace

std::vector<IndexSet> survivors(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                                const std::vector<Vertex>& vertices, IndexSet b) {
  if (!a.solid()) throw ValidationError("survivor sets require a solid assignment");
  index_in(bk, b);
  const std::size_t n = config.n();
  const IndexSet i = b & config.x_set();
  const IndexSet j = b & config.y_set();
  const auto m = m_value(i, a, n);
  const Poly q = q_basis_polynomial(config, a, b);

  std::vector<IndexSet> by_eval, by_conditions;
  for (std::size_t t = 0; t < bk.family.members.size(); ++t) {
    const IndexSet other = bk.family.members[t];
    if (sgn(eval(q, vertices[t].point)) != 0) by_eval.push_back(other);

    const IndexSet i2 = other & config.x_set();
    const bool c1 = i.contains(i2);
    const bool c2 = (other & config.y_prefix(static_cast<std::ptrdiff_t>(m))) == j;
    const bool c3 = a.value(i2) == a.value(i);
    bool c4 = false;
    if (c1 && c2 && c3) {
      const auto m2 = m_value(i2, a, n);
      c4 = ((other & config.y_set()) - b) == y_slice(config, m, m2);
    }
    if (c1 && c2 && c3 && c4) by_conditions.push_back(other);
  }
  if (by_eval != by_conditions)
    throw ConsistencyError("lemma mismatch at B = " + set_string(b) + ": " + std::to_string(by_eval.size()) +
                           " survivors by evaluation, " + std::to_string(by_conditions.size()) + " by the conditions");
  return by_eval;
}

LagrangeDatum build_lagrange(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                             const std::vector<Vertex>& vertices, IndexSet b) {
  LagrangeDatum d;
  d.b = b;
  d.i = b & config.x_set();
  d.j = b & config.y_set();
  const std::size_t n = config.n();
  const auto m = m_value(d.i, a, n);
  d.x_b = config.x_set() | config.y_prefix(static_cast<std::ptrdiff_t>(m));
  d.q_b = q_product(config, d.x_b - b);
  d.survivors = survivors(config, a, bk, vertices, b);
  for (auto x : d.i)
    if (a.value(d.i.without(x)) < a.value(d.i)) d.i_dd.insert(x);

  if (d.survivors.size() == 1 && d.survivors.front() == b) {
    d.ell = Poly::constant(n, 1);
    d.l = d.q_b;
    return d;
  }
  if (m + 1 > config.y_count())
    throw ValidationError("Y too short for correction vector: need y_" + std::to_string(m + 1) + ", have " +
                          std::to_string(config.y_count()));
  const std::size_t yp = config.y_ground_index(m);
  d.y_prime = yp;

  std::vector<VecQ> columns;
  for (auto x : b) columns.push_back(config.vector(x));
  const auto coeffs = solve(MatQ::from_columns(columns, n), config.vector(yp));
  std::size_t c = 0;
  for (auto x : b) d.coeffs[x] = coeffs[c++];

  d.ell = Poly::affine_form(config.vector(yp), config.lambda(yp));
  for (auto x : d.i_dd | d.j)
    d.ell -= Poly::affine_form(config.vector(x), config.lambda(x)) * d.coeffs.at(x);
  d.l = d.q_b * d.ell;
  return d;
}

std::size_t lagrange_y_size(const VectorMatroid& x, const Assignment& a) {
  std::size_t need = required_y_size(x, a);
  for (auto i : independents(x)) {
    bool corrected = false;
    for (auto e : i)
      if (a.value(i.without(e)) == a.value(i)) corrected = true;
    if (corrected) need = std::max(need, m_value(i, a, x.dim()) + 1);
  }
  return need;
}

LagrangeSuite lagrange_basis(const Configuration& config, const Assignment& a) {
  const auto need = lagrange_y_size(config.x_matroid(), a);
  LagrangeSuite suite{need > config.y_count() ? extend_configuration(config, need) : config, {}, {}};
  const auto bk = enumerate_bk(suite.config, a);
  suite.vertices = vertex_set_vk(suite.config, bk);
  for (auto b : bk.family.members) suite.data.push_back(build_lagrange(suite.config, a, bk, suite.vertices, b));
  return suite;
}

LagrangeVerification verify_lagrange(const std::vector<Poly>& polys, const std::vector<Vertex>& vertices,
                                     const PolySpace& space) {
  LagrangeVerification v;
  v.evaluation = evaluation_matrix(polys, points_of(vertices));
  v.diagonal = polys.size() == vertices.size();
  for (std::size_t r = 0; r < v.evaluation.rows() && v.diagonal; ++r)
    for (std::size_t c = 0; c < v.evaluation.cols(); ++c) {
      const bool zero = sgn(v.evaluation(r, c)) == 0;
      if (zero == (r == c)) {
        v.diagonal = false;
        v.witness = std::make_pair(r, c);
        break;
      }
    }
  v.all_in_space = true;
  for (std::size_t r = 0; r < polys.size(); ++r)
    if (!space.contains(polys[r])) {
      v.all_in_space = false;
      v.outside = r;
      break;
    }
  v.rank = rank_of(polys, space.nvars());
  return v;
}

CentralLagrange central_lagrange(const Configuration& config) {
  CentralLagrange out;
  out.bases = bases(config.x_matroid()).members;
  out.vertices = vertices_of(config, out.bases);
  for (auto b : out.bases) out.polys.push_back(q_product(config, config.x_set() - b));
  return out;
}

}  // namespace zonotopal
