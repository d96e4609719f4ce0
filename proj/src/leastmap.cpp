#include "zonotopal/leastmap.hpp"

#include <set>

namespace zonotopal {

LeastSpace least_space(const std::vector<VecQ>& points, std::size_t nvars) {
  if (points.empty()) throw InputError("least space of an empty point set");
  std::set<VecQ> distinct;
  for (const auto& p : points) {
    if (p.size() != nvars) throw InputError("point of the wrong dimension");
    if (!distinct.insert(p).second) throw InputError("duplicate points");
  }
  const std::size_t count = points.size();

  unsigned degree = 0;
  while (binomial(static_cast<long>(nvars + degree), static_cast<long>(nvars)) < count) ++degree;

  while (true) {
    if (degree > count - 1)
      throw ConsistencyError("exponentials truncated at degree " + std::to_string(count - 1) +
                             " do not reach full rank");
    const auto monomials = monomials_upto(nvars, degree);
    MatQ m(count, monomials.size());
    for (std::size_t r = 0; r < count; ++r) {
      const auto& theta = points[r];
      std::vector<std::vector<Rat>> powers(nvars, std::vector<Rat>(degree + 1, Rat(1)));
      for (std::size_t i = 0; i < nvars; ++i)
        for (unsigned e = 1; e <= degree; ++e) powers[i][e] = powers[i][e - 1] * theta[i];
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        Rat v = 1;
        for (std::size_t i = 0; i < nvars; ++i) v *= powers[i][monomials[c][i]];
        v /= Rat(factorial_product(monomials[c]));
        m(r, c) = v;
      }
    }
    const auto reduced = rref(std::move(m));
    if (reduced.rank < count) {
      ++degree;
      continue;
    }

    std::vector<Poly> least;
    for (std::size_t r = 0; r < reduced.rank; ++r) {
      const unsigned d = monomials[reduced.pivot_columns[r]].degree();
      Poly f(nvars);
      for (std::size_t c = reduced.pivot_columns[r]; c < monomials.size() && monomials[c].degree() == d; ++c)
        f.add_term(monomials[c], reduced.reduced(r, c));
      least.push_back(std::move(f));
    }
    LeastSpace out{PolySpace::from_spanning(std::move(least), true, nvars), degree};
    if (out.space.dim() != count)
      throw ConsistencyError("least terms span " + std::to_string(out.space.dim()) + " dimensions for " +
                             std::to_string(count) + " points");
    return out;
  }
}

LeastSpace d_space(const Configuration& config, const ExternalBases& bk) {
  return least_space(points_of(vertex_set_vk(config, bk)), config.n());
}

MatQ evaluation_matrix(const std::vector<Poly>& polys, const std::vector<VecQ>& points) {
  MatQ e(polys.size(), points.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) e(i, j) = eval(polys[i], points[j]);
  return e;
}

IdealGenerators ideal_generators(const Configuration& config, const std::vector<IndexSet>& family,
                                 std::optional<std::size_t> size_cap) {
  IdealGenerators out;
  out.size_cap = size_cap.value_or(config.ground_size());
  if (family.empty()) {
    out.sets.push_back(IndexSet{});
    out.polys.push_back(Poly::constant(config.n(), 1));
    return out;
  }

  IndexSet support;
  for (auto b : family) support = support | b;
  const auto universe = support.elements();
  out.complete = out.size_cap >= universe.size();

  auto hits_all = [&](IndexSet z) {
    for (auto b : family)
      if (!z.intersects(b)) return false;
    return true;
  };
  const std::size_t top = std::min(out.size_cap, universe.size());
  for (std::size_t size = 1; size <= top; ++size)
    for_each_subset_of_size(universe, size, [&](IndexSet z) {
      for (auto found : out.sets)
        if (z.contains(found)) return;
      if (hits_all(z)) out.sets.push_back(z);
    });
  if (out.sets.empty())
    throw ValidationError("cap too small: no hitting set with at most " + std::to_string(out.size_cap) +
                          " elements");
  for (auto z : out.sets) out.polys.push_back(p_product(config, z));
  return out;
}

std::optional<AnnihilationWitness> annihilation_check(const std::vector<Poly>& basis, const IdealGenerators& g) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < g.sets.size(); ++j) {
      auto image = apply_diff(g.polys[j], basis[i]);
      if (!image.is_zero()) return AnnihilationWitness{i, g.sets[j], std::move(image)};
    }
  return std::nullopt;
}

PolySpace kernel_space(std::size_t nvars, const IdealGenerators& g, unsigned max_degree) {
  std::vector<Poly> basis;
  for (unsigned d = 0;; ++d) {
    if (d > max_degree)
      throw ConsistencyError("generator kernel is still nonzero at degree " + std::to_string(max_degree));
    const auto source = monomials_of_degree(nvars, d);
    IncrementalEchelon echelon(source.size());
    for (const auto& p : g.polys) {
      if (p.degree() > static_cast<int>(d)) continue;
      // Rows of the map f -> p(D) f, one per target monomial.
      std::map<Monomial, VecQ> rows;
      for (std::size_t c = 0; c < source.size(); ++c) {
        const auto image = apply_diff(p, Poly::monomial(source[c]));
        for (const auto& [m, v] : image.terms()) {
          auto& row = rows[m];
          if (row.empty()) row.assign(source.size(), Rat(0));
          row[c] = v;
        }
      }
      for (auto& [m, row] : rows) echelon.add(std::move(row));
      if (echelon.rank() == source.size()) break;
    }
    const auto kernel = echelon.kernel_basis();
    if (kernel.empty()) break;
    for (const auto& v : kernel) basis.push_back(from_coefficients(v, source));
  }
  return PolySpace::from_spanning(std::move(basis), true, nvars);
}

CoherenceReport coherence_check(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                                const LeastSpace& d, const IdealGenerators& g) {
  CoherenceReport r;
  r.count_bk = bk.family.size();
  r.least_dim = d.space.dim();
  r.least_hilbert = d.space.hilbert();
  r.witness = annihilation_check(d.space.basis(), g);
  r.annihilation = !r.witness;
  const auto cap = static_cast<unsigned>(std::max<std::size_t>(r.count_bk, 1) + config.ground_size());
  const auto kernel = kernel_space(config.n(), g, cap);
  r.kernel_dim = kernel.dim();
  r.kernel_hilbert = kernel.hilbert();
  r.lower_bound = r.kernel_dim >= r.count_bk;
  r.solid = a.solid();
  r.coherent = r.kernel_dim == r.count_bk;
  r.certified = r.solid && r.coherent && r.annihilation && g.complete;
  return r;
}

GramResult duality_gram(const std::vector<Poly>& p_basis, const std::vector<Poly>& d_basis) {
  if (p_basis.size() != d_basis.size())
    throw ValidationError("dimension mismatch: " + std::to_string(p_basis.size()) + " against " +
                          std::to_string(d_basis.size()));
  GramResult out;
  out.gram = MatQ(p_basis.size(), d_basis.size());
  for (std::size_t i = 0; i < p_basis.size(); ++i)
    for (std::size_t j = 0; j < d_basis.size(); ++j) out.gram(i, j) = pairing(p_basis[i], d_basis[j]);
  out.rank = rank(out.gram);
  out.nonsingular = out.rank == p_basis.size();
  return out;
}

}  // namespace zonotopal
