#include "zonotopal/pspaces.hpp"

#include <algorithm>

namespace zonotopal {

std::size_t HilbertTable::total() const {
  std::size_t s = 0;
  for (const auto& [degree, count] : values) s += count;
  return s;
}

namespace {

template <typename MonomialList>
std::map<Monomial, std::size_t> make_index(const MonomialList& monomials) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  return index;
}

}  // namespace

PolySpace PolySpace::from_spanning(std::vector<Poly> spanning, bool homogeneous, std::size_t nvars) {
  PolySpace s;
  s.homogeneous_ = homogeneous;
  s.nvars_ = nvars;

  int top = -1;
  for (const auto& f : spanning) {
    if (f.nvars() != nvars && !f.is_zero()) throw InputError("polynomial in the wrong number of variables");
    if (homogeneous && !f.is_homogeneous())
      throw InputError("inhomogeneous element " + f.to_string() + " in a graded spanning list");
    top = std::max(top, f.degree());
  }

  auto block_for = [&](unsigned key, unsigned degree) -> Block& {
    auto it = s.blocks_.find(key);
    if (it != s.blocks_.end()) return it->second;
    Block b;
    b.monomials = homogeneous ? monomials_of_degree(nvars, degree) : monomials_upto(nvars, degree);
    b.index = make_index(b.monomials);
    b.echelon = IncrementalEchelon(b.monomials.size());
    return s.blocks_.emplace(key, std::move(b)).first->second;
  };

  for (const auto& f : spanning) {
    if (f.is_zero()) continue;
    const auto degree = static_cast<unsigned>(f.degree());
    Block& b = homogeneous ? block_for(degree, degree) : block_for(0, static_cast<unsigned>(top));
    if (b.echelon.add(coefficients(f, b.index))) s.basis_.push_back(f);
  }
  s.spanning_ = std::move(spanning);
  return s;
}

bool PolySpace::block_contains(const Block& b, const Poly& f) const {
  for (const auto& [m, c] : f.terms())
    if (!b.index.count(m)) return false;
  return b.echelon.contains(coefficients(f, b.index));
}

bool PolySpace::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (homogeneous_) {
    for (int d = f.min_degree(); d <= f.degree(); ++d) {
      const auto part = homogeneous_component(f, static_cast<unsigned>(d));
      if (part.is_zero()) continue;
      auto it = blocks_.find(static_cast<unsigned>(d));
      if (it == blocks_.end() || !block_contains(it->second, part)) return false;
    }
    return true;
  }
  if (blocks_.empty()) return false;
  return block_contains(blocks_.begin()->second, f);
}

HilbertTable PolySpace::hilbert() const {
  if (!homogeneous_) throw InputError("Hilbert table of an ungraded space");
  HilbertTable h;
  h.provenance = HilbertProvenance::direct_rank;
  for (const auto& [degree, block] : blocks_)
    if (block.echelon.rank() > 0) h.values[degree] = block.echelon.rank();
  return h;
}

std::size_t rank_of(const std::vector<Poly>& polys, std::size_t nvars) {
  return PolySpace::from_spanning(polys, false, nvars).dim();
}

namespace {

Poly ground_product(const Configuration& config, IndexSet z, bool use_lambda) {
  std::vector<VecQ> vectors;
  std::vector<Rat> lambdas;
  for (auto g : z) {
    vectors.push_back(config.vector(g));
    lambdas.push_back(config.lambda(g));
  }
  return product_over(vectors, lambdas, use_lambda, config.n());
}

Poly x_product(const VectorMatroid& x, IndexSet z) {
  std::vector<VecQ> vectors;
  for (auto e : z) vectors.push_back(x.vector(e));
  return product_over(vectors, {}, false, x.dim());
}

}  // namespace

Poly p_product(const Configuration& config, IndexSet z) { return ground_product(config, z, false); }
Poly q_product(const Configuration& config, IndexSet z) { return ground_product(config, z, true); }

CentralSpace central_basis(const Configuration& config) {
  CentralSpace out;
  out.bases = bases(config.x_matroid()).members;
  out.rank_deficient = out.bases.empty();
  std::vector<Poly> polys;
  for (auto b : out.bases) {
    out.greedy.push_back(greedy_set(config, b, config.x_set()));
    polys.push_back(p_product(config, out.greedy.back()));
  }
  out.space = PolySpace::from_spanning(std::move(polys), true, config.n());
  return out;
}

std::vector<Poly> pk_spanning(const VectorMatroid& x, const Assignment& a, std::vector<PkGenerator>* generators) {
  std::vector<IndexSet> candidates;
  for_each_subset(x.all(), [&](IndexSet z) { candidates.push_back(z); });
  std::sort(candidates.begin(), candidates.end());

  std::vector<Poly> out;
  for (auto z : candidates) {
    const unsigned kz = a.value(z);
    bool dominated = false;
    for (auto e : x.all() - z)
      if (a.value(z.with(e)) >= kz + 1) dominated = true;
    if (dominated) continue;
    const Poly base = x_product(x, x.all() - z);
    for (const auto& alpha : monomials_upto(x.dim(), kz)) {
      out.push_back(base * Poly::monomial(alpha));
      if (generators) generators->push_back({z, alpha});
    }
  }
  return out;
}

unsigned default_degree_cap(const VectorMatroid& x, const Assignment& a) {
  return static_cast<unsigned>(x.size()) + a.max_value();
}

PolySpace pk_space(const VectorMatroid& x, const Assignment& a, std::optional<unsigned> degree_cap) {
  const unsigned cap = degree_cap.value_or(default_degree_cap(x, a));
  auto spanning = pk_spanning(x, a);
  for (const auto& f : spanning)
    if (f.degree() > static_cast<int>(cap))
      throw InputError("degree cap " + std::to_string(cap) + " is below generator degree " +
                       std::to_string(f.degree()));
  return PolySpace::from_spanning(std::move(spanning), true, x.dim());
}

PolySpace space_from_spanning(std::vector<Poly> spanning, bool homogeneous, std::size_t nvars) {
  return PolySpace::from_spanning(std::move(spanning), homogeneous, nvars);
}

bool membership(const Poly& f, const PolySpace& pk) { return pk.contains(f); }

namespace {

std::string set_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

BkBasis homogeneous_basis_bk(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                             const PolySpace& pk) {
  BkBasis out;
  out.all_in_pk = true;
  for (auto b : bk.family.members) {
    auto p = p_product(config, greedy_set(config, b));
    if (!pk.contains(p)) {
      if (a.solid())
        throw ConsistencyError("not in P_k: p_X'(B) for B = " + set_string(b) + " is " + p.to_string());
      out.all_in_pk = false;
    }
    out.bases.push_back(b);
    out.polys.push_back(std::move(p));
  }
  out.rank = PolySpace::from_spanning(out.polys, true, config.n()).dim();
  out.spans_pk = out.all_in_pk && out.rank == pk.dim();
  return out;
}

Poly q_basis_polynomial(const Configuration& config, const Assignment& a, IndexSet b) {
  const IndexSet i = b & config.x_set();
  const auto m = m_value(i, a, config.n());
  const IndexSet xb = config.x_set() | config.y_prefix(static_cast<std::ptrdiff_t>(m));
  return q_product(config, xb - b);
}

BkBasis inhomogeneous_basis_bk(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                               const PolySpace& pk) {
  if (!a.solid() || !a.incremental())
    throw ValidationError("the inhomogeneous basis requires a solid and incremental assignment");
  BkBasis out;
  out.all_in_pk = true;
  for (auto b : bk.family.members) {
    auto q = q_basis_polynomial(config, a, b);
    if (!pk.contains(q))
      throw ConsistencyError("not in P_k: Q_B for B = " + set_string(b) + " is " + q.to_string());
    out.bases.push_back(b);
    out.polys.push_back(std::move(q));
  }
  out.rank = rank_of(out.polys, config.n());
  if (out.rank < out.polys.size())
    throw ConsistencyError("span deficiency: rank " + std::to_string(out.rank) + " for " +
                           std::to_string(out.polys.size()) + " external bases");
  out.spans_pk = out.rank == pk.dim();
  return out;
}

HilbertTable central_hilbert(const Configuration& config) {
  HilbertTable h;
  h.provenance = HilbertProvenance::basis_census;
  for (auto b : bases(config.x_matroid()).members) ++h.values[static_cast<unsigned>(greedy_set(config, b, config.x_set()).size())];
  return h;
}

HilbertTable hilbert_formula(const Configuration& config, const Assignment& a) {
  const auto central = central_hilbert(config);
  const auto& xm = config.x_matroid();
  const long n = static_cast<long>(config.n());

  struct Term {
    long greedy_size, size, k;
  };
  std::vector<Term> terms;
  for (auto i : independents(xm)) {
    if (static_cast<long>(i.size()) == n) continue;
    terms.push_back({static_cast<long>(greedy_set(config, i, config.x_set()).size()), static_cast<long>(i.size()),
                     static_cast<long>(a.value(i))});
  }

  HilbertTable h;
  h.provenance = HilbertProvenance::formula;
  const unsigned top = default_degree_cap(xm, a);
  for (unsigned j = 0; j <= top; ++j) {
    mpz_class value = central.at(j);
    for (const auto& t : terms) {
      const long jj = j;
      if (jj - t.k <= t.greedy_size && t.greedy_size <= jj)
        value += binomial(jj - t.greedy_size + n - t.size - 1, n - t.size - 1);
    }
    if (value != 0) h.values[j] = value.get_ui();
  }
  return h;
}

ExternalDimension external_dim_check(const VectorMatroid& x, unsigned c) {
  ExternalDimension out;
  out.direct = pk_space(x, constant_assignment(x, c)).dim();
  const long n = static_cast<long>(x.dim());
  for (auto i : independents(x)) out.closed_form += binomial(n + c - static_cast<long>(i.size()), c);
  return out;
}

}  // namespace zonotopal
