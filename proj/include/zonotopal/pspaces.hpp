#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zonotopal/external_bases.hpp"
#include "zonotopal/polyring.hpp"

namespace zonotopal {

enum class HilbertProvenance { direct_rank, formula, basis_census };

struct HilbertTable {
  std::map<unsigned, std::size_t> values;  // degree -> dimension; zeros omitted
  HilbertProvenance provenance = HilbertProvenance::direct_rank;

  std::size_t at(unsigned degree) const {
    auto it = values.find(degree);
    return it == values.end() ? 0 : it->second;
  }
  std::size_t total() const;
  bool same_values(const HilbertTable& o) const { return values == o.values; }
};

// Finite-dimensional polynomial space given by a spanning list. Homogeneous
// spaces are handled degree by degree, which also yields the Hilbert table.
class PolySpace {
 public:
  PolySpace() = default;
  // Throws InputError if `homogeneous` is set and some element is not.
  static PolySpace from_spanning(std::vector<Poly> spanning, bool homogeneous, std::size_t nvars);

  const std::vector<Poly>& spanning() const { return spanning_; }
  // Linearly independent sublist of the spanning list, chosen greedily in order.
  const std::vector<Poly>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool homogeneous() const { return homogeneous_; }
  std::size_t nvars() const { return nvars_; }
  // Per-degree dimensions; InputError for a space built as inhomogeneous.
  HilbertTable hilbert() const;
  bool contains(const Poly& f) const;

 private:
  struct Block {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    IncrementalEchelon echelon;
  };
  bool block_contains(const Block& b, const Poly& f) const;

  std::vector<Poly> spanning_, basis_;
  bool homogeneous_ = true;
  std::size_t nvars_ = 0;
  std::map<unsigned, Block> blocks_;  // by degree; one block at key 0 when inhomogeneous
};

std::size_t rank_of(const std::vector<Poly>& polys, std::size_t nvars);

// p_Z and q_Z over ground elements of a configuration.
Poly p_product(const Configuration& config, IndexSet z);
Poly q_product(const Configuration& config, IndexSet z);

struct CentralSpace {
  PolySpace space;
  std::vector<IndexSet> bases;    // B(X)
  std::vector<IndexSet> greedy;   // X(B), aligned with `bases`
  bool rank_deficient = false;    // rank X < n: B(X) is empty and the space is {0}
};

// {p_X(B) : B in B(X)} under the configuration's order on X.
CentralSpace central_basis(const Configuration& config);

struct PkGenerator {
  IndexSet z;            // Z subset of X; the generator is p_{X \ Z} t^alpha
  Monomial alpha;
};

// Generating set of P_k = sum over Z of p_{X\Z} Pi_{k(Z)}, skipping every Z
// with k(Z + x) > k(Z) for some x, since then its term lies in that of Z + x.
std::vector<Poly> pk_spanning(const VectorMatroid& x, const Assignment& a,
                              std::vector<PkGenerator>* generators = nullptr);

// N + max k; no generator of P_k exceeds it.
unsigned default_degree_cap(const VectorMatroid& x, const Assignment& a);

// P_k as a graded space. Throws InputError if a generator exceeds degree_cap.
PolySpace pk_space(const VectorMatroid& x, const Assignment& a, std::optional<unsigned> degree_cap = {});

PolySpace space_from_spanning(std::vector<Poly> spanning, bool homogeneous, std::size_t nvars);

bool membership(const Poly& f, const PolySpace& pk);

struct BkBasis {
  std::vector<IndexSet> bases;  // aligned with `polys`
  std::vector<Poly> polys;
  std::size_t rank = 0;
  bool all_in_pk = false;
  bool spans_pk = false;  // rank == dim P_k
};

// {p_X'(B) : B in B_k}. Members are always independent; for a solid k each is
// verified in P_k (ConsistencyError "not in P_k" otherwise).
BkBasis homogeneous_basis_bk(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                             const PolySpace& pk);

// Q_B = q_{X_B \ B} with X_B = X u Y_{m(B n X)}. Requires a solid and
// incremental assignment; ConsistencyError "span deficiency" if the rank
// falls short of #B_k.
BkBasis inhomogeneous_basis_bk(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                               const PolySpace& pk);

Poly q_basis_polynomial(const Configuration& config, const Assignment& a, IndexSet b);

// Hilbert function of P(X) from the greedy-set census of B(X).
HilbertTable central_hilbert(const Configuration& config);

// h_k(j) = h_X(j) + sum C(j - #X(I) + n - #I - 1, n - #I - 1) over non-basis
// independent I with j - k(I) <= #X(I) <= j.
HilbertTable hilbert_formula(const Configuration& config, const Assignment& a);

struct ExternalDimension {
  std::size_t direct = 0;
  mpz_class closed_form;
};

// Constant assignment k = c: dim P_k by rank against sum C(n + c - #I, c).
ExternalDimension external_dim_check(const VectorMatroid& x, unsigned c);

}  // namespace zonotopal
