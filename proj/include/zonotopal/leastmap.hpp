#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/pspaces.hpp"

namespace zonotopal {

struct LeastSpace {
  PolySpace space;
  unsigned truncation_degree = 0;  // exponentials were cut above this degree
};

// Pi(Theta): least terms of the graded echelon form of the truncated
// exponentials e_theta. The truncation degree starts at the smallest value
// with enough monomials and grows until the rank reaches #Theta; failing by
// degree #Theta - 1 is a ConsistencyError. InputError("duplicate points") or
// for an empty set.
LeastSpace least_space(const std::vector<VecQ>& points, std::size_t nvars);

// Pi(V_k) for the vertices of B_k.
LeastSpace d_space(const Configuration& config, const ExternalBases& bk);

// E[i][j] = f_i(theta_j)
MatQ evaluation_matrix(const std::vector<Poly>& polys, const std::vector<VecQ>& points);

struct IdealGenerators {
  std::vector<IndexSet> sets;  // inclusion-minimal hitting sets, by size then lexicographically
  std::vector<Poly> polys;     // p_Z, aligned with `sets`
  std::size_t size_cap = 0;
  bool complete = true;        // the cap did not cut the search short
};

// Minimal transversals of the family with at most size_cap elements (default
// N + #Y). ValidationError("cap too small") if none exists below the cap.
IdealGenerators ideal_generators(const Configuration& config, const std::vector<IndexSet>& family,
                                 std::optional<std::size_t> size_cap = {});

struct AnnihilationWitness {
  std::size_t basis_index = 0;
  IndexSet generator;
  Poly image;  // p_Z(D) f, nonzero
};

// Pass (nullopt) iff p_Z(D) f = 0 for every generator and every basis element.
std::optional<AnnihilationWitness> annihilation_check(const std::vector<Poly>& basis, const IdealGenerators& g);

// ker J as a graded space, built degree by degree until a degree with trivial
// kernel. ConsistencyError if the kernel is still nonzero at max_degree.
PolySpace kernel_space(std::size_t nvars, const IdealGenerators& g, unsigned max_degree);

struct CoherenceReport {
  std::size_t count_bk = 0;
  std::size_t least_dim = 0;   // dim Pi(V_k)
  std::size_t kernel_dim = 0;  // dim of the common kernel of the generators
  HilbertTable least_hilbert, kernel_hilbert;
  bool annihilation = false;    // Pi(V_k) inside the kernel
  bool lower_bound = false;     // kernel_dim >= count_bk
  bool solid = false;
  bool coherent = false;        // kernel_dim == count_bk
  bool certified = false;       // solid, coherent, and annihilation passes
  std::optional<AnnihilationWitness> witness;
};

CoherenceReport coherence_check(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                                const LeastSpace& d, const IdealGenerators& g);

struct GramResult {
  MatQ gram;  // G[i][j] = <p_i, d_j>
  std::size_t rank = 0;
  bool nonsingular = false;
};

// ValidationError("dimension mismatch") when the bases differ in size.
GramResult duality_gram(const std::vector<Poly>& p_basis, const std::vector<Poly>& d_basis);

}  // namespace zonotopal
