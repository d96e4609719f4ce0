#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/pspaces.hpp"

namespace zonotopal {

struct LagrangeDatum {
  IndexSet b;
  IndexSet i, j;                       // B n X, B n Y
  IndexSet x_b;                        // X u Y_{m(I)}
  Poly q_b;                            // q_{X_B \ B}
  std::vector<IndexSet> survivors;     // A, in B_k order
  IndexSet i_dd;                       // {x in I : k(I - x) < k(I)}
  std::optional<std::size_t> y_prime;  // ground index of y_{m(I)+1}; empty when A = {B}
  std::map<std::size_t, Rat> coeffs;   // y' = sum a(x) x over x in B
  Poly ell;
  Poly l;                              // Q_B * ell
};

// A = {B' in B_k : Q_B(b(B')) != 0}, computed by evaluation and by the
// four-condition characterization; ConsistencyError("lemma mismatch") if the
// two differ. `vertices` is aligned with bk.family.members.
std::vector<IndexSet> survivors(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                                const std::vector<Vertex>& vertices, IndexSet b);

// L_B = Q_B ell_B; ell_B = 1 when A = {B}. ValidationError("Y too short for
// correction vector") if y_{m(I)+1} is missing. Requires a solid assignment.
LagrangeDatum build_lagrange(const Configuration& config, const Assignment& a, const ExternalBases& bk,
                             const std::vector<Vertex>& vertices, IndexSet b);

// Y length needed so that every correction vector exists.
std::size_t lagrange_y_size(const VectorMatroid& x, const Assignment& a);

struct LagrangeSuite {
  Configuration config;  // Y extended as needed; prefix unchanged
  std::vector<Vertex> vertices;
  std::vector<LagrangeDatum> data;
};

LagrangeSuite lagrange_basis(const Configuration& config, const Assignment& a);

struct LagrangeVerification {
  MatQ evaluation;  // E[i][j] = L_i(v_j)
  bool diagonal = false;
  bool all_in_space = false;
  std::size_t rank = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first bad entry of E
  std::optional<std::size_t> outside;                          // first L_i not in the space
  bool pass() const { return diagonal && all_in_space; }
};

LagrangeVerification verify_lagrange(const std::vector<Poly>& polys, const std::vector<Vertex>& vertices,
                                     const PolySpace& space);
inline LagrangeVerification verify_lagrange(const LagrangeSuite& suite, const PolySpace& pk) {
  std::vector<Poly> polys;
  for (const auto& d : suite.data) polys.push_back(d.l);
  return verify_lagrange(polys, suite.vertices, pk);
}

struct CentralLagrange {
  std::vector<IndexSet> bases;
  std::vector<Vertex> vertices;
  std::vector<Poly> polys;  // q_{X \ B}
};

// q_{X \ B} over B(X) and the vertices b(B(X)).
CentralLagrange central_lagrange(const Configuration& config);

}  // namespace zonotopal
