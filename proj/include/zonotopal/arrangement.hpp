#pragma once

#include <vector>

#include "zonotopal/external_bases.hpp"

namespace zonotopal {

struct Vertex {
  VecQ point;
  IndexSet basis;
};

// Common zero of q_z, z in B. ConsistencyError("singular system") if B is
// not a basis.
Vertex vertex(const Configuration& config, IndexSet b);

// b(B) for every member, in family order. ConsistencyError("genericity
// violated") if two members share a vertex.
std::vector<Vertex> vertices_of(const Configuration& config, const std::vector<IndexSet>& family);

// V_k = b(B_k).
inline std::vector<Vertex> vertex_set_vk(const Configuration& config, const ExternalBases& bk) {
  return vertices_of(config, bk.family.members);
}

// Ground elements z with q_z(point) = 0.
IndexSet vanishing_set(const Configuration& config, const VecQ& point);

std::vector<VecQ> points_of(const std::vector<Vertex>& vertices);

}  // namespace zonotopal
