#include "zonotopal/arrangement.hpp"

#include <map>

namespace zonotopal {

Vertex vertex(const Configuration& config, IndexSet b) {
  std::vector<VecQ> rows;
  VecQ rhs;
  for (auto g : b) {
    rows.push_back(config.vector(g));
    rhs.push_back(config.lambda(g));
  }
  if (rows.size() != config.n()) throw ConsistencyError("singular system: basis has the wrong size");
  try {
    return {solve(MatQ::from_rows(rows, config.n()), rhs), b};
  } catch (const NoSolution&) {
    throw ConsistencyError("singular system");
  } catch (const Underdetermined&) {
    throw ConsistencyError("singular system");
  }
}

std::vector<Vertex> vertices_of(const Configuration& config, const std::vector<IndexSet>& family) {
  std::vector<Vertex> out;
  std::map<VecQ, IndexSet> seen;
  for (auto b : family) {
    auto v = vertex(config, b);
    auto [it, fresh] = seen.emplace(v.point, b);
    if (!fresh) {
      std::string a, c;
      for (auto e : it->second) a += " " + std::to_string(e);
      for (auto e : b) c += " " + std::to_string(e);
      throw ConsistencyError("genericity violated: bases {" + a + " } and {" + c + " } share a vertex");
    }
    out.push_back(std::move(v));
  }
  return out;
}

IndexSet vanishing_set(const Configuration& config, const VecQ& point) {
  IndexSet out;
  for (std::size_t g = 0; g < config.ground_size(); ++g)
    if (dot(config.vector(g), point) == config.lambda(g)) out.insert(g);
  return out;
}

std::vector<VecQ> points_of(const std::vector<Vertex>& vertices) {
  std::vector<VecQ> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.point);
  return out;
}

}  // namespace zonotopal
