#include "zonotopal/external_bases.hpp"

#include <algorithm>
#include <set>

namespace zonotopal {

ExternalBases enumerate_bk(const Configuration& config, const Assignment& a) {
  const std::size_t n = config.n();
  const auto& ground = config.ground_matroid();
  ExternalBases out;
  out.family.kind = FamilyKind::external;
  out.independent_sets = independents(config.x_matroid());
  for (auto i : out.independent_sets) {
    const std::size_t m = m_value(i, a, n);
    if (m > config.y_count())
      throw ValidationError("Y has " + std::to_string(config.y_count()) + " elements but m(I) = " +
                            std::to_string(m));
    auto& group = out.extensions[i.mask()];
    for_each_subset_of_size(config.y_prefix(static_cast<std::ptrdiff_t>(m)).elements(), n - i.size(),
                            [&](IndexSet j) {
                              const IndexSet b = i | j;
                              if (ground.is_basis(b)) group.push_back(b);
                            });
    out.family.members.insert(out.family.members.end(), group.begin(), group.end());
  }
  return out;
}

mpz_class count_bk(const VectorMatroid& x, const Assignment& a) {
  mpz_class total = 0;
  for (auto i : independents(x)) {
    const auto m = static_cast<long>(m_value(i, a, x.dim()));
    total += binomial(m, static_cast<long>(a.value(i)));
  }
  return total;
}

IndexSet greedy_set(const Configuration& config, IndexSet b, IndexSet universe) {
  const auto& m = config.ground_matroid();
  IndexSet out;
  for (auto z : universe) {
    if (b.contains(z)) continue;
    IndexSet earlier;
    for (auto e : b)
      if (config.position(e) < config.position(z)) earlier.insert(e);
    if (!m.in_span(z, earlier)) out.insert(z);
  }
  return out;
}

Decomposition decompose(const std::vector<IndexSet>& family, std::size_t element) {
  Decomposition d;
  for (auto b : family) (b.contains(element) ? d.restriction : d.deletion).push_back(b);
  return d;
}

bool is_placable(const std::vector<IndexSet>& family, std::size_t element) {
  std::set<std::uint64_t> members;
  for (auto b : family) members.insert(b.mask());
  for (auto b : family) {
    if (b.contains(element)) continue;
    bool found = false;
    for (auto a : b)
      if (members.count(b.without(a).with(element).mask())) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace zonotopal
