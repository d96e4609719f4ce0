#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "zonotopal/groundset.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

// B_k grouped by I = B n X: ex(I) lists the extensions of I by subsets of
// Y_{m(I)}.
struct ExternalBases {
  BasisFamily family;                     // all of B_k, grouped by I in I(X) order
  std::vector<IndexSet> independent_sets;  // I(X), in the order used by `family`
  std::map<std::uint64_t, std::vector<IndexSet>> extensions;  // keyed by I.mask()

  const std::vector<IndexSet>& ex(IndexSet i) const { return extensions.at(i.mask()); }
};

// {B in B(X u Y) : B n Y is contained in Y_{m(B n X)}}. Requires
// #Y >= required_y_size.
ExternalBases enumerate_bk(const Configuration& config, const Assignment& a);

// Closed form: sum over I in I(X) of C(m(I), k(I)).
mpz_class count_bk(const VectorMatroid& x, const Assignment& a);

// X'(B) = {z in ground \ B : z not in span{b in B : b < z}}, where `<` is the
// configuration order restricted to `universe`.
IndexSet greedy_set(const Configuration& config, IndexSet b, IndexSet universe);
inline IndexSet greedy_set(const Configuration& config, IndexSet b) {
  return greedy_set(config, b, config.x_set() | config.y_set());
}

// Family with both parts split by an element.
struct Decomposition {
  std::vector<IndexSet> deletion;     // members avoiding the element
  std::vector<IndexSet> restriction;  // members containing it
};
Decomposition decompose(const std::vector<IndexSet>& family, std::size_t element);

// For every B in the family some a in B has (B + x) - a in the family.
bool is_placable(const std::vector<IndexSet>& family, std::size_t element);

}  // namespace zonotopal
