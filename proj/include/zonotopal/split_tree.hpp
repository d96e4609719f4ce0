#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zonotopal/external_bases.hpp"

namespace zonotopal {

// Binary deletion/restriction certificate that a basis family is placible.
// Node 0 is the root.
struct SplitNode {
  IndexSet avoided;   // A: X-elements in no member (maximal)
  IndexSet required;  // C: X-elements in every member (maximal)
  std::vector<IndexSet> family;
  std::optional<std::size_t> element;  // splitting element; empty at leaves
  std::size_t deletion_child = 0;
  std::size_t restriction_child = 0;
  std::size_t depth = 0;
};

struct SplitTree {
  std::vector<SplitNode> nodes;

  std::size_t leaf_count() const;
  std::size_t depth() const;
  // Members of the leaf families, in left-to-right order.
  std::vector<IndexSet> leaves() const;
};

// Splits B_k by the smallest X-element outside A u C, then (once X is
// exhausted) by Y-elements of the remaining ex(I) in order. Every split is
// checked for placability; throws ConsistencyError("split failed") if a node
// admits no placable non-trivial split. Requires a solid assignment.
SplitTree split_tree(const ExternalBases& bk, const Configuration& config, const Assignment& a);

}  // namespace zonotopal
