#include "zonotopal/split_tree.hpp"

#include <algorithm>

namespace zonotopal {

std::size_t SplitTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const SplitNode& n) { return !n.element; }));
}

std::size_t SplitTree::depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes) d = std::max(d, n.depth);
  return d;
}

std::vector<IndexSet> SplitTree::leaves() const {
  std::vector<IndexSet> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto& node = nodes[stack.back()];
    stack.pop_back();
    if (!node.element) {
      out.insert(out.end(), node.family.begin(), node.family.end());
      continue;
    }
    stack.push_back(node.restriction_child);
    stack.push_back(node.deletion_child);
  }
  return out;
}

namespace {

struct Builder {
  const Configuration& config;
  SplitTree tree;

  std::size_t add(std::vector<IndexSet> family, std::size_t depth) {
    SplitNode node;
    node.depth = depth;
    IndexSet in_any, in_all = config.x_set();
    for (auto b : family) {
      in_any = in_any | (b & config.x_set());
      in_all = in_all & b;
    }
    node.avoided = config.x_set() - in_any;
    node.required = in_all;
    node.family = std::move(family);
    tree.nodes.push_back(std::move(node));
    return tree.nodes.size() - 1;
  }

  void expand(std::size_t index) {
    if (tree.nodes[index].family.size() == 1) return;
    const auto family = tree.nodes[index].family;
    const auto& node = tree.nodes[index];

    std::vector<std::size_t> candidates;
    for (auto x : config.x_set() - (node.avoided | node.required)) candidates.push_back(x);
    if (candidates.empty())
      for (auto y : config.y_set()) candidates.push_back(y);
    std::sort(candidates.begin(), candidates.end(),
              [&](auto a, auto b) { return config.position(a) < config.position(b); });

    for (auto e : candidates) {
      auto parts = decompose(family, e);
      if (parts.deletion.empty() || parts.restriction.empty()) continue;
      if (!is_placable(family, e))
        throw ConsistencyError("split failed: element " + std::to_string(e) + " is not placable at a node with " +
                               std::to_string(family.size()) + " bases");
      const std::size_t depth = tree.nodes[index].depth + 1;
      const auto del = add(std::move(parts.deletion), depth);
      const auto res = add(std::move(parts.restriction), depth);
      tree.nodes[index].element = e;
      tree.nodes[index].deletion_child = del;
      tree.nodes[index].restriction_child = res;
      expand(del);
      expand(res);
      return;
    }
    throw ConsistencyError("split failed: no non-trivial split at a node with " + std::to_string(family.size()) +
                           " bases");
  }
};

}  // namespace

SplitTree split_tree(const ExternalBases& bk, const Configuration& config, const Assignment& a) {
  if (!a.solid()) throw ValidationError("the split tree requires a solid assignment");
  if (bk.family.members.empty()) throw ValidationError("cannot split an empty basis family");
  Builder builder{config, {}};
  builder.add(bk.family.members, 0);
  builder.expand(0);
  return std::move(builder.tree);
}

}  // namespace zonotopal
