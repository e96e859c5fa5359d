#pragma once

#include <string>
#include <vector>

#include "sqds/core.hpp"

namespace sqds {

// Immutable rooted tree built from a parent array. level(root) = 0 and
// level(x) = level(parent(x)) + 1 for every other node. Children lists
// are kept in ascending id order so traversals are deterministic.
struct RootedTree {
  NodeId n = 0;
  NodeId root = kNone;
  std::vector<NodeId> parent;
  std::vector<std::vector<NodeId>> children;
  std::vector<int> level;

  bool valid_node(NodeId x) const { return x >= 0 && x < n; }
};

// Validates and builds a RootedTree. Exactly one entry must be kNone (the
// root); every other entry must name an in-range parent. Cycles and
// disconnected inputs are rejected.
inline RootedTree build_tree(const std::vector<NodeId>& parents) {
  const NodeId n = static_cast<NodeId>(parents.size());
  if (n == 0) throw MalformedTree("empty parent array");

  RootedTree t;
  t.n = n;
  t.parent = parents;
  t.children.assign(n, {});
  t.level.assign(n, -1);

  for (NodeId x = 0; x < n; ++x) {
    const NodeId p = parents[x];
    if (p == kNone) {
      if (t.root != kNone) throw MalformedTree("multiple roots");
      t.root = x;
    } else if (p < 0 || p >= n) {
      throw MalformedTree("parent out of range for node " + std::to_string(x));
    } else {
      t.children[p].push_back(x);
    }
  }
  if (t.root == kNone) throw MalformedTree("no root");

  // Resolve levels by walking each unresolved chain once; a chain that
  // revisits itself without reaching a resolved node is a cycle.
  t.level[t.root] = 0;
  std::vector<NodeId> chain;
  for (NodeId x = 0; x < n; ++x) {
    if (t.level[x] >= 0) continue;
    chain.clear();
    NodeId y = x;
    while (t.level[y] < 0) {
      chain.push_back(y);
      t.level[y] = -2;  // on the current chain
      y = t.parent[y];
      if (y != kNone && t.level[y] == -2) throw MalformedTree("cycle detected");
    }
    int lvl = t.level[y];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) t.level[*it] = ++lvl;
  }
  return t;
}

// Brute-force LCA: lift the deeper walker via parent pointers until the
// two meet. Oracle for the decomposition-based search.
inline NodeId naive_lca(const RootedTree& t, NodeId i, NodeId j) {
  while (i != j) {
    if (t.level[i] >= t.level[j])
      i = t.parent[i];
    else
      j = t.parent[j];
  }
  return i;
}

}  // namespace sqds
