#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/tree.hpp"

namespace sqds {

// Compressed super-node representation of a rooted tree, parameterized by
// a block length h. Super-nodes are an O(n/h)-sized subset of the nodes;
// every super-node except the root owns a "group": the path from itself up
// to (and excluding) its super-parent, at most h nodes long. Groups are
// pairwise disjoint, and every node on no group has a grouped ancestor at
// most 2h levels above it.
struct Decomposition {
  const RootedTree* tree = nullptr;
  int h = 0;

  std::vector<char> is_special;        // level divisible by h
  std::vector<char> is_super;
  std::vector<NodeId> super_parent;    // first super-node strictly above; kNone unless super
  std::vector<NodeId> group_of;        // owning super-node, kNone for ungrouped
  std::vector<int> pos_in_group;       // index into the owning group sequence, -1 for ungrouped

  std::vector<NodeId> supers;          // super-node ids, ascending
  std::vector<int> super_index;        // node id -> position in supers, -1 otherwise
  std::vector<std::vector<NodeId>> group_seq;       // by super index; [0] is the super itself
  std::vector<std::vector<NodeId>> super_children;  // by super index; ascending ids

  int isn_count = 0;
  int esn_count = 0;
  StepCount build_steps = 0;

  NodeId root() const { return tree->root; }
  int level(NodeId x) const { return tree->level[x]; }
  NodeId parent(NodeId x) const { return tree->parent[x]; }
  const std::vector<NodeId>& group(NodeId s) const { return group_seq[super_index[s]]; }
  std::size_t group_len(NodeId s) const { return group(s).size(); }
  std::size_t super_count() const { return supers.size(); }
};

inline int default_block_length(NodeId n) {
  const int h = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  return h < 1 ? 1 : h;
}

// Stage 1: a node is special iff its level is divisible by h. The root is
// always special.
inline std::vector<char> mark_special(const RootedTree& t, int h, StepCount* steps = nullptr) {
  if (h < 1) throw InvalidH("block length must be >= 1, got " + std::to_string(h));
  std::vector<char> special(t.n, 0);
  for (NodeId x = 0; x < t.n; ++x) special[x] = t.level[x] % h == 0 ? 1 : 0;
  if (steps) *steps += static_cast<StepCount>(t.n);
  return special;
}

// Stage 2: climb from every special node (except the root) to the first
// special node above it and mark that node as an initial super-node. A
// climb stops early when it reaches a node some earlier climb already
// passed through: the target above that point is already marked, so the
// whole stage touches each node at most once.
inline std::vector<char> select_initial_supernodes(const RootedTree& t,
                                                   const std::vector<char>& special,
                                                   StepCount* steps = nullptr) {
  std::vector<char> isn(t.n, 0);
  isn[t.root] = 1;
  std::vector<char> seen(t.n, 0);
  StepCount local = 0;
  for (NodeId x = 0; x < t.n; ++x) {
    if (!special[x] || x == t.root) continue;
    NodeId y = t.parent[x];
    ++local;
    while (!special[y] && !seen[y]) {
      seen[y] = 1;
      y = t.parent[y];
      ++local;
    }
    if (special[y]) isn[y] = 1;
  }
  if (steps) *steps += local;
  return isn;
}

// Stage 3: walk up from every non-root initial super-node, marking nodes
// visited; a walk that ends on an already-visited node has found an
// intersection of two such paths, which becomes an extra super-node.
// Returns the union of initial and extra super flags.
inline std::vector<char> add_extra_supernodes(const RootedTree& t, const std::vector<char>& isn,
                                              StepCount* steps = nullptr) {
  std::vector<char> super = isn;
  std::vector<char> visited(t.n, 0);
  StepCount local = 0;
  for (NodeId x = 0; x < t.n; ++x) {
    if (!isn[x] || x == t.root) continue;
    NodeId y = t.parent[x];
    ++local;
    while (!super[y] && !visited[y]) {
      visited[y] = 1;
      y = t.parent[y];
      ++local;
    }
    if (!super[y]) super[y] = 1;  // visited twice: path intersection
  }
  if (steps) *steps += local;
  return super;
}

// Stage 4: walk up from every non-root super-node to the first super-node
// above it; the walked path (including the start, excluding the end) is
// the start's group. The root gets the singleton group [root]. Throws if
// any node would land in two groups.
inline Decomposition assign_super_parents(const RootedTree& t, const std::vector<char>& super_flags,
                                          int h, StepCount* steps = nullptr) {
  if (h < 1) throw InvalidH("block length must be >= 1, got " + std::to_string(h));
  Decomposition d;
  d.tree = &t;
  d.h = h;
  d.is_special = mark_special(t, h);
  d.is_super = super_flags;
  d.super_parent.assign(t.n, kNone);
  d.group_of.assign(t.n, kNone);
  d.pos_in_group.assign(t.n, -1);
  d.super_index.assign(t.n, -1);

  for (NodeId x = 0; x < t.n; ++x) {
    if (!super_flags[x]) continue;
    d.super_index[x] = static_cast<int>(d.supers.size());
    d.supers.push_back(x);
    // extra super-nodes are exactly the non-special supers
    if (d.is_special[x])
      ++d.isn_count;
    else
      ++d.esn_count;
  }
  d.group_seq.resize(d.supers.size());
  d.super_children.resize(d.supers.size());

  StepCount local = 0;
  auto claim = [&](NodeId node, NodeId owner, int pos) {
    if (d.group_of[node] != kNone)
      throw DisjointnessViolation("node " + std::to_string(node) + " assigned to two groups");
    d.group_of[node] = owner;
    d.pos_in_group[node] = pos;
  };

  for (NodeId x : d.supers) {
    auto& seq = d.group_seq[d.super_index[x]];
    if (x == t.root) {
      seq.push_back(x);
      claim(x, x, 0);
      continue;
    }
    seq.push_back(x);
    NodeId y = t.parent[x];
    ++local;
    while (!super_flags[y]) {
      seq.push_back(y);
      y = t.parent[y];
      ++local;
    }
    d.super_parent[x] = y;
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) claim(seq[p], x, p);
    d.super_children[d.super_index[y]].push_back(x);
  }
  if (steps) *steps += local;
  return d;
}

// Full pipeline. The step counter over all four stages is O(n).
inline Decomposition build_decomposition(const RootedTree& t, int h) {
  StepCount steps = 0;
  const auto special = mark_special(t, h, &steps);
  const auto isn = select_initial_supernodes(t, special, &steps);
  const auto super = add_extra_supernodes(t, isn, &steps);
  Decomposition d = assign_super_parents(t, super, h, &steps);
  d.build_steps = steps;
  return d;
}

inline Decomposition build_decomposition(const RootedTree& t) {
  return build_decomposition(t, default_block_length(t.n));
}

}  // namespace sqds
