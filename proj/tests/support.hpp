#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqds/decomposition.hpp"
#include "sqds/tree.hpp"

namespace sqds::testing {

// Deterministic generator; bounds applied by modulus so sequences are
// identical across platforms.
struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t next(std::uint64_t bound) { return gen() % bound; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  std::mt19937_64 gen;
};

// Random parent arrays cycling through three shapes: uniform attachment
// (shallow), chain-biased (deep with side branches), and attach-to-recent
// (path-like). Depth diversity matters for exercising group boundaries.
inline std::vector<NodeId> random_parents(Rng& rng, NodeId n) {
  std::vector<NodeId> parents(n, kNone);
  const int shape = static_cast<int>(rng.next(3));
  for (NodeId i = 1; i < n; ++i) {
    switch (shape) {
      case 0:
        parents[i] = static_cast<NodeId>(rng.next(i));
        break;
      case 1:
        parents[i] = rng.next(10) < 7 ? i - 1 : static_cast<NodeId>(rng.next(i));
        break;
      default:
        parents[i] = i - 1 - static_cast<NodeId>(rng.next(std::min<NodeId>(i, 3)));
        break;
    }
  }
  return parents;
}

// Full decomposition invariant audit; returns "" when everything holds.
inline std::string check_decomposition(const RootedTree& t, const Decomposition& d) {
  const NodeId n = t.n;
  auto fail = [](const std::string& msg) { return msg; };

  if (!d.is_super[t.root]) return fail("root is not a super-node");
  if (d.super_parent[t.root] != kNone) return fail("root has a super-parent");

  // special flags match the level rule
  for (NodeId x = 0; x < n; ++x)
    if (static_cast<bool>(d.is_special[x]) != (t.level[x] % d.h == 0))
      return fail("special flag wrong at node " + std::to_string(x));

  // group sequences are upward paths ending just below the super-parent,
  // sized in [1, h]; membership arrays agree with them
  std::vector<int> claimed(n, 0);
  for (NodeId s : d.supers) {
    const auto& seq = d.group(s);
    if (seq.empty() || seq[0] != s) return fail("group of " + std::to_string(s) + " must start at it");
    if (seq.size() > static_cast<std::size_t>(d.h)) return fail("group too long");
    for (std::size_t p = 0; p < seq.size(); ++p) {
      const NodeId x = seq[p];
      claimed[x] += 1;
      if (d.group_of[x] != s || d.pos_in_group[x] != static_cast<int>(p))
        return fail("membership arrays disagree with group of " + std::to_string(s));
      if (p > 0 && t.parent[seq[p - 1]] != x) return fail("group sequence is not an upward path");
      if (p > 0 && d.is_super[x]) return fail("group interior contains a super-node");
    }
    if (s == t.root) {
      if (seq.size() != 1) return fail("root group must be the singleton root");
    } else {
      const NodeId sp = d.super_parent[s];
      if (sp == kNone || !d.is_super[sp]) return fail("bad super-parent of " + std::to_string(s));
      if (t.parent[seq.back()] != sp) return fail("group does not stop at the super-parent");
    }
  }
  for (NodeId x = 0; x < n; ++x) {
    if (claimed[x] > 1) return fail("node " + std::to_string(x) + " in two groups");
    if (claimed[x] == 0 && d.group_of[x] != kNone) return fail("stale group_of entry");
  }

  // super count and initial-super count bounds
  const std::size_t cap = 2 * (1 + static_cast<std::size_t>(n) / d.h);
  if (d.supers.size() > cap) return fail("too many super-nodes");
  if (d.isn_count > 1 + n / d.h) return fail("too many initial super-nodes");
  if (d.isn_count + d.esn_count != static_cast<int>(d.supers.size()))
    return fail("isn/esn counts do not add up");

  // ungrouped nodes see a grouped ancestor within 2h levels
  std::vector<int> dist(n, 0);
  for (NodeId x = 0; x < n; ++x) {
    // parents precede children only in sorted-by-level order
    dist[x] = -1;
  }
  std::vector<NodeId> by_level(n);
  for (NodeId x = 0; x < n; ++x) by_level[x] = x;
  std::sort(by_level.begin(), by_level.end(),
            [&](NodeId a, NodeId b) { return t.level[a] < t.level[b]; });
  for (NodeId x : by_level) {
    if (d.group_of[x] != kNone)
      dist[x] = 0;
    else
      dist[x] = dist[t.parent[x]] + 1;
    if (dist[x] > 2 * d.h) return fail("ungrouped node too far from any group");
  }

  // super-children lists match super_parent
  std::size_t edges = 0;
  for (NodeId s : d.supers) {
    for (NodeId c : d.super_children[d.super_index[s]]) {
      if (d.super_parent[c] != s) return fail("super_children disagrees with super_parent");
      ++edges;
    }
  }
  if (edges + 1 != d.supers.size()) return fail("compressed tree is not a tree");

  // LCA closure: a non-super node must not split two super-containing
  // child subtrees (checked bottom-up), spot-checked against naive_lca
  std::vector<int> super_below(n, 0);
  for (auto it = by_level.rbegin(); it != by_level.rend(); ++it) {
    const NodeId x = *it;
    int branches = 0;
    for (NodeId c : t.children[x]) {
      if (super_below[c] > 0) ++branches;
      super_below[x] += super_below[c];
    }
    if (!d.is_super[x] && branches >= 2) return fail("super-node LCA closure violated");
    if (d.is_super[x]) ++super_below[x];
  }
  return "";
}

}  // namespace sqds::testing
