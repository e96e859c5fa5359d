#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/path_engine.hpp"

namespace sqds {

// Colored-path store: every node has a fixed value and a mutable color.
// color_query(i,j,c) sums the values of color-c nodes on the path i->j;
// recolor_path(i,j,a,b) turns every color-a node on the path into color b.
//
// Each group keeps a small union-find-like forest over color identifiers:
// recoloring a whole group from a to b reparents a's identifier under b's
// and merges the per-color aggregates, so the group's nodes change color
// without being touched. A node's current color is found by chasing its
// identifier to the forest root (with path compression). Identifiers are
// never reused; stale chains stay valid.
class ColorState {
 public:
  using Value = std::int64_t;

  ColorState(const Decomposition& d, std::vector<Value> values, std::vector<Color> colors)
      : d_(&d), values_(std::move(values)), plain_color_(std::move(colors)) {
    const std::size_t k = d.super_count();
    groups_.resize(k);
    node_cid_.assign(d.tree->n, -1);
    for (std::size_t gi = 0; gi < k; ++gi) {
      for (NodeId x : d.group_seq[gi]) {
        node_cid_[x] = intern_color(gi, plain_color_[x]);
        bump(groups_[gi].aggv, plain_color_[x], values_[x]);
      }
    }
  }

  // Current color of a grouped node: chase the identifier chain to its
  // root, pointing everything on the way directly at the root.
  Color resolve_color(NodeId p) {
    const std::size_t gi = d_->super_index[d_->group_of[p]];
    return group_color(gi, node_cid_[p]);
  }

  void recolor_path(NodeId i, NodeId j, Color a, Color b) {
    if (a == b) return;
    visit_path(
        *d_, i, j, [&](NodeId s) { recolor_group(d_->super_index[s], a, b); },
        [&](NodeId x, NodeId g) { recolor_point(x, d_->super_index[g], a, b); },
        [&](NodeId x) {
          if (plain_color_[x] == a) plain_color_[x] = b;
        },
        steps_);
  }

  Value color_query(NodeId i, NodeId j, Color c) {
    Value out = 0;
    visit_path(
        *d_, i, j,
        [&](NodeId s) {
          const auto& aggv = groups_[d_->super_index[s]].aggv;
          ++steps_;
          if (auto it = aggv.find(c); it != aggv.end()) out += it->second;
        },
        [&](NodeId x, NodeId g) {
          if (group_color(d_->super_index[g], node_cid_[x]) == c) out += values_[x];
        },
        [&](NodeId x) {
          if (plain_color_[x] == c) out += values_[x];
        },
        steps_);
    return out;
  }

  // Current color of any node (grouped or not); mutates only compression
  // pointers.
  Color color_of(NodeId x) {
    return d_->group_of[x] == kNone ? plain_color_[x] : resolve_color(x);
  }

  std::vector<Color> color_snapshot() {
    std::vector<Color> out(plain_color_.size());
    for (NodeId x = 0; x < d_->tree->n; ++x) out[x] = color_of(x);
    return out;
  }

  // Identifier-chain length from a node to its forest root, without
  // compressing; -1 if the walk fails to terminate within #identifiers
  // hops (a cycle). Diagnostic for the compression behavior.
  int chain_length(NodeId p) const {
    const auto& g = groups_[d_->super_index[d_->group_of[p]]];
    const int limit = static_cast<int>(g.parent.size());
    int hops = 0;
    for (int id = node_cid_[p]; g.parent[id] != -1; id = g.parent[id])
      if (++hops > limit) return -1;
    return hops;
  }

  // Per-color value sums of one group, recomputed from scratch; test
  // support for reconciling the incremental aggregates.
  std::unordered_map<Color, Value> recompute_group_aggv(NodeId s) {
    const std::size_t gi = d_->super_index[s];
    std::unordered_map<Color, Value> out;
    for (NodeId x : d_->group_seq[gi]) {
      const Value v = values_[x];
      if (v != 0) out[group_color(gi, node_cid_[x])] += v;
    }
    for (auto it = out.begin(); it != out.end();) {
      if (it->second == 0)
        it = out.erase(it);
      else
        ++it;
    }
    return out;
  }

  const std::unordered_map<Color, Value>& group_aggv(NodeId s) const {
    return groups_[d_->super_index[s]].aggv;
  }

  // Live colors must map to forest roots carrying them; test support.
  bool live_colors_are_roots(NodeId s) const {
    const Group& g = groups_[d_->super_index[s]];
    for (const auto& [color, id] : g.cid)
      if (g.parent[id] != -1 || g.rev[id] != color) return false;
    return true;
  }

  std::size_t identifier_count(NodeId s) const {
    return groups_[d_->super_index[s]].rev.size();
  }

  const Decomposition& decomposition() const { return *d_; }
  StepCount steps() const { return steps_; }
  void reset_steps() { steps_ = 0; }

 private:
  struct Group {
    std::unordered_map<Color, int> cid;  // live color -> root identifier
    std::vector<Color> rev;              // identifier -> color it was created for
    std::vector<int> parent;             // identifier forest, -1 at roots
    std::unordered_map<Color, Value> aggv;
  };

  int intern_color(std::size_t gi, Color c) {
    Group& g = groups_[gi];
    ++steps_;
    if (auto it = g.cid.find(c); it != g.cid.end()) return it->second;
    const int id = static_cast<int>(g.rev.size());
    g.rev.push_back(c);
    g.parent.push_back(-1);
    g.cid.emplace(c, id);
    return id;
  }

  int find_root(Group& g, int id) {
    int root = id;
    while (g.parent[root] != -1) {
      root = g.parent[root];
      ++steps_;
    }
    while (g.parent[id] != -1) {
      const int next = g.parent[id];
      g.parent[id] = root;
      id = next;
      ++steps_;
    }
    return root;
  }

  Color group_color(std::size_t gi, int id) {
    Group& g = groups_[gi];
    return g.rev[find_root(g, id)];
  }

  // Adds delta to map[key], creating the key on demand and dropping it
  // when the sum returns to zero.
  void bump(std::unordered_map<Color, Value>& map, Color key, Value delta) {
    ++steps_;
    if (delta == 0) return;
    auto [it, inserted] = map.try_emplace(key, 0);
    it->second += delta;
    if (it->second == 0) map.erase(it);
  }

  void recolor_point(NodeId x, std::size_t gi, Color a, Color b) {
    if (group_color(gi, node_cid_[x]) != a) return;
    node_cid_[x] = intern_color(gi, b);
    bump(groups_[gi].aggv, a, -values_[x]);
    bump(groups_[gi].aggv, b, values_[x]);
  }

  void recolor_group(std::size_t gi, Color a, Color b) {
    Group& g = groups_[gi];
    ++steps_;
    auto it = g.cid.find(a);
    if (it == g.cid.end()) return;
    const int ccidx = it->second;
    const int ccidy = intern_color(gi, b);
    g.parent[ccidx] = ccidy;
    g.cid.erase(a);
    ++steps_;
    if (auto va = g.aggv.find(a); va != g.aggv.end()) {
      const Value moved = va->second;
      g.aggv.erase(va);
      bump(g.aggv, b, moved);
    }
  }

  const Decomposition* d_;
  std::vector<Value> values_;
  std::vector<Color> plain_color_;  // authoritative for ungrouped nodes only
  std::vector<int> node_cid_;       // grouped nodes: identifier in the owning group
  std::vector<Group> groups_;       // by super index
  StepCount steps_ = 0;
};

}  // namespace sqds
