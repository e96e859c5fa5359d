#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/decomposition.hpp"

namespace sqds {

// Static index for queries Q(a,b) = number of node pairs (i,j) with
// color(i)=a, color(j)=b and i a proper ancestor of j. Building costs
// O(n*h) time and memory; a query walks the compressed super-node tree
// once, O(n/h).
//
// The global table holds every pair whose descendant sits strictly below
// the first super-node above it (ungrouped descendants against everything
// beneath that super-node, and within-group pairs). Pairs whose ancestor
// lies in a group at or above a super-node x are recovered at query time
// from per-group color counts times the number of b-colored nodes below x.
class AncestorColorIndex {
 public:
  using Count = std::int64_t;

  AncestorColorIndex(const Decomposition& d, std::vector<Color> colors)
      : d_(&d), colors_(std::move(colors)) {
    const std::size_t k = d.super_count();
    cnt_ungrouped_.resize(k);
    cnt_group_.resize(k);

    // Ungrouped nodes: record their strict ancestors below the first
    // super-node, then account for them at that super-node.
    for (NodeId x = 0; x < d.tree->n; ++x) {
      if (d.group_of[x] != kNone) continue;
      NodeId z = d.parent(x);
      ++build_steps_;
      while (!d.is_super[z]) {
        bump(pair_table_, {colors_[z], colors_[x]}, 1);
        z = d.parent(z);
        ++build_steps_;
      }
      bump(cnt_ungrouped_[d.super_index[z]], colors_[x], 1);
    }

    // Groups: sweep each group bottom-up; every node pairs with the
    // color tallies of the nodes already passed.
    for (std::size_t gi = 0; gi < k; ++gi) {
      auto& tally = cnt_group_[gi];
      for (NodeId y : d.group_seq[gi]) {
        ++build_steps_;
        for (const auto& [c, cnt] : tally) bump(pair_table_, {colors_[y], c}, cnt);
        bump(tally, colors_[y], 1);
      }
    }

    // Bottom-up order over the compressed tree, computed once.
    post_order_.reserve(k);
    std::vector<std::pair<NodeId, std::size_t>> stack{{d.root(), 0}};
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      const auto& kids = d.super_children[d.super_index[s]];
      if (next < kids.size()) {
        stack.emplace_back(kids[next++], 0);
      } else {
        post_order_.push_back(s);
        stack.pop_back();
      }
    }
    num_.assign(k, 0);
  }

  Count query(Color a, Color b) {
    ++query_steps_;
    Count result = lookup(pair_table_, {a, b});
    for (NodeId x : post_order_) {
      const std::size_t xi = d_->super_index[x];
      ++query_steps_;
      // b-colored nodes strictly below x
      Count below = lookup(cnt_ungrouped_[xi], b);
      for (NodeId y : d_->super_children[xi]) {
        const std::size_t yi = d_->super_index[y];
        below += num_[yi] + lookup(cnt_group_[yi], b);
        ++query_steps_;
      }
      num_[xi] = below;
      result += lookup(cnt_group_[xi], a) * below;
    }
    return result;
  }

  StepCount build_steps() const { return build_steps_; }
  StepCount query_steps() const { return query_steps_; }
  void reset_query_steps() { query_steps_ = 0; }

  // Exposed for the read-only-query checks.
  const std::unordered_map<Color, Count>& group_tally(NodeId s) const {
    return cnt_group_[d_->super_index[s]];
  }
  const std::unordered_map<Color, Count>& ungrouped_tally(NodeId s) const {
    return cnt_ungrouped_[d_->super_index[s]];
  }
  std::size_t pair_table_size() const { return pair_table_.size(); }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Color, Color>& p) const {
      const std::uint64_t mixed =
          static_cast<std::uint64_t>(p.first) * 0x9e3779b97f4a7c15ULL ^
          static_cast<std::uint64_t>(p.second);
      return std::hash<std::uint64_t>{}(mixed);
    }
  };

  template <class Map>
  void bump(Map& map, const typename Map::key_type& key, Count delta) {
    ++build_steps_;
    map[key] += delta;
  }

  template <class Map>
  Count lookup(const Map& map, const typename Map::key_type& key) {
    ++query_steps_;
    auto it = map.find(key);
    return it == map.end() ? 0 : it->second;
  }

  const Decomposition* d_;
  std::vector<Color> colors_;
  std::unordered_map<std::pair<Color, Color>, Count, PairHash> pair_table_;
  std::vector<std::unordered_map<Color, Count>> cnt_ungrouped_;  // by super index
  std::vector<std::unordered_map<Color, Count>> cnt_group_;      // by super index
  std::vector<NodeId> post_order_;
  std::vector<Count> num_;  // per-query scratch
  StepCount build_steps_ = 0;
  StepCount query_steps_ = 0;
};

}  // namespace sqds
