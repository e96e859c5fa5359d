#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/tree.hpp"

// Brute-force reference implementations used for differential testing.
// Deliberately simple: per-node loops and parent-pointer walks, sharing
// nothing with the optimized structures except the tree itself.
namespace sqds::oracle {

// Nodes on the path i -> j inclusive, in i..lca..j order.
inline std::vector<NodeId> path_nodes(const RootedTree& t, NodeId i, NodeId j) {
  const NodeId lca = naive_lca(t, i, j);
  std::vector<NodeId> up;
  for (NodeId x = i; x != lca; x = t.parent[x]) up.push_back(x);
  up.push_back(lca);
  std::vector<NodeId> down;
  for (NodeId x = j; x != lca; x = t.parent[x]) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

template <class G>
typename G::Agg path_fold(const RootedTree& t, const std::vector<typename G::Value>& values,
                          NodeId i, NodeId j) {
  auto out = G::agg_identity();
  for (NodeId x : path_nodes(t, i, j)) out = G::agg_combine(out, G::agg_of_value(values[x]));
  return out;
}

template <class G>
void path_apply(const RootedTree& t, std::vector<typename G::Value>& values, NodeId i, NodeId j,
                typename G::Update u) {
  for (NodeId x : path_nodes(t, i, j)) values[x] = G::upd_apply_value(u, values[x]);
}

inline void recolor(const RootedTree& t, std::vector<Color>& colors, NodeId i, NodeId j, Color a,
                    Color b) {
  for (NodeId x : path_nodes(t, i, j))
    if (colors[x] == a) colors[x] = b;
}

inline std::int64_t color_fold(const RootedTree& t, const std::vector<std::int64_t>& values,
                               const std::vector<Color>& colors, NodeId i, NodeId j, Color c) {
  std::int64_t out = 0;
  for (NodeId x : path_nodes(t, i, j))
    if (colors[x] == c) out += values[x];
  return out;
}

// Number of pairs (i,j) with color(i)=a, color(j)=b and i a proper
// ancestor of j, by walking every node's ancestor chain.
inline std::int64_t ancestor_pairs(const RootedTree& t, const std::vector<Color>& colors, Color a,
                                   Color b) {
  std::int64_t out = 0;
  for (NodeId j = 0; j < t.n; ++j) {
    if (colors[j] != b) continue;
    for (NodeId i = t.parent[j]; i != kNone; i = t.parent[i])
      if (colors[i] == a) ++out;
  }
  return out;
}

// Reference set for the rebuilding search tree.
class SortedSet {
 public:
  bool insert(std::int64_t k) { return keys_.insert(k).second; }
  bool erase(std::int64_t k) { return keys_.erase(k) > 0; }
  bool contains(std::int64_t k) const { return keys_.count(k) > 0; }
  std::vector<std::int64_t> in_order() const { return {keys_.begin(), keys_.end()}; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::set<std::int64_t> keys_;
};

// Positional reference for h-lists: every list is a plain sequence of
// ids. Direction slots are orientation-free in the real structure, so
// queries answer with the admissible id for each geometric direction;
// callers compare result sets.
class ArrayList {
 public:
  void new_list(const std::vector<std::int64_t>& ids) {
    const int li = static_cast<int>(lists_.size());
    lists_.push_back(ids);
    for (std::size_t p = 0; p < ids.size(); ++p) where_[ids[p]] = {li, p};
  }

  // {toward-front endpoint, toward-back endpoint} as seen from x; both
  // entries are the endpoints of x's list.
  std::pair<std::int64_t, std::int64_t> endpoints(std::int64_t x) const {
    const auto& seq = list_of(x);
    return {seq.front(), seq.back()};
  }

  // Elements exactly dist positions from x toward the front and toward
  // the back; kNoneId where the list ends sooner.
  std::pair<std::int64_t, std::int64_t> at_distance(std::int64_t x, std::int64_t dist) const {
    const auto [li, pos] = where_.at(x);
    const auto& seq = lists_[li];
    const std::int64_t front = static_cast<std::int64_t>(pos) - dist;
    const std::int64_t back = static_cast<std::int64_t>(pos) + dist;
    return {front >= 0 ? seq[front] : kNoneId,
            back < static_cast<std::int64_t>(seq.size()) ? seq[back] : kNoneId};
  }

  bool is_endpoint(std::int64_t x) const {
    const auto& seq = list_of(x);
    return seq.front() == x || seq.back() == x;
  }

  bool same_list(std::int64_t x, std::int64_t y) const {
    return where_.at(x).first == where_.at(y).first;
  }

  bool adjacent(std::int64_t x, std::int64_t y) const {
    const auto [lx, px] = where_.at(x);
    const auto [ly, py] = where_.at(y);
    return lx == ly && (px + 1 == py || py + 1 == px);
  }

  // Joins the two lists so that endpoints x and y become neighbors.
  void concatenate(std::int64_t x, std::int64_t y) {
    auto [lx, px] = where_.at(x);
    auto [ly, py] = where_.at(y);
    std::vector<std::int64_t> left = lists_[lx];
    std::vector<std::int64_t> right = lists_[ly];
    if (left.front() == x) std::reverse(left.begin(), left.end());
    if (right.back() == y) std::reverse(right.begin(), right.end());
    left.insert(left.end(), right.begin(), right.end());
    lists_[lx] = std::move(left);
    lists_[ly].clear();
    for (std::size_t p = 0; p < lists_[lx].size(); ++p) where_[lists_[lx][p]] = {lx, p};
  }

  void split(std::int64_t x, std::int64_t y) {
    auto [li, px] = where_.at(x);
    const auto py = where_.at(y).second;
    const std::size_t cut = std::min(px, py) + 1;
    std::vector<std::int64_t> tail(lists_[li].begin() + cut, lists_[li].end());
    lists_[li].resize(cut);
    const int ti = static_cast<int>(lists_.size());
    lists_.push_back(std::move(tail));
    for (std::size_t p = 0; p < lists_[ti].size(); ++p) where_[lists_[ti][p]] = {ti, p};
  }

  const std::vector<std::int64_t>& list_of(std::int64_t x) const {
    return lists_[where_.at(x).first];
  }

  static constexpr std::int64_t kNoneId = -1;

 private:
  std::vector<std::vector<std::int64_t>> lists_;
  std::unordered_map<std::int64_t, std::pair<int, std::size_t>> where_;
};

}  // namespace sqds::oracle
