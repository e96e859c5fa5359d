#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqds/core.hpp"

namespace sqds {

// Doubly linked list whose elements also point at the elements exactly h
// positions away in both directions. Endpoint and distance queries cost
// O(h + len/h); concatenation and splitting cost O(h).
//
// Direction slots 0/1 carry no global left/right meaning: concatenation
// can join lists with opposite orientations, so every traversal flips its
// direction at each hop based on which slot of the new element points
// back at the old one. The h-pointer in slot i always runs in the same
// direction as the neighbor pointer in slot i.
template <typename Payload = std::int32_t>
class HListUniverse {
 public:
  explicit HListUniverse(int h) : h_(h) {
    if (h < 1) throw InvalidH("h-list distance must be >= 1, got " + std::to_string(h));
  }

  NodeId make_node(Payload payload = Payload{}) {
    nodes_.push_back(Node{payload, {kNone, kNone}, {kNone, kNone}});
    return static_cast<NodeId>(nodes_.size()) - 1;
  }

  // Fresh list of len new elements with canonical slots (0 backward,
  // 1 forward) and all h-pointers in place.
  std::vector<NodeId> make_chain(std::size_t len, Payload payload = Payload{}) {
    std::vector<NodeId> ids(len);
    for (auto& id : ids) id = make_node(payload);
    for (std::size_t k = 0; k < len; ++k) {
      Node& n = nodes_[ids[k]];
      if (k > 0) n.v[0] = ids[k - 1];
      if (k + 1 < len) n.v[1] = ids[k + 1];
      if (k >= static_cast<std::size_t>(h_)) n.hv[0] = ids[k - h_];
      if (k + h_ < len) n.hv[1] = ids[k + h_];
    }
    return ids;
  }

  NodeId neighbor(NodeId x, int slot) const { return nodes_[x].v[slot]; }
  NodeId hneighbor(NodeId x, int slot) const { return nodes_[x].hv[slot]; }
  Payload& payload(NodeId x) { return nodes_[x].payload; }

  NodeId opposite_neighbor(NodeId x, NodeId y) const {
    return y == nodes_[x].v[1] ? nodes_[x].v[0] : nodes_[x].v[1];
  }

  NodeId opposite_hneighbor(NodeId x, NodeId y) const {
    return y == nodes_[x].hv[1] ? nodes_[x].hv[0] : nodes_[x].hv[1];
  }

  int neighbor_index(NodeId x, NodeId y) const {
    if (nodes_[x].v[0] == y) return 0;
    if (nodes_[x].v[1] == y) return 1;
    throw NotAdjacent("node " + std::to_string(y) + " is not a neighbor of " +
                      std::to_string(x));
  }

  int hneighbor_index(NodeId x, NodeId y) const {
    if (nodes_[x].hv[0] == y) return 0;
    if (nodes_[x].hv[1] == y) return 1;
    throw NotAdjacent("node " + std::to_string(y) + " is not an h-neighbor of " +
                      std::to_string(x));
  }

  // Endpoint of x's list in direction slot away from x: h-hops while
  // possible, then single steps.
  NodeId find_endpoint(NodeId x, int slot) {
    if (nodes_[x].v[slot] == kNone) return x;
    NodeId y = x;
    int dir = slot;
    while (nodes_[y].hv[dir] != kNone) {
      const NodeId next = nodes_[y].hv[dir];
      dir = 1 - hneighbor_index(next, y);
      y = next;
      ++steps_;
    }
    while (nodes_[y].v[dir] != kNone) {
      const NodeId next = nodes_[y].v[dir];
      dir = 1 - neighbor_index(next, y);
      y = next;
      ++steps_;
    }
    return y;
  }

  // Element exactly dist positions from x in direction slot, or kNone if
  // the list ends sooner.
  NodeId element_at_distance(NodeId x, int slot, std::int64_t dist) {
    NodeId y = x;
    int dir = slot;
    std::int64_t cnt = 0;
    while (nodes_[y].hv[dir] != kNone && cnt + h_ <= dist) {
      const NodeId next = nodes_[y].hv[dir];
      dir = 1 - hneighbor_index(next, y);
      y = next;
      cnt += h_;
      ++steps_;
    }
    while (nodes_[y].v[dir] != kNone && cnt + 1 <= dist) {
      const NodeId next = nodes_[y].v[dir];
      dir = 1 - neighbor_index(next, y);
      y = next;
      ++cnt;
      ++steps_;
    }
    return cnt == dist ? y : kNone;
  }

  // Joins two lists at endpoints x and y. The h-pointers crossing the new
  // junction pair the last h elements of one side with the first h of the
  // other.
  void concatenate(NodeId x, NodeId y) {
    const int i = free_slot(x);
    const int j = free_slot(y);
    if (i == -1 || j == -1)
      throw NotEndpoint("concatenate requires two list endpoints");
    if (x == y || in_same_list(x, y))
      throw SameList("cannot concatenate a list with itself");

    nodes_[x].v[i] = y;
    nodes_[y].v[j] = x;
    const auto lx = boundary(x, y);
    const auto ly = boundary(y, x);
    // 1-indexed pairing: position c on one side matches h-c+1 on the other
    for (int c = static_cast<int>(lx.size()); c >= 1; --c) {
      const int k = h_ - c + 1;
      if (k > static_cast<int>(ly.size())) break;
      const auto [a, b] = lx[c - 1];
      const auto [d, e] = ly[k - 1];
      nodes_[a].hv[b] = d;
      nodes_[d].hv[e] = a;
      ++steps_;
    }
  }

  // Severs the link between neighbors x and y; every h-pointer that
  // crossed the junction is cleared on both of its ends.
  void split(NodeId x, NodeId y) {
    const int i = neighbor_index(x, y);  // throws NotAdjacent
    const int j = neighbor_index(y, x);
    const auto lx = boundary(x, y);
    const auto ly = boundary(y, x);
    for (const auto& [a, b] : lx) {
      nodes_[a].hv[b] = kNone;
      ++steps_;
    }
    for (const auto& [d, e] : ly) {
      nodes_[d].hv[e] = kNone;
      ++steps_;
    }
    nodes_[x].v[i] = kNone;
    nodes_[y].v[j] = kNone;
  }

  // Exhaustive structural check: neighbor symmetry, h-pointer exactness
  // (compared against an h-step neighbor walk) and direction consistency.
  bool audit() const {
    for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x) {
      for (int s = 0; s < 2; ++s) {
        const NodeId y = nodes_[x].v[s];
        if (y != kNone) {
          const bool mutual = nodes_[y].v[0] == x || nodes_[y].v[1] == x;
          if (!mutual) return false;
        }
        if (nodes_[x].hv[s] != walk(x, s, h_)) return false;
      }
    }
    return true;
  }

  std::size_t node_count() const { return nodes_.size(); }
  int h() const { return h_; }
  StepCount steps() const { return steps_; }
  void reset_steps() { steps_ = 0; }

 private:
  struct Node {
    Payload payload;
    std::array<NodeId, 2> v;
    std::array<NodeId, 2> hv;
  };

  int free_slot(NodeId x) const {
    if (nodes_[x].v[0] == kNone) return 0;
    if (nodes_[x].v[1] == kNone) return 1;
    return -1;
  }

  bool in_same_list(NodeId x, NodeId y) {
    // x and y are endpoints here; y is in x's list iff a walk from x
    // toward its occupied side ends at y
    const int occupied = nodes_[x].v[0] == kNone ? 1 : 0;
    if (nodes_[x].v[occupied] == kNone) return false;  // x is a singleton
    return find_endpoint(x, occupied) == y;
  }

  // Up to h (node, toward-junction slot) pairs walking away from the
  // junction neighbor j, starting at the junction endpoint x.
  std::vector<std::pair<NodeId, int>> boundary(NodeId x, NodeId jn) {
    std::vector<std::pair<NodeId, int>> out;
    out.reserve(h_);
    out.emplace_back(x, neighbor_index(x, jn));
    NodeId a = x;
    NodeId b = opposite_neighbor(x, jn);
    int cnt = 1;
    while (b != kNone && cnt < h_) {
      out.emplace_back(b, neighbor_index(b, a));
      const NodeId c = opposite_neighbor(b, a);
      a = b;
      b = c;
      ++cnt;
      ++steps_;
    }
    return out;
  }

  // Plain neighbor walk of exactly dist steps; kNone when the list ends.
  NodeId walk(NodeId x, int slot, int dist) const {
    NodeId y = x;
    int dir = slot;
    for (int k = 0; k < dist; ++k) {
      const NodeId next = nodes_[y].v[dir];
      if (next == kNone) return kNone;
      dir = nodes_[next].v[0] == y ? 1 : 0;
      y = next;
    }
    return y;
  }

  int h_;
  std::vector<Node> nodes_;
  StepCount steps_ = 0;
};

}  // namespace sqds
