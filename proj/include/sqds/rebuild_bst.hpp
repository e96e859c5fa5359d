#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sqds/core.hpp"

namespace sqds {

enum class DeleteMode { kPhysical, kLogical };

// Unbalanced binary search tree that tracks the height of every subtree
// and rebuilds itself perfectly balanced whenever the root height exceeds
// a threshold function of the live key count. With the default threshold
// (~2*sqrt(N)) the amortized cost per operation is O(sqrt(N)).
//
// Logical mode marks deletions instead of splicing; flagged nodes are
// discarded at the next rebuild, which is additionally forced once fewer
// than half of the allocated nodes are live.
template <typename Key, typename Compare = std::less<Key>>
class RebuildBst {
 public:
  using ThresholdFn = std::function<int(std::size_t)>;

  static int default_threshold(std::size_t n) {
    const int by_sqrt = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
    const int by_log = 2 * static_cast<int>(std::ceil(std::log2(static_cast<double>(n) + 1.0)));
    return by_sqrt > by_log ? by_sqrt : by_log;
  }

  explicit RebuildBst(DeleteMode mode = DeleteMode::kPhysical, ThresholdFn threshold = nullptr)
      : mode_(mode), threshold_(threshold ? std::move(threshold) : default_threshold) {}

  bool insert(const Key& key) {
    // links passed down by reference point into the arena; grow it up
    // front so the push_back below never reallocates mid-descent
    if (nodes_.size() == nodes_.capacity())
      nodes_.reserve(nodes_.capacity() == 0 ? 16 : nodes_.capacity() * 2);
    const bool ok = insert_rec(root_, key);
    if (ok) maybe_rebuild();
    return ok;
  }

  bool erase(const Key& key) {
    bool ok = false;
    if (mode_ == DeleteMode::kPhysical) {
      ok = erase_rec(root_, key);
    } else {
      const int idx = locate(key);
      if (idx != -1 && !nodes_[idx].deleted) {
        nodes_[idx].deleted = true;
        --live_;
        ok = true;
      }
    }
    if (ok) maybe_rebuild();
    return ok;
  }

  bool contains(const Key& key) const {
    const int idx = locate(key);
    return idx != -1 && !nodes_[idx].deleted;
  }

  // Collects the live keys in order and reconstructs a perfectly balanced
  // tree from them; the key at the middle of every range becomes its root.
  void rebuild() {
    std::vector<Key> keys;
    keys.reserve(live_);
    collect(root_, keys);
    steps_ += nodes_.size();
    nodes_.clear();
    nodes_.reserve(keys.size());
    root_ = build_range(keys, 0, static_cast<int>(keys.size()) - 1);
    ++rebuilds_;
  }

  std::size_t size() const { return live_; }
  std::size_t allocated() const { return nodes_.size(); }
  int height() const { return root_ == -1 ? -1 : nodes_[root_].height; }
  int threshold() const { return threshold_(live_); }
  std::size_t rebuild_count() const { return rebuilds_; }
  StepCount steps() const { return steps_; }

  std::vector<Key> in_order() const {
    std::vector<Key> keys;
    keys.reserve(live_);
    collect(root_, keys);
    return keys;
  }

  // "(key left right)" with "." for absent children; deleted nodes carry
  // a trailing "!". Shape comparisons for the rebuild determinism checks.
  std::string shape_string() const { return shape_rec(root_); }

  // Walks every node and checks the stored heights against recomputed
  // ones; false means the structure is corrupt.
  bool heights_consistent() const {
    bool ok = true;
    check_heights(root_, ok);
    return ok;
  }

 private:
  struct Node {
    Key key;
    int left = -1;
    int right = -1;
    int height = 0;
    bool deleted = false;
  };

  int node_height(int idx) const { return idx == -1 ? -1 : nodes_[idx].height; }

  void pull_height(int idx) {
    nodes_[idx].height =
        1 + std::max(node_height(nodes_[idx].left), node_height(nodes_[idx].right));
  }

  int locate(const Key& key) const {
    int idx = root_;
    while (idx != -1) {
      ++steps_;
      if (cmp_(key, nodes_[idx].key))
        idx = nodes_[idx].left;
      else if (cmp_(nodes_[idx].key, key))
        idx = nodes_[idx].right;
      else
        return idx;
    }
    return -1;
  }

  bool insert_rec(int& link, const Key& key) {
    ++steps_;
    if (link == -1) {
      nodes_.push_back(Node{key});
      link = static_cast<int>(nodes_.size()) - 1;
      ++live_;
      return true;
    }
    Node& n = nodes_[link];
    bool ok;
    if (cmp_(key, n.key)) {
      ok = insert_rec(nodes_[link].left, key);
    } else if (cmp_(n.key, key)) {
      ok = insert_rec(nodes_[link].right, key);
    } else {
      if (!n.deleted) return false;
      n.deleted = false;  // revive a logically deleted key
      ++live_;
      return true;
    }
    if (ok) pull_height(link);
    return ok;
  }

  bool erase_rec(int& link, const Key& key) {
    if (link == -1) return false;
    ++steps_;
    Node& n = nodes_[link];
    bool ok;
    if (cmp_(key, n.key)) {
      ok = erase_rec(n.left, key);
    } else if (cmp_(n.key, key)) {
      ok = erase_rec(n.right, key);
    } else {
      if (n.left != -1 && n.right != -1) {
        // two children: swap in the in-order successor, then remove it
        int succ = n.right;
        while (nodes_[succ].left != -1) {
          succ = nodes_[succ].left;
          ++steps_;
        }
        n.key = nodes_[succ].key;
        ok = erase_rec(n.right, n.key);
      } else {
        link = n.left != -1 ? n.left : n.right;
        --live_;
        return true;  // spliced-out slot stays in the arena until a rebuild
      }
    }
    if (ok && link != -1) pull_height(link);
    return ok;
  }

  void maybe_rebuild() {
    if (root_ != -1 && nodes_[root_].height > threshold_(live_)) {
      rebuild();
      return;
    }
    if (mode_ == DeleteMode::kLogical && 2 * live_ < nodes_.size()) rebuild();
  }

  void collect(int idx, std::vector<Key>& out) const {
    if (idx == -1) return;
    collect(nodes_[idx].left, out);
    if (!nodes_[idx].deleted) out.push_back(nodes_[idx].key);
    collect(nodes_[idx].right, out);
  }

  int build_range(const std::vector<Key>& keys, int i, int j) {
    if (i > j) return -1;
    const int m = (i + j) / 2;
    nodes_.push_back(Node{keys[m]});
    const int idx = static_cast<int>(nodes_.size()) - 1;
    ++steps_;
    nodes_[idx].left = build_range(keys, i, m - 1);
    nodes_[idx].right = build_range(keys, m + 1, j);
    pull_height(idx);
    return idx;
  }

  std::string shape_rec(int idx) const {
    if (idx == -1) return ".";
    const Node& n = nodes_[idx];
    std::string out = "(" + std::to_string(n.key) + (n.deleted ? "!" : "") + " " +
                      shape_rec(n.left) + " " + shape_rec(n.right) + ")";
    return out;
  }

  void check_heights(int idx, bool& ok) const {
    if (idx == -1 || !ok) return;
    check_heights(nodes_[idx].left, ok);
    check_heights(nodes_[idx].right, ok);
    if (nodes_[idx].height !=
        1 + std::max(node_height(nodes_[idx].left), node_height(nodes_[idx].right)))
      ok = false;
  }

  DeleteMode mode_;
  ThresholdFn threshold_;
  Compare cmp_{};
  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t live_ = 0;
  std::size_t rebuilds_ = 0;
  mutable StepCount steps_ = 0;
};

}  // namespace sqds
