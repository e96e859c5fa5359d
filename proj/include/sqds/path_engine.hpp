#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/decomposition.hpp"

namespace sqds {

// Lowest common ancestor via the compressed super-node tree: super-parent
// jumps while both walkers sit on super-nodes, parent steps otherwise,
// with the group test preventing a jump past the meeting point. O(h + n/h)
// steps.
inline NodeId find_lca(const Decomposition& d, NodeId i, NodeId j, StepCount& steps) {
  while (i != j) {
    ++steps;
    const bool si = d.is_super[i];
    const bool sj = d.is_super[j];
    if (si && sj) {
      if (d.level(i) >= d.level(j))
        i = d.super_parent[i];
      else
        j = d.super_parent[j];
    } else if (!si && !sj) {
      if (d.level(i) >= d.level(j))
        i = d.parent(i);
      else
        j = d.parent(j);
    } else if (si) {
      if (d.group_of[j] == i)
        i = d.parent(i);
      else if (i != d.root() && d.level(d.super_parent[i]) >= d.level(j))
        i = d.super_parent[i];
      else
        j = d.parent(j);
    } else {
      if (d.group_of[i] == j)
        j = d.parent(j);
      else if (j != d.root() && d.level(d.super_parent[j]) >= d.level(i))
        j = d.super_parent[j];
      else
        i = d.parent(i);
    }
  }
  return i;
}

namespace detail {

// Walk from i up to (excluding) lca. A super-node whose whole group lies
// on the walk is reported as one full group; every other node is reported
// individually, tagged with its owning group when it has one.
template <class OnGroup, class OnGroupedNode, class OnPlainNode>
void walk_to_lca(const Decomposition& d, NodeId i, NodeId lca, OnGroup&& on_group,
                 OnGroupedNode&& on_grouped, OnPlainNode&& on_plain, StepCount& steps) {
  while (i != lca) {
    ++steps;
    if (d.is_super[i]) {
      const NodeId sp = d.super_parent[i];
      if (d.level(sp) >= d.level(lca)) {
        on_group(i);
        i = sp;
      } else {
        on_grouped(i, i);
        i = d.parent(i);
      }
    } else {
      const NodeId g = d.group_of[i];
      if (g != kNone) {
        on_grouped(i, g);
      } else {
        on_plain(i);
      }
      i = d.parent(i);
    }
  }
}

}  // namespace detail

// Decomposes the path i -> j into full groups, grouped point visits and
// ungrouped point visits: both endpoint walks stop below the LCA, which is
// then reported as a point visit of its own. Returns the LCA.
template <class OnGroup, class OnGroupedNode, class OnPlainNode>
NodeId visit_path(const Decomposition& d, NodeId i, NodeId j, OnGroup&& on_group,
                  OnGroupedNode&& on_grouped, OnPlainNode&& on_plain, StepCount& steps) {
  const NodeId lca = find_lca(d, i, j, steps);
  detail::walk_to_lca(d, i, lca, on_group, on_grouped, on_plain, steps);
  detail::walk_to_lca(d, j, lca, on_group, on_grouped, on_plain, steps);
  ++steps;
  const NodeId g = d.group_of[lca];
  if (g != kNone)
    on_grouped(lca, g);
  else
    on_plain(lca);
  return lca;
}

// Aggregator contract: an associative aggregate with identity over values,
// plus composable updates that distribute over whole blocks. Path pieces
// are combined in traversal order (both endpoint walks meet at the LCA),
// not in path order, so the combine must be commutative.
//
//   upd_apply_agg(u, fold(block), len) == fold(upd_apply_value(u, .) over block)
//   apply(compose(older, newer), v)    == apply(newer, apply(older, v))
template <class G>
concept Aggregator = requires(typename G::Value v, typename G::Agg a, typename G::Update u,
                              std::size_t n) {
  { G::agg_identity() } -> std::same_as<typename G::Agg>;
  { G::agg_of_value(v) } -> std::same_as<typename G::Agg>;
  { G::agg_combine(a, a) } -> std::same_as<typename G::Agg>;
  { G::upd_identity() } -> std::same_as<typename G::Update>;
  { G::upd_apply_value(u, v) } -> std::same_as<typename G::Value>;
  { G::upd_apply_agg(u, a, n) } -> std::same_as<typename G::Agg>;
  { G::upd_compose(u, u) } -> std::same_as<typename G::Update>;
  { u == u } -> std::convertible_to<bool>;
};

// Sum aggregate with add-a-delta updates.
struct SumAdd {
  using Value = std::int64_t;
  using Agg = std::int64_t;
  using Update = std::int64_t;

  static Agg agg_identity() { return 0; }
  static Agg agg_of_value(Value v) { return v; }
  static Agg agg_combine(Agg a, Agg b) { return a + b; }
  static Update upd_identity() { return 0; }
  static Value upd_apply_value(Update u, Value v) { return v + u; }
  static Agg upd_apply_agg(Update u, Agg a, std::size_t n) {
    return a + u * static_cast<Agg>(n);
  }
  static Update upd_compose(Update older, Update newer) { return older + newer; }
};

// Max aggregate with assign-a-value updates.
struct MaxAssign {
  using Value = std::int64_t;

  struct Assign {
    bool active = false;
    Value value = 0;
    bool operator==(const Assign&) const = default;
  };

  using Agg = std::int64_t;
  using Update = Assign;

  static Agg agg_identity() { return std::numeric_limits<Agg>::min(); }
  static Agg agg_of_value(Value v) { return v; }
  static Agg agg_combine(Agg a, Agg b) { return a > b ? a : b; }
  static Update upd_identity() { return {}; }
  static Value upd_apply_value(Update u, Value v) { return u.active ? u.value : v; }
  static Agg upd_apply_agg(Update u, Agg a, std::size_t n) {
    return u.active && n > 0 ? u.value : a;
  }
  static Update upd_compose(Update older, Update newer) { return newer.active ? newer : older; }
};

// Block-partitioned path store: one cached aggregate and one pending
// update per group. Full groups on a path are queried/updated in O(1)
// through the cache and the pending tag; point access inside a group
// flushes the tag to the elements first, and the group aggregate is
// recomputed once after all point updates of an operation have landed.
// Every path operation costs O(h + n/h) steps.
template <Aggregator G>
class PathStore {
 public:
  using Value = typename G::Value;
  using Agg = typename G::Agg;
  using Update = typename G::Update;

  PathStore(const Decomposition& d, std::vector<Value> values)
      : d_(&d), values_(std::move(values)) {
    const std::size_t k = d.super_count();
    pending_.assign(k, G::upd_identity());
    agg_.assign(k, G::agg_identity());
    for (std::size_t gi = 0; gi < k; ++gi) recompute(gi);
  }

  NodeId find_lca(NodeId i, NodeId j) { return sqds::find_lca(*d_, i, j, steps_); }

  Agg path_query(NodeId i, NodeId j) {
    Agg out = G::agg_identity();
    visit_path(
        *d_, i, j, [&](NodeId s) { out = G::agg_combine(out, group_agg(s)); },
        [&](NodeId x, NodeId g) { out = G::agg_combine(out, G::agg_of_value(true_value(x, g))); },
        [&](NodeId x) { out = G::agg_combine(out, G::agg_of_value(values_[x])); }, steps_);
    return out;
  }

  void path_update(NodeId i, NodeId j, Update u) {
    dirty_.clear();
    visit_path(
        *d_, i, j,
        [&](NodeId s) {
          const std::size_t gi = d_->super_index[s];
          agg_[gi] = G::upd_apply_agg(u, agg_[gi], d_->group_len(s));
          pending_[gi] = G::upd_compose(pending_[gi], u);
        },
        [&](NodeId x, NodeId g) {
          flush_for_point(g);
          values_[x] = G::upd_apply_value(u, values_[x]);
        },
        [&](NodeId x) { values_[x] = G::upd_apply_value(u, values_[x]); }, steps_);
    settle_dirty();
  }

  Value point_query(NodeId x) {
    ++steps_;
    const NodeId g = d_->group_of[x];
    return g == kNone ? values_[x] : true_value(x, g);
  }

  void point_update(NodeId x, Update u) {
    ++steps_;
    dirty_.clear();
    const NodeId g = d_->group_of[x];
    if (g != kNone) flush_for_point(g);
    values_[x] = G::upd_apply_value(u, values_[x]);
    settle_dirty();
  }

  // True per-node values (pending tags folded in); used by oracle diffs.
  std::vector<Value> snapshot() const {
    std::vector<Value> out = values_;
    for (NodeId x = 0; x < d_->tree->n; ++x) {
      const NodeId g = d_->group_of[x];
      if (g != kNone) out[x] = G::upd_apply_value(pending_[d_->super_index[g]], out[x]);
    }
    return out;
  }

  const Decomposition& decomposition() const { return *d_; }
  StepCount steps() const { return steps_; }
  void reset_steps() { steps_ = 0; }

 private:
  Value true_value(NodeId x, NodeId g) const {
    return G::upd_apply_value(pending_[d_->super_index[g]], values_[x]);
  }

  Agg group_agg(NodeId s) const {
    const std::size_t gi = d_->super_index[s];
    return agg_[gi];
  }

  void recompute(std::size_t gi) {
    Agg a = G::agg_identity();
    for (NodeId x : d_->group_seq[gi]) {
      a = G::agg_combine(a, G::agg_of_value(values_[x]));
      ++steps_;
    }
    agg_[gi] = a;
  }

  void flush_for_point(NodeId g) {
    const std::size_t gi = d_->super_index[g];
    if (!(pending_[gi] == G::upd_identity())) {
      for (NodeId x : d_->group_seq[gi]) {
        values_[x] = G::upd_apply_value(pending_[gi], values_[x]);
        ++steps_;
      }
      pending_[gi] = G::upd_identity();
    }
    for (std::size_t seen : dirty_)
      if (seen == gi) return;
    dirty_.push_back(gi);
  }

  void settle_dirty() {
    for (std::size_t gi : dirty_) recompute(gi);
    dirty_.clear();
  }

  const Decomposition* d_;
  std::vector<Value> values_;
  std::vector<Update> pending_;  // by super index
  std::vector<Agg> agg_;         // by super index
  std::vector<std::size_t> dirty_;
  StepCount steps_ = 0;
};

}  // namespace sqds
