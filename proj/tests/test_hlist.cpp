#include "sqds/hlist.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "sqds/oracle.hpp"
#include "support.hpp"

namespace sqds {
namespace {

using testing::Rng;
using Universe = HListUniverse<std::int64_t>;

std::vector<std::array<NodeId, 4>> link_snapshot(const Universe& u) {
  std::vector<std::array<NodeId, 4>> out;
  for (NodeId x = 0; x < static_cast<NodeId>(u.node_count()); ++x)
    out.push_back({u.neighbor(x, 0), u.neighbor(x, 1), u.hneighbor(x, 0), u.hneighbor(x, 1)});
  return out;
}

// Id sequence of x's list, endpoint to endpoint.
std::vector<NodeId> sequence_of(Universe& u, NodeId x) {
  NodeId e = u.find_endpoint(x, 0);
  std::vector<NodeId> seq{e};
  NodeId prev = kNone;
  while (true) {
    const NodeId next = prev == kNone
                            ? (u.neighbor(e, 0) != kNone ? u.neighbor(e, 0) : u.neighbor(e, 1))
                            : u.opposite_neighbor(e, prev);
    if (next == kNone) break;
    seq.push_back(next);
    prev = e;
    e = next;
  }
  return seq;
}

TEST(HList, PrimitiveFunctions) {
  Universe u(2);
  const auto ids = u.make_chain(3);  // a - x - b
  const NodeId a = ids[0], x = ids[1], b = ids[2];
  EXPECT_EQ(u.opposite_neighbor(x, b), a);
  EXPECT_EQ(u.opposite_neighbor(x, a), b);
  EXPECT_EQ(u.opposite_neighbor(a, x), kNone);  // endpoint
  EXPECT_EQ(u.neighbor_index(x, a), 0);
  EXPECT_EQ(u.neighbor_index(x, b), 1);
  EXPECT_THROW(u.neighbor_index(a, b), NotAdjacent);
  EXPECT_THROW(u.hneighbor_index(x, a), NotAdjacent);
  EXPECT_EQ(u.hneighbor_index(a, b), 1);  // distance 2 = h
  EXPECT_EQ(u.opposite_hneighbor(a, b), kNone);
  EXPECT_THROW(Universe(0), InvalidH);
}

TEST(HList, EndpointAndDistanceExamples) {
  Universe u(2);
  const auto e = u.make_chain(5);
  EXPECT_EQ(u.find_endpoint(e[2], 1), e[4]);
  EXPECT_EQ(u.find_endpoint(e[2], 0), e[0]);
  EXPECT_EQ(u.element_at_distance(e[1], 1, 3), e[4]);
  EXPECT_EQ(u.element_at_distance(e[1], 1, 4), kNone);
  EXPECT_EQ(u.element_at_distance(e[1], 1, 0), e[1]);
  EXPECT_EQ(u.element_at_distance(e[1], 0, 1), e[0]);

  Universe single(3);
  const NodeId s = single.make_node();
  EXPECT_EQ(single.find_endpoint(s, 0), s);
  EXPECT_EQ(single.find_endpoint(s, 1), s);
}

TEST(HList, ConcatenateSingletons) {
  Universe u(2);
  const NodeId a = u.make_node(), b = u.make_node();
  u.concatenate(a, b);
  EXPECT_TRUE(u.audit());
  EXPECT_EQ(u.hneighbor(a, 0), kNone);  // distance 1 < h, no h-links
  EXPECT_EQ(u.hneighbor(a, 1), kNone);
  EXPECT_EQ(u.find_endpoint(a, u.neighbor_index(a, b)), b);

  Universe v(1);  // h = 1: h-neighbors coincide with neighbors
  const NodeId c = v.make_node(), d = v.make_node();
  v.concatenate(c, d);
  EXPECT_TRUE(v.audit());
  EXPECT_EQ(v.hneighbor(c, v.neighbor_index(c, d)), d);
}

TEST(HList, ConcatenationMatchesFreshList) {
  Universe u(2);
  const auto left = u.make_chain(3);
  const auto right = u.make_chain(3);
  u.concatenate(left.back(), right.front());
  EXPECT_TRUE(u.audit());

  const auto seq = sequence_of(u, left[0]);
  std::vector<NodeId> expected{left[0], left[1], left[2], right[0], right[1], right[2]};
  if (seq.front() != expected.front()) std::reverse(expected.begin(), expected.end());
  EXPECT_EQ(seq, expected);
}

TEST(HList, SplitExamples) {
  Universe u(2);
  const auto ids = u.make_chain(2);
  u.split(ids[0], ids[1]);
  EXPECT_TRUE(u.audit());
  for (NodeId x : ids)
    for (int s : {0, 1}) {
      EXPECT_EQ(u.neighbor(x, s), kNone);
      EXPECT_EQ(u.hneighbor(x, s), kNone);
    }

  Universe v(2);
  const auto six = v.make_chain(6);
  v.split(six[2], six[3]);
  EXPECT_TRUE(v.audit());
  EXPECT_EQ(sequence_of(v, six[0]).size(), 3u);
  EXPECT_EQ(sequence_of(v, six[5]).size(), 3u);
  EXPECT_EQ(v.hneighbor(six[0], 1), six[2]);  // in-fragment h-link survives
}

TEST(HList, RejectsBadUpdates) {
  Universe u(2);
  const auto ids = u.make_chain(4);
  EXPECT_THROW(u.concatenate(ids[1], ids[2]), NotEndpoint);  // interior nodes
  EXPECT_THROW(u.concatenate(ids[0], ids[3]), SameList);
  EXPECT_THROW(u.concatenate(ids[0], ids[0]), SameList);
  EXPECT_THROW(u.split(ids[0], ids[2]), NotAdjacent);
  const auto other = u.make_chain(1);
  u.concatenate(ids[3], other[0]);  // singleton join is fine
  EXPECT_TRUE(u.audit());
}

TEST(HList, QueriesNeverMutate) {
  Universe u(3);
  const auto ids = u.make_chain(20);
  const auto before = link_snapshot(u);
  for (NodeId x : ids)
    for (int s : {0, 1}) {
      u.find_endpoint(x, s);
      u.element_at_distance(x, s, 7);
    }
  EXPECT_EQ(link_snapshot(u), before);
}

// Random concatenate/split scripts, audited after every update, with all
// distance/endpoint queries checked against the positional oracle: the
// two slots of a node must jointly produce exactly the oracle's two
// directional answers.
TEST(HList, RandomScriptsMatchArrayOracle) {
  Rng rng(777);
  for (int script = 0; script < 60; ++script) {
    const int hs[] = {1, 2, 3, 5};
    Universe u(hs[rng.next(4)]);
    oracle::ArrayList shadow;
    std::vector<NodeId> reps;  // one member per live list

    auto check_queries = [&] {
      for (int probe = 0; probe < 10; ++probe) {
        const NodeId x = static_cast<NodeId>(rng.next(u.node_count()));
        const auto [front, back] = shadow.endpoints(x);
        const NodeId e0 = u.find_endpoint(x, 0), e1 = u.find_endpoint(x, 1);
        ASSERT_TRUE((e0 == front && e1 == back) || (e0 == back && e1 == front))
            << "endpoints of " << x;
        const auto dist = rng.next(2) ? rng.next(12) : rng.next(u.node_count() + 2);
        const auto [df, db] = shadow.at_distance(x, static_cast<std::int64_t>(dist));
        auto render = [](NodeId v) {
          return v == kNone ? oracle::ArrayList::kNoneId : static_cast<std::int64_t>(v);
        };
        const auto d0 = render(u.element_at_distance(x, 0, static_cast<std::int64_t>(dist)));
        const auto d1 = render(u.element_at_distance(x, 1, static_cast<std::int64_t>(dist)));
        ASSERT_TRUE((d0 == df && d1 == db) || (d0 == db && d1 == df))
            << "distance " << dist << " from " << x;
      }
    };

    for (int op = 0; op < 40; ++op) {
      const auto choice = rng.next(3);
      if (choice == 0 || reps.empty()) {
        const std::size_t len = 1 + rng.next(20);
        const auto ids = u.make_chain(len);
        std::vector<std::int64_t> ext(ids.begin(), ids.end());
        shadow.new_list(ext);
        reps.push_back(ids[0]);
        ASSERT_TRUE(u.audit());
      } else if (choice == 1 && reps.size() >= 2) {
        const std::size_t ia = rng.next(reps.size());
        std::size_t ib = rng.next(reps.size() - 1);
        if (ib >= ia) ++ib;
        const auto ea = shadow.endpoints(reps[ia]);
        const auto eb = shadow.endpoints(reps[ib]);
        const NodeId x = static_cast<NodeId>(rng.next(2) ? ea.first : ea.second);
        const NodeId y = static_cast<NodeId>(rng.next(2) ? eb.first : eb.second);
        u.concatenate(x, y);
        shadow.concatenate(x, y);
        reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(ib));
        ASSERT_TRUE(u.audit());
      } else {
        const std::size_t il = rng.next(reps.size());
        const auto& seq = shadow.list_of(reps[il]);
        if (seq.size() < 2) continue;
        const std::size_t cut = rng.next(seq.size() - 1);
        const NodeId x = static_cast<NodeId>(seq[cut]);
        const NodeId y = static_cast<NodeId>(seq[cut + 1]);
        reps[il] = x;
        reps.push_back(y);
        u.split(x, y);
        shadow.split(x, y);
        ASSERT_TRUE(u.audit());
      }
      check_queries();
    }
  }
}

TEST(HList, StepBoundsOnLongList) {
  const int h = 100;
  const std::size_t len = 10000;
  Universe u(h);
  const auto ids = u.make_chain(len);
  const StepCount query_budget = 6 * (h + static_cast<StepCount>(len) / h);
  const StepCount update_budget = 6 * h;

  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    const NodeId x = ids[rng.next(len)];
    u.reset_steps();
    u.find_endpoint(x, static_cast<int>(rng.next(2)));
    ASSERT_LE(u.steps(), query_budget);
    u.reset_steps();
    u.element_at_distance(x, static_cast<int>(rng.next(2)), rng.next(len + h));
    ASSERT_LE(u.steps(), query_budget);
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t cut = 1 + rng.next(len - 1);
    u.reset_steps();
    u.split(ids[cut - 1], ids[cut]);
    ASSERT_LE(u.steps(), update_budget);
    u.reset_steps();
    u.concatenate(ids[cut - 1], ids[cut]);  // cost includes the same-list probe
    ASSERT_LE(u.steps(), update_budget);
  }
  EXPECT_TRUE(u.audit());
}

}  // namespace
}  // namespace sqds
