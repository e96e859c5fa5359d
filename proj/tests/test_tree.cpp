#include "sqds/tree.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "sqds/script.hpp"
#include "support.hpp"

namespace sqds {
namespace {

using testing::random_parents;
using testing::Rng;

TEST(BuildTree, SingleNode) {
  const RootedTree t = build_tree({kNone});
  EXPECT_EQ(t.n, 1);
  EXPECT_EQ(t.root, 0);
  EXPECT_EQ(t.level[0], 0);
  EXPECT_TRUE(t.children[0].empty());
}

TEST(BuildTree, ChainLevels) {
  const RootedTree t = build_tree({kNone, 0, 1, 2, 3, 4});
  for (NodeId i = 0; i < 6; ++i) EXPECT_EQ(t.level[i], i);
}

TEST(BuildTree, BranchingLevelsAndChildren) {
  const RootedTree t = build_tree({kNone, 0, 1, 1, 2, 3});
  EXPECT_EQ(t.level, (std::vector<int>{0, 1, 2, 2, 3, 3}));
  EXPECT_EQ(t.children[1], (std::vector<NodeId>{2, 3}));
}

TEST(BuildTree, RejectsMalformedInput) {
  EXPECT_THROW(build_tree({}), MalformedTree);
  EXPECT_THROW(build_tree({kNone, kNone}), MalformedTree);       // two roots
  EXPECT_THROW(build_tree({0, 1}), MalformedTree);               // no root, cycle
  EXPECT_THROW(build_tree({kNone, 2, 1}), MalformedTree);        // 1 <-> 2 cycle
  EXPECT_THROW(build_tree({kNone, 7}), MalformedTree);           // out of range
  EXPECT_THROW(build_tree({kNone, 1}), MalformedTree);           // self-parent
}

TEST(BuildTree, LevelRecurrenceAndChildCountsOnRandomTrees) {
  Rng rng(20260811);
  for (int round = 0; round < 50; ++round) {
    const NodeId n = 1 + static_cast<NodeId>(rng.next(120));
    const RootedTree t = build_tree(random_parents(rng, n));
    std::size_t total_children = 0;
    for (NodeId x = 0; x < n; ++x) {
      total_children += t.children[x].size();
      if (x != t.root) EXPECT_EQ(t.level[x], t.level[t.parent[x]] + 1);
    }
    EXPECT_EQ(total_children, static_cast<std::size_t>(n) - 1);
  }
}

TEST(NaiveLca, Examples) {
  const RootedTree chain = build_tree({kNone, 0, 1, 2, 3, 4});
  EXPECT_EQ(naive_lca(chain, 5, 2), 2);
  const RootedTree branch = build_tree({kNone, 0, 1, 1, 2, 3});
  EXPECT_EQ(naive_lca(branch, 4, 5), 1);
  EXPECT_EQ(naive_lca(branch, 3, 3), 3);
}

TEST(NaiveLca, SymmetricOnRandomTrees) {
  Rng rng(7);
  for (int round = 0; round < 10; ++round) {
    const NodeId n = 2 + static_cast<NodeId>(rng.next(49));
    const RootedTree t = build_tree(random_parents(rng, n));
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i; j < n; ++j) EXPECT_EQ(naive_lca(t, i, j), naive_lca(t, j, i));
  }
}

TEST(TreeFile, ParsesValuesAndColors) {
  std::istringstream in("6\n-1 0 1 2 3 4\nV 0 1 2 3 4 5\nC 0 1 0 1 0 1\n");
  const TreeData data = read_tree_data(in);
  EXPECT_EQ(data.tree.n, 6);
  EXPECT_EQ(data.values[5], 5);
  EXPECT_EQ(data.colors[3], 1);
}

TEST(TreeFile, DefaultsAndComments) {
  std::istringstream in("# a tree\n3\n-1 0 0\n");
  const TreeData data = read_tree_data(in);
  EXPECT_EQ(data.values, (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(data.colors, (std::vector<Color>{0, 0, 0}));
}

TEST(TreeFile, ReportsLineNumbers) {
  std::istringstream in("3\n-1 0 zebra\n");
  try {
    read_tree_data(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::istringstream bad_count("2\n-1 0 0\n");
  EXPECT_THROW(read_tree_data(bad_count), ParseError);
  std::istringstream bad_tag("2\n-1 0\nX 1 2\n");
  EXPECT_THROW(read_tree_data(bad_tag), ParseError);
}

}  // namespace
}  // namespace sqds
