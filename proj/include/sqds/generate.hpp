#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqds/core.hpp"
#include "sqds/tree.hpp"

namespace sqds {

enum class TreeKind { kChain, kStar, kCaterpillar, kRandomAttach };

inline TreeKind parse_tree_kind(const std::string& name) {
  if (name == "chain") return TreeKind::kChain;
  if (name == "star") return TreeKind::kStar;
  if (name == "caterpillar") return TreeKind::kCaterpillar;
  if (name == "random-attach") return TreeKind::kRandomAttach;
  throw Error("unknown tree kind: " + name);
}

// Deterministic parent arrays for the benchmark families. random-attach
// draws each node's parent uniformly from the earlier nodes; the raw
// generator output is reduced by modulus so identical seeds reproduce
// identical trees everywhere.
inline std::vector<NodeId> generate_parents(TreeKind kind, NodeId n, std::uint64_t seed) {
  if (n < 1) throw Error("tree size must be >= 1");
  std::vector<NodeId> parents(n, kNone);
  switch (kind) {
    case TreeKind::kChain:
      for (NodeId i = 1; i < n; ++i) parents[i] = i - 1;
      break;
    case TreeKind::kStar:
      for (NodeId i = 1; i < n; ++i) parents[i] = 0;
      break;
    case TreeKind::kCaterpillar: {
      // spine of the first ceil(n/2) nodes, remaining nodes hang off it
      const NodeId spine = (n + 1) / 2;
      for (NodeId i = 1; i < spine; ++i) parents[i] = i - 1;
      for (NodeId i = spine; i < n; ++i) parents[i] = i - spine;
      break;
    }
    case TreeKind::kRandomAttach: {
      std::mt19937_64 gen(seed);
      for (NodeId i = 1; i < n; ++i)
        parents[i] = static_cast<NodeId>(gen() % static_cast<std::uint64_t>(i));
      break;
    }
  }
  return parents;
}

inline RootedTree generate_tree(TreeKind kind, NodeId n, std::uint64_t seed) {
  return build_tree(generate_parents(kind, n, seed));
}

// Tree text format: "N", then N parent entries (-1 at the root), then
// optional "V"/"C" lines with per-node values/colors.
inline std::string format_tree_file(const std::vector<NodeId>& parents,
                                    const std::vector<std::int64_t>* values = nullptr,
                                    const std::vector<Color>* colors = nullptr) {
  std::string out = std::to_string(parents.size());
  out += '\n';
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(parents[i]);
  }
  out += '\n';
  if (values) {
    out += 'V';
    for (auto v : *values) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  if (colors) {
    out += 'C';
    for (auto c : *colors) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sqds
