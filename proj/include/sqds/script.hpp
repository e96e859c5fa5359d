#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqds/ancestor_count.hpp"
#include "sqds/color.hpp"
#include "sqds/core.hpp"
#include "sqds/decomposition.hpp"
#include "sqds/generate.hpp"
#include "sqds/hlist.hpp"
#include "sqds/oracle.hpp"
#include "sqds/path_engine.hpp"
#include "sqds/rebuild_bst.hpp"
#include "sqds/tree.hpp"

namespace sqds {

// Per-node data read from a tree file. Values and colors default to all
// zeros when the V/C lines are absent.
struct TreeData {
  RootedTree tree;
  std::vector<std::int64_t> values;
  std::vector<Color> colors;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::int64_t parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

inline TreeData read_tree_data(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_tokens = [&]() -> std::optional<std::vector<std::string>> {
    while (std::getline(in, line)) {
      ++line_no;
      auto toks = detail::tokenize(line);
      if (!toks.empty() && toks[0][0] != '#') return toks;
    }
    return std::nullopt;
  };

  auto header = next_tokens();
  if (!header) throw ParseError(1, "missing node count");
  if (header->size() != 1) throw ParseError(line_no, "node count line must hold one integer");
  const std::int64_t n = detail::parse_int((*header)[0], line_no);
  if (n < 1) throw ParseError(line_no, "node count must be >= 1");

  auto parents_line = next_tokens();
  if (!parents_line) throw ParseError(line_no + 1, "missing parent entries");
  if (parents_line->size() != static_cast<std::size_t>(n))
    throw ParseError(line_no, "expected " + std::to_string(n) + " parent entries, got " +
                                  std::to_string(parents_line->size()));
  std::vector<NodeId> parents(n);
  for (std::size_t i = 0; i < parents.size(); ++i) {
    const std::int64_t p = detail::parse_int((*parents_line)[i], line_no);
    if (p != -1 && (p < 0 || p >= n))
      throw ParseError(line_no, "parent entry out of range: " + std::to_string(p));
    parents[i] = static_cast<NodeId>(p);
  }

  TreeData data;
  try {
    data.tree = build_tree(parents);
  } catch (const MalformedTree& e) {
    throw ParseError(line_no, e.what());
  }
  data.values.assign(n, 0);
  data.colors.assign(n, 0);

  while (auto extra = next_tokens()) {
    const std::string& tag = (*extra)[0];
    std::vector<std::int64_t>* dest = nullptr;
    if (tag == "V")
      dest = &data.values;
    else if (tag == "C")
      dest = &data.colors;
    else
      throw ParseError(line_no, "unknown section '" + tag + "' (expected V or C)");
    if (extra->size() != static_cast<std::size_t>(n) + 1)
      throw ParseError(line_no, tag + " line must hold " + std::to_string(n) + " integers");
    for (std::int64_t i = 0; i < n; ++i) (*dest)[i] = detail::parse_int((*extra)[i + 1], line_no);
  }
  return data;
}

inline TreeData read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tree file: " + path);
  return read_tree_data(in);
}

struct RunConfig {
  std::string command;  // decompose | paths | colors | ancestors | bst | hlist | bench
  std::string tree_path;
  std::string script_path;
  int h = 0;  // 0: default ceil(sqrt(n)) for trees; required for hlist
  bool oracle = false;
  bool logical = false;
  std::uint64_t seed = 1;
  // bench only
  std::string kind = "chain";
  NodeId n = 1000;
  int ops = 100;
};

namespace detail {

struct ScriptOp {
  int line_no = 0;
  std::string text;
  std::string name;
  std::vector<std::int64_t> args;
};

// Reads one op per line; blank lines and '#' comments are skipped.
inline std::vector<ScriptOp> read_script(std::istream& in) {
  std::vector<ScriptOp> ops;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    ScriptOp op;
    op.line_no = line_no;
    op.text = line;
    op.name = toks[0];
    for (std::size_t i = 1; i < toks.size(); ++i)
      op.args.push_back(parse_int(toks[i], line_no));
    ops.push_back(std::move(op));
  }
  return ops;
}

inline void need_args(const ScriptOp& op, std::size_t count) {
  if (op.args.size() != count)
    throw ParseError(op.line_no, op.name + " takes " + std::to_string(count) + " argument(s)");
}

inline NodeId node_arg(const ScriptOp& op, std::size_t idx, NodeId n) {
  const std::int64_t v = op.args[idx];
  if (v < 0 || v >= n) throw ParseError(op.line_no, "node id out of range: " + std::to_string(v));
  return static_cast<NodeId>(v);
}

[[noreturn]] inline void unknown_op(const ScriptOp& op) {
  throw ParseError(op.line_no, "unknown op '" + op.name + "'");
}

inline int diverged(std::ostream& err, const ScriptOp& op, const std::string& got,
                    const std::string& expected) {
  err << "oracle divergence at line " << op.line_no << " ('" << op.text << "'): got " << got
      << ", expected " << expected << "\n";
  return 1;
}

}  // namespace detail

inline int run_decompose(const TreeData& data, int h, std::ostream& out) {
  const Decomposition d = build_decomposition(data.tree, h);
  out << "h=" << d.h << "\n";
  out << "supers:";
  for (NodeId s : d.supers) out << " " << s;
  out << "\n";
  for (NodeId s : d.supers) {
    out << "group " << s << ":";
    for (NodeId x : d.group(s)) out << " " << x;
    out << "\n";
  }
  out << "ungrouped:";
  for (NodeId x = 0; x < data.tree.n; ++x)
    if (d.group_of[x] == kNone) out << " " << x;
  out << "\n";
  out << "isn=" << d.isn_count << "\n";
  out << "esn=" << d.esn_count << "\n";
  out << "build_steps=" << d.build_steps << "\n";
  return 0;
}

inline int run_paths(const TreeData& data, int h, std::istream& script, std::ostream& out,
                     std::ostream& err, bool oracle_mode) {
  const Decomposition d = build_decomposition(data.tree, h);
  PathStore<SumAdd> store(d, data.values);
  std::vector<std::int64_t> shadow = data.values;
  const RootedTree& t = data.tree;

  for (const auto& op : detail::read_script(script)) {
    if (op.name == "LCA") {
      detail::need_args(op, 2);
      const NodeId i = detail::node_arg(op, 0, t.n), j = detail::node_arg(op, 1, t.n);
      const NodeId got = store.find_lca(i, j);
      out << got << "\n";
      if (oracle_mode && got != naive_lca(t, i, j))
        return detail::diverged(err, op, std::to_string(got), std::to_string(naive_lca(t, i, j)));
    } else if (op.name == "PQ") {
      detail::need_args(op, 2);
      const NodeId i = detail::node_arg(op, 0, t.n), j = detail::node_arg(op, 1, t.n);
      const auto got = store.path_query(i, j);
      out << got << "\n";
      if (oracle_mode) {
        const auto want = oracle::path_fold<SumAdd>(t, shadow, i, j);
        if (got != want)
          return detail::diverged(err, op, std::to_string(got), std::to_string(want));
      }
    } else if (op.name == "PU") {
      detail::need_args(op, 3);
      const NodeId i = detail::node_arg(op, 0, t.n), j = detail::node_arg(op, 1, t.n);
      store.path_update(i, j, op.args[2]);
      if (oracle_mode) oracle::path_apply<SumAdd>(t, shadow, i, j, op.args[2]);
    } else if (op.name == "POINTQ") {
      detail::need_args(op, 1);
      const NodeId x = detail::node_arg(op, 0, t.n);
      const auto got = store.point_query(x);
      out << got << "\n";
      if (oracle_mode && got != shadow[x])
        return detail::diverged(err, op, std::to_string(got), std::to_string(shadow[x]));
    } else if (op.name == "POINTU") {
      detail::need_args(op, 2);
      const NodeId x = detail::node_arg(op, 0, t.n);
      store.point_update(x, op.args[1]);
      if (oracle_mode) shadow[x] += op.args[1];
    } else if (op.name == "STATS") {
      detail::need_args(op, 0);
      err << "steps=" << store.steps() << "\n";
      err << "build_steps=" << d.build_steps << "\n";
    } else {
      detail::unknown_op(op);
    }
  }
  return 0;
}

inline int run_colors(const TreeData& data, int h, std::istream& script, std::ostream& out,
                      std::ostream& err, bool oracle_mode) {
  const Decomposition d = build_decomposition(data.tree, h);
  ColorState state(d, data.values, data.colors);
  std::vector<Color> shadow = data.colors;
  const RootedTree& t = data.tree;

  for (const auto& op : detail::read_script(script)) {
    if (op.name == "CQ") {
      detail::need_args(op, 3);
      const NodeId i = detail::node_arg(op, 0, t.n), j = detail::node_arg(op, 1, t.n);
      const auto got = state.color_query(i, j, op.args[2]);
      out << got << "\n";
      if (oracle_mode) {
        const auto want = oracle::color_fold(t, data.values, shadow, i, j, op.args[2]);
        if (got != want)
          return detail::diverged(err, op, std::to_string(got), std::to_string(want));
      }
    } else if (op.name == "CU") {
      detail::need_args(op, 4);
      const NodeId i = detail::node_arg(op, 0, t.n), j = detail::node_arg(op, 1, t.n);
      state.recolor_path(i, j, op.args[2], op.args[3]);
      if (oracle_mode) oracle::recolor(t, shadow, i, j, op.args[2], op.args[3]);
    } else if (op.name == "STATS") {
      detail::need_args(op, 0);
      err << "steps=" << state.steps() << "\n";
      err << "build_steps=" << d.build_steps << "\n";
    } else {
      detail::unknown_op(op);
    }
  }
  return 0;
}

inline int run_ancestors(const TreeData& data, int h, std::istream& script, std::ostream& out,
                         std::ostream& err, bool oracle_mode) {
  const Decomposition d = build_decomposition(data.tree, h);
  AncestorColorIndex index(d, data.colors);

  for (const auto& op : detail::read_script(script)) {
    if (op.name == "APQ") {
      detail::need_args(op, 2);
      const auto got = index.query(op.args[0], op.args[1]);
      out << got << "\n";
      if (oracle_mode) {
        const auto want = oracle::ancestor_pairs(data.tree, data.colors, op.args[0], op.args[1]);
        if (got != want)
          return detail::diverged(err, op, std::to_string(got), std::to_string(want));
      }
    } else if (op.name == "STATS") {
      detail::need_args(op, 0);
      err << "build_steps=" << index.build_steps() << "\n";
      err << "query_steps=" << index.query_steps() << "\n";
    } else {
      detail::unknown_op(op);
    }
  }
  return 0;
}

inline int run_bst(std::istream& script, std::ostream& out, std::ostream& err, bool oracle_mode,
                   bool logical, std::optional<int> fixed_threshold) {
  RebuildBst<std::int64_t>::ThresholdFn threshold = nullptr;
  if (fixed_threshold) threshold = [t = *fixed_threshold](std::size_t) { return t; };
  RebuildBst<std::int64_t> bst(logical ? DeleteMode::kLogical : DeleteMode::kPhysical, threshold);
  oracle::SortedSet shadow;

  for (const auto& op : detail::read_script(script)) {
    if (op.name == "INS") {
      detail::need_args(op, 1);
      bst.insert(op.args[0]);
      if (oracle_mode) shadow.insert(op.args[0]);
    } else if (op.name == "DEL") {
      detail::need_args(op, 1);
      bst.erase(op.args[0]);
      if (oracle_mode) shadow.erase(op.args[0]);
    } else if (op.name == "HAS") {
      detail::need_args(op, 1);
      const bool got = bst.contains(op.args[0]);
      out << (got ? 1 : 0) << "\n";
      if (oracle_mode && got != shadow.contains(op.args[0]))
        return detail::diverged(err, op, std::to_string(got), std::to_string(!got));
    } else if (op.name == "REBUILD") {
      detail::need_args(op, 0);
      bst.rebuild();
    } else if (op.name == "STATS") {
      detail::need_args(op, 0);
      err << "steps=" << bst.steps() << "\n";
      err << "rebuilds=" << bst.rebuild_count() << "\n";
      err << "size=" << bst.size() << "\n";
      err << "height=" << bst.height() << "\n";
    } else {
      detail::unknown_op(op);
    }
  }
  return 0;
}

inline int run_hlist(int h, std::istream& script, std::ostream& out, std::ostream& err,
                     bool oracle_mode) {
  HListUniverse<std::int64_t> universe(h);
  std::unordered_map<std::int64_t, NodeId> handle;  // external id -> arena id
  std::vector<std::int64_t> external;               // arena id -> external id
  oracle::ArrayList shadow;

  auto lookup = [&](const detail::ScriptOp& op, std::size_t idx) {
    auto it = handle.find(op.args[idx]);
    if (it == handle.end())
      throw ParseError(op.line_no, "unknown element id: " + std::to_string(op.args[idx]));
    return it->second;
  };
  auto render = [&](NodeId id) { return id == kNone ? std::string("NONE")
                                                    : std::to_string(external[id]); };

  for (const auto& op : detail::read_script(script)) {
    if (op.name == "NEWLIST") {
      detail::need_args(op, 2);
      const std::int64_t base = op.args[0], len = op.args[1];
      if (len < 1) throw ParseError(op.line_no, "list length must be >= 1");
      std::vector<std::int64_t> ids(len);
      for (std::int64_t k = 0; k < len; ++k) {
        ids[k] = base + k;
        if (handle.count(ids[k]))
          throw ParseError(op.line_no, "element id already in use: " + std::to_string(ids[k]));
      }
      const auto nodes = universe.make_chain(static_cast<std::size_t>(len));
      for (std::int64_t k = 0; k < len; ++k) {
        handle[ids[k]] = nodes[k];
        external.resize(universe.node_count());
        external[nodes[k]] = ids[k];
      }
      if (oracle_mode) shadow.new_list(ids);
    } else if (op.name == "ENDP") {
      detail::need_args(op, 2);
      if (op.args[1] != 0 && op.args[1] != 1)
        throw ParseError(op.line_no, "direction must be 0 or 1");
      const NodeId got = universe.find_endpoint(lookup(op, 0), static_cast<int>(op.args[1]));
      out << render(got) << "\n";
      if (oracle_mode) {
        const auto [front, back] = shadow.endpoints(op.args[0]);
        if (external[got] != front && external[got] != back)
          return detail::diverged(err, op, render(got),
                                  std::to_string(front) + " or " + std::to_string(back));
      }
    } else if (op.name == "DIST") {
      detail::need_args(op, 3);
      if (op.args[1] != 0 && op.args[1] != 1)
        throw ParseError(op.line_no, "direction must be 0 or 1");
      if (op.args[2] < 0) throw ParseError(op.line_no, "distance must be >= 0");
      const NodeId got =
          universe.element_at_distance(lookup(op, 0), static_cast<int>(op.args[1]), op.args[2]);
      out << render(got) << "\n";
      if (oracle_mode) {
        const auto [front, back] = shadow.at_distance(op.args[0], op.args[2]);
        const std::int64_t got_ext = got == kNone ? oracle::ArrayList::kNoneId : external[got];
        if (got_ext != front && got_ext != back)
          return detail::diverged(err, op, render(got),
                                  std::to_string(front) + " or " + std::to_string(back));
      }
    } else if (op.name == "CAT") {
      detail::need_args(op, 2);
      universe.concatenate(lookup(op, 0), lookup(op, 1));
      if (oracle_mode) shadow.concatenate(op.args[0], op.args[1]);
    } else if (op.name == "SPLIT") {
      detail::need_args(op, 2);
      universe.split(lookup(op, 0), lookup(op, 1));
      if (oracle_mode) shadow.split(op.args[0], op.args[1]);
    } else if (op.name == "AUDIT") {
      detail::need_args(op, 0);
      const bool ok = universe.audit();
      out << (ok ? "OK" : "FAIL") << "\n";
      if (oracle_mode && !ok) return detail::diverged(err, op, "FAIL", "OK");
    } else if (op.name == "STATS") {
      detail::need_args(op, 0);
      err << "steps=" << universe.steps() << "\n";
      err << "nodes=" << universe.node_count() << "\n";
    } else {
      detail::unknown_op(op);
    }
  }
  return 0;
}

// Builds the ancestor color-pair index and reports its build counters.
inline int run_ancestor_index(const TreeData& data, int h, std::ostream& out) {
  const Decomposition d = build_decomposition(data.tree, h);
  AncestorColorIndex index(d, data.colors);
  out << "h=" << d.h << "\n";
  out << "supers=" << d.super_count() << "\n";
  out << "pair_table_entries=" << index.pair_table_size() << "\n";
  out << "build_steps=" << index.build_steps() << "\n";
  return 0;
}

inline int run_bench(const RunConfig& cfg, std::ostream& out) {
  const RootedTree tree = generate_tree(parse_tree_kind(cfg.kind), cfg.n, cfg.seed);
  const int h = cfg.h > 0 ? cfg.h : default_block_length(tree.n);
  const Decomposition d = build_decomposition(tree, h);
  std::vector<std::int64_t> values(tree.n);
  for (NodeId x = 0; x < tree.n; ++x) values[x] = x;
  PathStore<SumAdd> store(d, std::move(values));
  store.reset_steps();

  std::mt19937_64 gen(cfg.seed);
  auto pick = [&](std::uint64_t bound) { return static_cast<std::int64_t>(gen() % bound); };
  static const char* kOps[] = {"LCA", "PQ", "PU", "POINTQ", "POINTU"};

  out << "kind,n,h,op,steps\n";
  for (int k = 0; k < cfg.ops; ++k) {
    const int which = static_cast<int>(pick(5));
    const NodeId i = static_cast<NodeId>(pick(tree.n));
    const NodeId j = static_cast<NodeId>(pick(tree.n));
    const std::int64_t delta = pick(21) - 10;
    const StepCount before = store.steps();
    switch (which) {
      case 0: store.find_lca(i, j); break;
      case 1: store.path_query(i, j); break;
      case 2: store.path_update(i, j, delta); break;
      case 3: store.point_query(i); break;
      case 4: store.point_update(i, delta); break;
    }
    out << cfg.kind << "," << tree.n << "," << h << "," << kOps[which] << ","
        << (store.steps() - before) << "\n";
  }
  return 0;
}

// Dispatches a parsed configuration: opens the input files, runs the
// subcommand, and maps failures to exit codes (2 for malformed input,
// 1 for an oracle divergence, 0 otherwise).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "bench") return run_bench(cfg, out);

    std::optional<std::ifstream> script_file;
    auto open_script = [&]() -> std::istream& {
      script_file.emplace(cfg.script_path);
      if (!*script_file) throw Error("cannot open script file: " + cfg.script_path);
      return *script_file;
    };

    if (cfg.command == "bst")
      return run_bst(open_script(), out, err, cfg.oracle, cfg.logical,
                     cfg.h > 0 ? std::optional<int>(cfg.h) : std::nullopt);
    if (cfg.command == "hlist") {
      if (cfg.h < 1) throw Error("hlist requires --h >= 1");
      return run_hlist(cfg.h, open_script(), out, err, cfg.oracle);
    }

    const TreeData data = read_tree_file(cfg.tree_path);
    const int h = cfg.h > 0 ? cfg.h : default_block_length(data.tree.n);
    if (cfg.command == "decompose") return run_decompose(data, h, out);
    if (cfg.command == "ancestor-index") return run_ancestor_index(data, h, out);
    if (cfg.command == "paths") return run_paths(data, h, open_script(), out, err, cfg.oracle);
    if (cfg.command == "colors") return run_colors(data, h, open_script(), out, err, cfg.oracle);
    if (cfg.command == "ancestors")
      return run_ancestors(data, h, open_script(), out, err, cfg.oracle);
    throw Error("unknown command: " + cfg.command);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sqds
