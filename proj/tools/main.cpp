#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sqds/script.hpp"

// CLI harness: every subcommand reads line-based text inputs and writes
// one line per query to stdout (counters go to stderr on STATS). Exit
// codes: 0 ok, 1 oracle divergence, 2 malformed input.
int main(int argc, char** argv) {
  CLI::App app{"block-decomposed rooted-tree, search-tree and list structures"};
  app.set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  app.require_subcommand(1);

  sqds::RunConfig cfg;

  auto add_tree_cmd = [&](const std::string& name, const std::string& desc, bool with_script) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("treefile", cfg.tree_path, "tree description file")->required();
    if (with_script)
      cmd->add_option("scriptfile", cfg.script_path, "ops script file")->required();
    cmd->add_option("--h", cfg.h, "block length (default: ceil(sqrt(n)))")->check(CLI::PositiveNumber);
    if (with_script) cmd->add_flag("--oracle", cfg.oracle, "diff every op against the brute-force oracle");
    return cmd;
  };

  add_tree_cmd("decompose", "print the super-node decomposition", false);
  add_tree_cmd("ancestor-index", "build the ancestor color-pair index and print its counters", false);
  add_tree_cmd("paths", "run a path query/update script (LCA, PQ, PU, POINTQ, POINTU, STATS)", true);
  add_tree_cmd("colors", "run a color query/update script (CQ, CU, STATS)", true);
  add_tree_cmd("ancestors", "run an ancestor color-pair script (APQ, STATS)", true);

  CLI::App* bst = app.add_subcommand("bst", "run a search-tree script (INS, DEL, HAS, REBUILD, STATS)");
  bst->add_option("scriptfile", cfg.script_path, "ops script file")->required();
  bst->add_option("--h", cfg.h, "fixed height threshold (default: adaptive)")->check(CLI::PositiveNumber);
  bst->add_flag("--logical", cfg.logical, "mark deletions instead of splicing");
  bst->add_flag("--oracle", cfg.oracle, "diff every op against the sorted-set oracle");

  CLI::App* hlist = app.add_subcommand("hlist", "run an h-list script (NEWLIST, ENDP, DIST, CAT, SPLIT, AUDIT, STATS)");
  hlist->add_option("scriptfile", cfg.script_path, "ops script file")->required();
  hlist->add_option("--h", cfg.h, "h-pointer distance")->required()->check(CLI::PositiveNumber);
  hlist->add_flag("--oracle", cfg.oracle, "check answers against the positional oracle");

  CLI::App* bench = app.add_subcommand("bench", "generate a tree and emit per-op step counts as CSV");
  bench->add_option("--kind", cfg.kind, "chain | star | caterpillar | random-attach");
  bench->add_option("--n", cfg.n, "node count")->check(CLI::PositiveNumber);
  bench->add_option("--h", cfg.h, "block length (default: ceil(sqrt(n)))")->check(CLI::PositiveNumber);
  bench->add_option("--ops", cfg.ops, "number of operations")->check(CLI::PositiveNumber);
  bench->add_option("--seed", cfg.seed, "generator seed");

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  return sqds::run(cfg, std::cout, std::cerr);
}
