// qtac: necessary-condition analysis for 3-designs over finite fields with a
// prescribed automorphism group. See README.md for the file formats.

#include <CLI11.hpp>
#include <iostream>

#include "qtac/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tactical-decomposition toolkit for designs over finite fields"};
  app.require_subcommand(1);

  qtac::cli::GlobalOptions opt;
  app.add_flag("--json", opt.json, "machine-readable JSON reports");
  app.add_option("--threads", opt.threads, "worker threads (0 = all cores)");
  app.add_option("--node-budget", opt.node_budget, "search node budget");
  app.add_flag("--verify-p-independence", opt.verify_p_independence,
               "recompute Lambda at every point of every class");
  app.add_option("--seed", opt.seed, "RNG seed for random-group generation");

  unsigned v = 0, r = 0, q = 0, k = 0, t = 3;
  uint64_t lambda_max = 1, max_order = 21;
  std::string group_file, design_file, problem_file;

  auto* gaussian = app.add_subcommand("gaussian", "Gaussian binomial [v r]_q");
  gaussian->add_option("v", v)->required();
  gaussian->add_option("r", r)->required();
  gaussian->add_option("q", q)->required();

  auto* orb = app.add_subcommand("orbits", "orbit census of the k-subspaces under a group");
  orb->add_option("-g,--group", group_file, "group file")->required();
  orb->add_option("-k,--dim", k, "subspace dimension")->required();

  auto* lam = app.add_subcommand("lambda", "Lambda tensor by lines method and brute force");
  lam->add_option("-g,--group", group_file, "group file")->required();
  lam->add_option("-d,--design", design_file, "optional design file (validated)");

  auto* chk = app.add_subcommand("check", "full necessary-condition pipeline");
  chk->add_option("-d,--design", design_file, "design file")->required();
  chk->add_option("-g,--group", group_file, "group file")->required();

  auto* sea = app.add_subcommand("search", "enumerate candidate decomposition matrices");
  sea->add_option("-p,--problem", problem_file, "problem JSON file")->required();

  auto* adm = app.add_subcommand("admissible", "admissible lambda for a transitive group");
  adm->add_option("-g,--group", group_file, "group file")->required();
  adm->add_option("-k,--dim", k, "block dimension")->required();
  adm->add_option("-t", t, "design strength (default 3)");
  adm->add_option("--lambda-max", lambda_max, "largest lambda to test")->required();

  auto* triv = app.add_subcommand("trivial-design", "write the design of all k-subspaces");
  triv->add_option("v", v)->required();
  triv->add_option("k", k)->required();
  triv->add_option("q", q)->required();
  triv->add_option("t", t)->required();

  auto* rnd = app.add_subcommand("random-group", "write a random cyclic subgroup of GL(v, q)");
  rnd->add_option("v", v)->required();
  rnd->add_option("q", q)->required();
  rnd->add_option("--max-order", max_order, "largest group order (default 21)");

  CLI11_PARSE(app, argc, argv);

  using namespace qtac::cli;
  if (gaussian->parsed()) return cmd_gaussian(v, r, q, opt, std::cout);
  if (orb->parsed()) return cmd_orbits(group_file, k, opt, std::cout);
  if (lam->parsed())
    return cmd_lambda(group_file,
                      design_file.empty() ? std::nullopt
                                          : std::optional<std::string>(design_file),
                      opt, std::cout);
  if (chk->parsed()) return cmd_check(design_file, group_file, opt, std::cout);
  if (sea->parsed()) return cmd_search(problem_file, opt, std::cout);
  if (adm->parsed()) return cmd_admissible(group_file, k, t, lambda_max, opt, std::cout);
  if (triv->parsed()) return cmd_trivial_design(v, k, q, t, opt, std::cout);
  if (rnd->parsed()) return cmd_random_group(v, q, max_order, opt, std::cout);
  return exit_usage;
}
