#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qtac/cli.hpp"
#include "qtac/io.hpp"

using namespace qtac;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

// order-3 map on F_2^5: the order-3 block on the first four coordinates
const char* kOrder3V5 =
    "q=2 v=5\n"
    "gen\n"
    "0 0 0 1 0\n"
    "0 0 1 0 0\n"
    "0 1 1 0 0\n"
    "1 0 0 1 0\n"
    "0 0 0 0 1\n";

}  // namespace

TEST_CASE("full pipeline on the trivial 3-(5,3,1)_2 design with an order-3 group") {
  Field F(2);
  std::string gpath = write_temp("qtac_o3v5.grp", kOrder3V5);
  std::ostringstream design_text;
  write_design_file(design_text, trivial_design(F, 5, 3, 3));
  std::string dpath = write_temp("qtac_trivial_5_3.dsg", design_text.str());

  cli::GlobalOptions opt;
  opt.verify_p_independence = true;
  std::ostringstream out;
  CHECK(cli::cmd_check(dpath, gpath, opt, out) == cli::exit_ok);
  CHECK(out.str().find("all checks passed") != std::string::npos);
  CHECK(out.str().find("prime-order bound (p=3): pass") != std::string::npos);
}

TEST_CASE("cmd_lambda accepts a design file and validates the group against it") {
  Field F(2);
  std::ostringstream design_text;
  write_design_file(design_text, trivial_design(F, 4, 3, 3));
  std::string dpath = write_temp("qtac_trivial_4_3.dsg", design_text.str());

  cli::GlobalOptions opt;
  std::ostringstream out;
  CHECK(cli::cmd_lambda(QTAC_DATA_DIR "/order3_f2v4.grp", dpath, opt, out) == cli::exit_ok);
  CHECK(out.str().find("both methods agree") != std::string::npos);

  // a design the group does not preserve is rejected
  QDesign full = trivial_design(F, 4, 3, 3);
  std::vector<Subspace> blocks(full.blocks().begin(), full.blocks().end() - 1);
  std::ostringstream broken_text;
  write_design_file(broken_text, QDesign(full.params(), blocks));
  std::string bpath = write_temp("qtac_broken_4_3.dsg", broken_text.str());
  std::ostringstream sink;
  CHECK(cli::cmd_lambda(QTAC_DATA_DIR "/order3_f2v4.grp", bpath, opt, sink) ==
        cli::exit_violation);
}

TEST_CASE("cmd_search consumes problem files produced by the library") {
  Field F(2);
  GroupPresentation G = load_group_file(QTAC_DATA_DIR "/order3_f2v4.grp");
  SearchProblem prob;
  prob.params = DesignParams{3, 4, 3, 2, 1};
  prob.point_sizes.assign(5, 3);
  prob.block_sizes.assign(5, 3);
  prob.tensor = lambda_tensor_via_lines(F, lines_decomposition(F, G));
  std::string ppath = write_temp("qtac_o3.problem.json", problem_to_json(prob));

  cli::GlobalOptions opt;
  opt.json = true;
  std::ostringstream out;
  CHECK(cli::cmd_search(ppath, opt, out) == cli::exit_ok);
  // one candidate line plus one summary line
  std::istringstream lines(out.str());
  std::string l1, l2, l3;
  CHECK(std::getline(lines, l1));
  CHECK(std::getline(lines, l2));
  CHECK_FALSE(std::getline(lines, l3));
  CHECK(l1.find("\"rho\":[[3,1,1,1,1]") != std::string::npos);
  CHECK(l2.find("\"candidates\":1") != std::string::npos);
}

TEST_CASE("trivial-design and random-group subcommands emit loadable files") {
  cli::GlobalOptions opt;
  std::ostringstream dtext;
  CHECK(cli::cmd_trivial_design(4, 3, 2, 3, opt, dtext) == cli::exit_ok);
  Field F(2);
  std::istringstream din(dtext.str());
  QDesign d = parse_design_file(F, din, "gen");
  CHECK(d.block_count() == 15);

  opt.seed = 7;
  std::ostringstream gtext;
  CHECK(cli::cmd_random_group(4, 3, 21, opt, gtext) == cli::exit_ok);
  std::istringstream gin(gtext.str());
  GroupPresentation G = parse_group_file(gin, "gen");
  Field F3(3);
  uint64_t order = group_order(F3, G);
  CHECK(order >= 2);
  CHECK(order <= 21);
}
