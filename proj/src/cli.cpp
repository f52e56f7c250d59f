#include "qtac/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "qtac/util.hpp"

namespace qtac {
namespace cli {

using ordered_json = nlohmann::ordered_json;

unsigned GlobalOptions::effective_threads() const {
  if (threads != 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

ordered_json input_entry(const std::string& path) {
  return ordered_json{{"path", path}, {"fnv1a64", fnv1a64_hex(read_file(path))}};
}

ordered_json report_shell(const std::string& command) {
  ordered_json rep;
  rep["command"] = command;
  rep["version"] = version;
  rep["inputs"] = ordered_json::object();
  return rep;
}

// elapsed_ms is the one nondeterministic field; everything else is a pure
// function of the inputs.
void finish_report(ordered_json& rep, const Timer& timer, bool json, std::ostream& out,
                   const std::string& text) {
  rep["elapsed_ms"] = timer.ms();
  if (json)
    out << rep.dump(2) << "\n";
  else
    out << text;
}

ordered_json tensor_to_json(const LambdaTensor& T) {
  ordered_json entries = ordered_json::array();
  for (size_t l = 0; l < T.m; ++l)
    for (size_t r = 0; r < T.m; ++r)
      for (size_t s = 0; s < T.m; ++s)
        if (T.at(l, r, s) != 0) entries.push_back({l, r, s, T.at(l, r, s)});
  return ordered_json{{"m", T.m}, {"entries", std::move(entries)}};
}

ordered_json matrix_to_json(const std::vector<uint64_t>& a, size_t m, size_t n) {
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < m; ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < n; ++j) row.push_back(a[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_text(const std::vector<uint64_t>& a, size_t m, size_t n,
                           const std::string& indent = "  ") {
  size_t width = 1;
  for (uint64_t x : a) width = std::max(width, std::to_string(x).size());
  std::ostringstream out;
  for (size_t i = 0; i < m; ++i) {
    out << indent;
    for (size_t j = 0; j < n; ++j) {
      std::string s = std::to_string(a[i * n + j]);
      out << std::string(width - s.size(), ' ') << s << (j + 1 < n ? " " : "");
    }
    out << "\n";
  }
  return out.str();
}

ordered_json condition_to_json(const ConditionReport& rep) {
  ordered_json j;
  j["system"] = condition_system_name(rep.system);
  j["pass"] = rep.pass;
  j["checked"] = rep.checked;
  ordered_json viol = ordered_json::array();
  for (const auto& vv : rep.violations)
    viol.push_back({{"l", vv.l}, {"r", vv.r}, {"s", vv.s}, {"lhs", vv.lhs}, {"rhs", vv.rhs},
                    {"what", vv.what}});
  j["violations"] = std::move(viol);
  return j;
}

ordered_json structure_to_json(const TensorStructureReport& rep, const char* name) {
  ordered_json j;
  j["check"] = name;
  j["pass"] = rep.pass;
  j["checked"] = rep.checked;
  ordered_json issues = ordered_json::array();
  for (const auto& is : rep.issues)
    issues.push_back({{"l", is.l}, {"r", is.r}, {"s", is.s}, {"lhs", is.lhs}, {"rhs", is.rhs},
                      {"what", is.what}});
  j["issues"] = std::move(issues);
  return j;
}

ordered_json orbit_summary(const OrbitPartition& p) {
  std::map<uint64_t, uint64_t> hist;
  for (uint64_t s : p.orbit_sizes) hist[s]++;
  ordered_json jhist = ordered_json::object();
  for (auto [size, count] : hist) jhist[std::to_string(size)] = count;
  ordered_json reps = ordered_json::array();
  for (const auto& r : p.representatives) reps.push_back(subspace_to_text(r));
  return ordered_json{{"elements", p.size()},
                      {"orbits", p.num_orbits()},
                      {"size_histogram", std::move(jhist)},
                      {"representatives", std::move(reps)}};
}

int run_guarded(bool json, std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (json)
      out << ordered_json{{"error", e.what()}}.dump(2) << "\n";
    else
      out << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error || e.code() == Errc::invalid_arguments ? exit_usage
                                                                                : exit_violation;
  }
}

}  // namespace

int cmd_gaussian(unsigned v, unsigned r, unsigned q, const GlobalOptions& opt,
                 std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    BigInt g = gaussian_binomial(v, r, q);
    ordered_json rep = report_shell("gaussian");
    rep["output"] = {{"v", v}, {"r", r}, {"q", q}, {"value", g.str()}};
    finish_report(rep, timer, opt.json, out, g.str() + "\n");
    return exit_ok;
  });
}

int cmd_orbits(const std::string& group_file, unsigned k, const GlobalOptions& opt,
               std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    GroupPresentation G = load_group_file(group_file);
    Field F(G.q);
    OrbitPartition p = orbits(F, G, all_subspaces(F, G.v, k));

    ordered_json rep = report_shell("orbits");
    rep["inputs"]["group_file"] = input_entry(group_file);
    rep["output"] = {{"k", k}, {"census", orbit_summary(p)}};

    std::ostringstream text;
    text << "ground set: " << p.size() << " subspaces of dimension " << k << " in GF(" << G.q
         << ")^" << G.v << "\n";
    text << "orbits: " << p.num_orbits() << "\n";
    std::map<uint64_t, uint64_t> hist;
    for (uint64_t s : p.orbit_sizes) hist[s]++;
    text << "size histogram:";
    for (auto [size, count] : hist) text << " " << size << "x" << count;
    text << "\nrepresentatives:\n";
    for (size_t i = 0; i < p.representatives.size(); ++i)
      text << "  [" << i << "] " << subspace_to_text(p.representatives[i]) << " (size "
           << p.orbit_sizes[i] << ")\n";
    finish_report(rep, timer, opt.json, out, text.str());
    return exit_ok;
  });
}

namespace {

struct LambdaComputation {
  LinesDecomposition lines;
  LambdaTensor tensor;  // via lines, cross-checked against brute force
};

LambdaComputation compute_lambda_checked(const Field& F, const GroupPresentation& G,
                                         bool verify_p_independence, unsigned threads) {
  LambdaComputation lc;
  lc.lines = lines_decomposition(F, G);
  lc.tensor = lambda_tensor_via_lines(F, lc.lines);
  LambdaTensor brute =
      lambda_tensor_bruteforce(F, lc.lines.points, verify_p_independence, threads);
  if (!(brute.m == lc.tensor.m && brute.values == lc.tensor.values))
    fail(Errc::internal, "line-method tensor disagrees with the brute-force tensor");
  return lc;
}

}  // namespace

int cmd_lambda(const std::string& group_file, const std::optional<std::string>& design_file,
               const GlobalOptions& opt, std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    GroupPresentation G = load_group_file(group_file);
    Field F(G.q);
    if (design_file) {
      DesignFile df = load_design_file(*design_file);
      if (df.design.params().v != G.v || df.design.params().q != G.q)
        fail(Errc::ambient_mismatch, "design and group act on different spaces");
      if (!is_automorphism_group(F, df.design, G))
        fail(Errc::not_an_automorphism_group, "group does not preserve the design");
    }
    LambdaComputation lc =
        compute_lambda_checked(F, G, opt.verify_p_independence, opt.effective_threads());
    TensorStructureReport structure = check_tensor_structure(
        lc.tensor, lc.lines.mats.point_sizes, G.v, G.q);

    ordered_json rep = report_shell("lambda");
    rep["inputs"]["group_file"] = input_entry(group_file);
    if (design_file) rep["inputs"]["design_file"] = input_entry(*design_file);
    rep["output"] = {{"point_classes", lc.lines.mats.point_sizes},
                     {"line_classes", lc.lines.mats.block_sizes},
                     {"tensor", tensor_to_json(lc.tensor)},
                     {"methods_agree", true},
                     {"structure", structure_to_json(structure, "tensor_structure")}};

    std::ostringstream text;
    text << "point classes: " << lc.tensor.m << ", line classes: " << lc.lines.mats.n << "\n";
    text << "Lambda tensor (both methods agree); nonzero entries l r s value:\n";
    for (size_t l = 0; l < lc.tensor.m; ++l)
      for (size_t r = 0; r < lc.tensor.m; ++r)
        for (size_t s = 0; s < lc.tensor.m; ++s)
          if (lc.tensor.at(l, r, s) != 0)
            text << "  " << l << " " << r << " " << s << " " << lc.tensor.at(l, r, s) << "\n";
    text << "structure identities: " << (structure.pass ? "pass" : "FAIL") << "\n";
    finish_report(rep, timer, opt.json, out, text.str());
    return structure.pass ? exit_ok : exit_violation;
  });
}

int cmd_check(const std::string& design_file, const std::string& group_file,
              const GlobalOptions& opt, std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    DesignFile df = load_design_file(design_file);
    const Field& F = df.field;
    const QDesign& d = df.design;
    GroupPresentation G = load_group_file(group_file);
    if (d.params().v != G.v || d.params().q != G.q)
      fail(Errc::ambient_mismatch, "design and group act on different spaces");

    ordered_json rep = report_shell("check");
    rep["inputs"]["design_file"] = input_entry(design_file);
    rep["inputs"]["group_file"] = input_entry(group_file);
    std::ostringstream text;
    bool all_pass = true;

    VerifyReport vr = verify_design(F, d);
    rep["output"]["verify_design"] = {{"pass", vr.ok}, {"lambda", vr.expected}};
    if (!vr.ok) {
      rep["output"]["verify_design"]["witness"] = subspace_to_text(*vr.witness);
      rep["output"]["verify_design"]["witness_count"] = vr.witness_count;
      text << "verify_design: FAIL (witness " << subspace_to_text(*vr.witness) << " lies in "
           << vr.witness_count << " blocks, expected " << vr.expected << ")\n";
      finish_report(rep, timer, opt.json, out, text.str());
      return exit_violation;
    }
    text << "verify_design: pass (every " << d.params().t << "-subspace lies in "
         << d.params().lambda << " blocks)\n";

    if (!is_automorphism_group(F, d, G))
      fail(Errc::not_an_automorphism_group, "group does not preserve the design");
    text << "automorphism group: confirmed\n";

    Decomposition dec = induced_decomposition(F, d, G);
    TDMatrices td = td_matrices(F, d, dec);
    rep["output"]["decomposition"] = {{"m", td.m},
                                      {"n", td.n},
                                      {"point_sizes", td.point_sizes},
                                      {"block_sizes", td.block_sizes}};
    rep["output"]["rho"] = matrix_to_json(td.rho, td.m, td.n);
    rep["output"]["kappa"] = matrix_to_json(td.kappa, td.m, td.n);
    text << "decomposition: m=" << td.m << " point classes, n=" << td.n << " block classes\n";
    text << "rho:\n" << matrix_to_text(td.rho, td.m, td.n);

    LambdaComputation lc =
        compute_lambda_checked(F, G, opt.verify_p_independence, opt.effective_threads());
    if (lc.lines.mats.point_sizes != td.point_sizes)
      fail(Errc::internal, "point classes of the two decompositions diverged");
    std::vector<ConditionReport> systems;
    systems.push_back(check_basic(d.params(), td));
    if (d.params().t >= 2) systems.push_back(check_quadratic(d.params(), td));
    if (d.params().t == 3) systems.push_back(check_cubic(d.params(), td, lc.tensor));
    for (const auto& cr : systems) {
      rep["output"][condition_system_name(cr.system)] = condition_to_json(cr);
      text << condition_system_name(cr.system) << " system: " << (cr.pass ? "pass" : "FAIL")
           << " (" << cr.checked << " equations)\n";
      all_pass = all_pass && cr.pass;
    }

    TensorStructureReport structure =
        check_tensor_structure(lc.tensor, td.point_sizes, G.v, G.q);
    rep["output"]["tensor_structure"] = structure_to_json(structure, "tensor_structure");
    text << "Lambda structure identities: " << (structure.pass ? "pass" : "FAIL") << "\n";
    all_pass = all_pass && structure.pass;

    uint64_t order = group_order(F, G);
    rep["output"]["group_order"] = order;
    bool prime = order >= 2;
    for (uint64_t dd = 2; dd * dd <= order; ++dd)
      if (order % dd == 0) prime = false;
    if (prime) {
      TensorStructureReport bound = check_prime_bound(lc.tensor, td.point_sizes, order);
      TensorStructureReport fixed = check_fixed_point_slices(lc.tensor, td.point_sizes, order);
      rep["output"]["prime_bound"] = structure_to_json(bound, "prime_bound");
      rep["output"]["fixed_point_slices"] = structure_to_json(fixed, "fixed_point_slices");
      text << "prime-order bound (p=" << order << "): " << (bound.pass ? "pass" : "FAIL")
           << "\n";
      text << "fixed-point slices: " << (fixed.pass ? "pass" : "FAIL") << "\n";
      all_pass = all_pass && bound.pass && fixed.pass;
    }

    rep["output"]["pass"] = all_pass;
    text << (all_pass ? "all checks passed\n" : "NECESSARY CONDITIONS VIOLATED\n");
    finish_report(rep, timer, opt.json, out, text.str());
    return all_pass ? exit_ok : exit_violation;
  });
}

int cmd_search(const std::string& problem_file, const GlobalOptions& opt, std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    SearchProblem prob = load_problem_file(problem_file);
    SearchResult res = enumerate_candidates(prob, opt.node_budget);

    if (opt.json) {
      // candidates stream as JSON lines, then a summary object
      for (const auto& c : res.candidates)
        out << ordered_json{{"rho", matrix_to_json(c.rho, c.m, c.n)},
                            {"kappa", matrix_to_json(c.kappa, c.m, c.n)}}
                   .dump()
            << "\n";
      ordered_json rep = report_shell("search");
      rep["inputs"]["problem_file"] = input_entry(problem_file);
      rep["output"] = {{"candidates", res.candidates.size()},
                       {"nodes", res.nodes},
                       {"complete", res.complete},
                       {"infeasible_reason", res.infeasible_reason}};
      rep["elapsed_ms"] = timer.ms();
      out << rep.dump() << "\n";
    } else {
      if (!res.infeasible_reason.empty())
        out << "infeasible: " << res.infeasible_reason << "\n";
      for (size_t i = 0; i < res.candidates.size(); ++i) {
        const auto& c = res.candidates[i];
        out << "candidate " << i << " rho:\n" << matrix_to_text(c.rho, c.m, c.n);
      }
      out << res.candidates.size() << " candidate(s), " << res.nodes << " nodes\n";
    }
    return exit_ok;
  });
}

int cmd_admissible(const std::string& group_file, unsigned k, unsigned t, uint64_t lambda_max,
                   const GlobalOptions& opt, std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Timer timer;
    GroupPresentation G = load_group_file(group_file);
    Field F(G.q);
    OrbitPartition pts = orbits(F, G, all_points(F, G.v));
    if (pts.num_orbits() != 1)
      fail(Errc::invalid_arguments,
           "admissible-lambda analysis needs a point-transitive group (m = 1), got m = " +
               std::to_string(pts.num_orbits()));
    OrbitPartition blocks = orbits(F, G, all_subspaces(F, G.v, k));
    AdmissibleReport ar =
        admissible_lambda(blocks.orbit_sizes, t, G.v, k, G.q, lambda_max);

    ordered_json rep = report_shell("admissible");
    rep["inputs"]["group_file"] = input_entry(group_file);
    rep["output"] = {{"k", k},
                     {"t", t},
                     {"lambda_max", lambda_max},
                     {"block_orbits", orbit_summary(blocks)},
                     {"rho", ar.rho},
                     {"excluded_orbits", ar.excluded_orbits},
                     {"congruence_set", ar.congruence_set},
                     {"dp_set", ar.dp_set}};

    std::ostringstream text;
    text << "block orbits under the group: " << blocks.num_orbits() << "\n";
    std::map<uint64_t, uint64_t> hist;
    for (uint64_t s : blocks.orbit_sizes) hist[s]++;
    text << "orbit size histogram:";
    for (auto [size, count] : hist) text << " " << size << "x" << count;
    text << "\nrho values (blocks of an orbit through a point):";
    std::map<int64_t, uint64_t> rhist;
    for (int64_t r : ar.rho) rhist[r]++;
    for (auto [r, count] : rhist) text << " " << r << "x" << count;
    text << "\ncongruence-admissible lambda:";
    for (uint64_t l : ar.congruence_set) text << " " << l;
    text << "\nsubset-sum-admissible lambda:";
    for (uint64_t l : ar.dp_set) text << " " << l;
    text << "\n";
    finish_report(rep, timer, opt.json, out, text.str());
    return exit_ok;
  });
}

int cmd_trivial_design(unsigned v, unsigned k, unsigned q, unsigned t,
                       const GlobalOptions& opt, std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Field F(q);
    QDesign d = trivial_design(F, v, k, t);
    write_design_file(out, d);
    return exit_ok;
  });
}

GroupPresentation random_cyclic_group(const Field& F, unsigned v, uint64_t max_order,
                                      uint64_t seed) {
  std::mt19937_64 rng(seed ^ (uint64_t(v) << 32) ^ F.q());
  std::uniform_int_distribution<unsigned> coin(0, F.q() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Matrix m(v, v);
    for (auto& x : m.a) x = static_cast<uint8_t>(coin(rng));
    if (!inverse(F, m)) continue;
    // order of the matrix
    Matrix pow = m;
    uint64_t order = 1;
    Matrix id = Matrix::identity(v);
    while (pow != id && order < 100000) {
      pow = mul(F, pow, m);
      ++order;
    }
    if (pow != id) continue;
    // largest divisor of the order in [2, max_order]
    uint64_t best = 1;
    for (uint64_t d = 2; d <= order && d <= max_order; ++d)
      if (order % d == 0) best = d;
    if (best < 2) continue;
    // m^(order/best) generates a cyclic group of order `best`
    Matrix gen = Matrix::identity(v);
    for (uint64_t i = 0; i < order / best; ++i) gen = mul(F, gen, m);
    GroupPresentation G;
    G.v = v;
    G.q = F.q();
    G.generators.push_back({std::move(gen), 0});
    return G;
  }
  fail(Errc::internal, "could not sample a cyclic group of bounded order");
}

int cmd_random_group(unsigned v, unsigned q, uint64_t max_order, const GlobalOptions& opt,
                     std::ostream& out) {
  return run_guarded(opt.json, out, [&]() {
    Field F(q);
    GroupPresentation G = random_cyclic_group(F, v, max_order, opt.seed);
    write_group_file(out, G);
    return exit_ok;
  });
}

}  // namespace cli
}  // namespace qtac
