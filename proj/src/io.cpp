#include "qtac/io.hpp"

#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

namespace qtac {

namespace {

using json = nlohmann::json;

struct LineReader {
  std::istream& in;
  std::string name;
  size_t lineno = 0;

  // Next non-blank content line, comments stripped; returns false at eof.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
      size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      out = line.substr(start);
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse_error, name + ":" + std::to_string(lineno) + ": " + what);
  }
};

uint64_t parse_u64(LineReader& r, const std::string& tok) {
  try {
    size_t pos = 0;
    unsigned long long x = std::stoull(tok, &pos);
    if (pos != tok.size()) r.error("trailing characters in number '" + tok + "'");
    return x;
  } catch (const std::logic_error&) {
    r.error("expected a number, got '" + tok + "'");
  }
}

// header tokens of the form key=value
std::map<std::string, uint64_t> parse_header(LineReader& r, const std::string& line) {
  std::map<std::string, uint64_t> kv;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) r.error("expected key=value, got '" + tok + "'");
    kv[tok.substr(0, eq)] = parse_u64(r, tok.substr(eq + 1));
  }
  return kv;
}

uint64_t need(LineReader& r, const std::map<std::string, uint64_t>& kv, const char* key) {
  auto it = kv.find(key);
  if (it == kv.end()) r.error(std::string("missing header field '") + key + "'");
  return it->second;
}

Matrix parse_matrix_rows(LineReader& r, unsigned rows, unsigned cols, unsigned q,
                         std::string* first_line = nullptr) {
  Matrix m(rows, cols);
  for (unsigned i = 0; i < rows; ++i) {
    std::string line;
    if (first_line && i == 0) {
      line = *first_line;
    } else if (!r.next(line)) {
      r.error("unexpected end of file inside a matrix");
    }
    std::istringstream ss(line);
    for (unsigned j = 0; j < cols; ++j) {
      std::string tok;
      if (!(ss >> tok)) r.error("expected " + std::to_string(cols) + " entries in a row");
      uint64_t x = parse_u64(r, tok);
      if (x >= q) r.error("element index " + tok + " out of range for q=" + std::to_string(q));
      m.at(i, j) = static_cast<uint8_t>(x);
    }
    std::string extra;
    if (ss >> extra) r.error("trailing entries in a matrix row");
  }
  return m;
}

}  // namespace

GroupPresentation parse_group_file(std::istream& in, const std::string& name) {
  LineReader r{in, name};
  std::string line;
  if (!r.next(line)) r.error("empty group file");
  auto kv = parse_header(r, line);
  GroupPresentation G;
  G.q = static_cast<unsigned>(need(r, kv, "q"));
  G.v = static_cast<unsigned>(need(r, kv, "v"));
  if (G.v == 0 || G.v > 16) r.error("v out of the supported range 1..16");

  while (r.next(line)) {
    if (line.rfind("gen", 0) != 0) r.error("expected 'gen', got '" + line + "'");
    SemilinearMap g;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;  // gen
    while (ss >> tok) {
      if (tok.rfind("frob=", 0) == 0)
        g.frob = static_cast<unsigned>(parse_u64(r, tok.substr(5)));
      else
        r.error("unexpected token '" + tok + "' after gen");
    }
    g.mat = parse_matrix_rows(r, G.v, G.v, G.q);
    G.generators.push_back(std::move(g));
  }
  if (G.generators.empty()) r.error("group file has no generators");
  return G;
}

GroupPresentation load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open group file " + path);
  return parse_group_file(in, path);
}

void write_group_file(std::ostream& out, const GroupPresentation& G) {
  out << "q=" << G.q << " v=" << G.v << "\n";
  for (const auto& g : G.generators) {
    out << "gen";
    if (g.frob != 0) out << " frob=" << g.frob;
    out << "\n";
    for (unsigned i = 0; i < g.mat.rows; ++i) {
      for (unsigned j = 0; j < g.mat.cols; ++j) out << (j ? " " : "") << int(g.mat.at(i, j));
      out << "\n";
    }
  }
}

QDesign parse_design_file(const Field& F, std::istream& in, const std::string& name) {
  LineReader r{in, name};
  std::string line;
  if (!r.next(line)) r.error("empty design file");
  auto kv = parse_header(r, line);
  unsigned q = static_cast<unsigned>(need(r, kv, "q"));
  if (q != F.q()) r.error("design file is over GF(" + std::to_string(q) + ")");
  DesignParams p;
  p.q = q;
  p.v = static_cast<unsigned>(need(r, kv, "v"));
  p.k = static_cast<unsigned>(need(r, kv, "k"));
  p.t = static_cast<unsigned>(need(r, kv, "t"));
  p.lambda = need(r, kv, "lambda");
  p.validate();

  std::vector<Subspace> blocks;
  while (r.next(line)) {
    Matrix m = parse_matrix_rows(r, p.k, p.v, q, &line);
    Subspace b = Subspace::row_space(F, std::move(m));
    if (b.dim() != p.k) r.error("block rows are linearly dependent");
    blocks.push_back(std::move(b));
  }
  return QDesign(p, std::move(blocks));
}

DesignFile load_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open design file " + path);
  // Peek the header for q before the real parse.
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream first(text);
  LineReader r{first, path};
  std::string line;
  if (!r.next(line)) r.error("empty design file");
  auto kv = parse_header(r, line);
  Field F(static_cast<unsigned>(need(r, kv, "q")));
  std::istringstream again(text);
  QDesign d = parse_design_file(F, again, path);
  return DesignFile{std::move(F), std::move(d)};
}

void write_design_file(std::ostream& out, const QDesign& d) {
  const auto& p = d.params();
  out << "q=" << p.q << " v=" << p.v << " k=" << p.k << " t=" << p.t << " lambda=" << p.lambda
      << "\n";
  for (const auto& b : d.blocks()) {
    out << "\n";
    for (unsigned i = 0; i < b.dim(); ++i) {
      for (unsigned j = 0; j < b.ambient(); ++j) out << (j ? " " : "") << int(b.basis().at(i, j));
      out << "\n";
    }
  }
}

SearchProblem parse_problem_json(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, name + ": " + e.what());
  }
  try {
    SearchProblem prob;
    const auto& jp = j.at("params");
    prob.params.t = jp.at("t").get<unsigned>();
    prob.params.v = jp.at("v").get<unsigned>();
    prob.params.k = jp.at("k").get<unsigned>();
    prob.params.q = jp.at("q").get<unsigned>();
    prob.params.lambda = jp.at("lambda").get<uint64_t>();
    prob.point_sizes = j.at("point_sizes").get<std::vector<uint64_t>>();
    prob.block_sizes = j.at("block_sizes").get<std::vector<uint64_t>>();
    const auto& jt = j.at("tensor");
    size_t m = jt.at("m").get<size_t>();
    prob.tensor = LambdaTensor(m);
    for (const auto& e : jt.at("entries")) {
      size_t l = e.at(0).get<size_t>(), r = e.at(1).get<size_t>(), s = e.at(2).get<size_t>();
      if (l >= m || r >= m || s >= m)
        fail(Errc::parse_error, name + ": tensor entry index out of range");
      prob.tensor.at(l, r, s) = e.at(3).get<uint64_t>();
    }
    return prob;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, name + ": " + e.what());
  }
}

SearchProblem load_problem_file(const std::string& path) {
  return parse_problem_json(read_file(path), path);
}

std::string problem_to_json(const SearchProblem& prob) {
  json j;
  j["params"] = {{"t", prob.params.t},
                 {"v", prob.params.v},
                 {"k", prob.params.k},
                 {"q", prob.params.q},
                 {"lambda", prob.params.lambda}};
  j["point_sizes"] = prob.point_sizes;
  j["block_sizes"] = prob.block_sizes;
  json entries = json::array();
  for (size_t l = 0; l < prob.tensor.m; ++l)
    for (size_t r = 0; r < prob.tensor.m; ++r)
      for (size_t s = 0; s < prob.tensor.m; ++s)
        if (prob.tensor.at(l, r, s) != 0)
          entries.push_back({l, r, s, prob.tensor.at(l, r, s)});
  j["tensor"] = {{"m", prob.tensor.m}, {"entries", entries}};
  return j.dump(2);
}

std::string subspace_to_text(const Subspace& s) {
  std::ostringstream out;
  for (unsigned i = 0; i < s.dim(); ++i) {
    for (unsigned j = 0; j < s.ambient(); ++j) out << (j ? " " : "") << int(s.basis().at(i, j));
    if (i + 1 < s.dim()) out << "; ";
  }
  if (s.dim() == 0) out << "0";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qtac
