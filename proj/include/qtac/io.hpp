#pragma once

#include <iosfwd>
#include <string>

#include "qtac/search.hpp"

namespace qtac {

// Group file: a header line `q=<q> v=<v>`, then one `gen` (optionally
// `gen frob=<f>`) per generator followed by v lines of v element indices.
// Blank lines and `#` comments are ignored. Parse errors carry line numbers.
GroupPresentation parse_group_file(std::istream& in, const std::string& name = "<stream>");
GroupPresentation load_group_file(const std::string& path);
void write_group_file(std::ostream& out, const GroupPresentation& G);

// Design file: a header line `q=<q> v=<v> k=<k> t=<t> lambda=<l>`, then one
// block per paragraph as k rows of v element indices (any basis; blocks are
// canonicalized on load). Repeated paragraphs make a multiset.
QDesign parse_design_file(const Field& F, std::istream& in,
                          const std::string& name = "<stream>");
struct DesignFile {
  Field field;
  QDesign design;
};
DesignFile load_design_file(const std::string& path);
void write_design_file(std::ostream& out, const QDesign& d);

// Search problem JSON: {"params": {t,v,k,q,lambda}, "point_sizes": [...],
// "block_sizes": [...], "tensor": {"m": m, "entries": [[l,r,s,value], ...]}}
// with 0-based class indices and only nonzero tensor entries listed.
SearchProblem parse_problem_json(const std::string& text, const std::string& name = "<json>");
SearchProblem load_problem_file(const std::string& path);
std::string problem_to_json(const SearchProblem& prob);

std::string subspace_to_text(const Subspace& s);

std::string read_file(const std::string& path);

}  // namespace qtac
