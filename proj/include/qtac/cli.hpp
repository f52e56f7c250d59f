#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qtac/io.hpp"

namespace qtac {
namespace cli {

inline constexpr const char* version = "0.1.0";

// Exit codes: 0 all checks pass / search completed, 1 a necessary condition
// failed (a nonexistence certificate or a bad design), 2 usage/parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

struct GlobalOptions {
  bool json = false;
  unsigned threads = 0;  // 0 = hardware concurrency
  uint64_t node_budget = 100000000;
  bool verify_p_independence = false;
  uint64_t seed = 1;

  unsigned effective_threads() const;
};

int cmd_gaussian(unsigned v, unsigned r, unsigned q, const GlobalOptions& opt,
                 std::ostream& out);
int cmd_orbits(const std::string& group_file, unsigned k, const GlobalOptions& opt,
               std::ostream& out);
int cmd_lambda(const std::string& group_file, const std::optional<std::string>& design_file,
               const GlobalOptions& opt, std::ostream& out);
int cmd_check(const std::string& design_file, const std::string& group_file,
              const GlobalOptions& opt, std::ostream& out);
int cmd_search(const std::string& problem_file, const GlobalOptions& opt, std::ostream& out);
int cmd_admissible(const std::string& group_file, unsigned k, unsigned t, uint64_t lambda_max,
                   const GlobalOptions& opt, std::ostream& out);
int cmd_trivial_design(unsigned v, unsigned k, unsigned q, unsigned t,
                       const GlobalOptions& opt, std::ostream& out);
int cmd_random_group(unsigned v, unsigned q, uint64_t max_order, const GlobalOptions& opt,
                     std::ostream& out);

// Deterministic corpus helper, also used by the test suites: a cyclic group
// of order in [2, max_order] generated from the seeded RNG.
GroupPresentation random_cyclic_group(const Field& F, unsigned v, uint64_t max_order,
                                      uint64_t seed);

}  // namespace cli
}  // namespace qtac
