#pragma once

// The acceptance suite shared by `icmc selftest` and the acceptance test
// binary. Each check returns one line; extra lines re-run a failing check
// against the exact edge-gadget/connector count.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace icmc {

struct AcceptanceLine {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  // a corrected variant, not one of the required criteria
  bool extra = false;
};

struct AcceptanceOptions {
  // added to f(G,k) wherever the suite uses it; nonzero only for mutation runs
  std::int64_t f_offset = 0;
};

std::vector<AcceptanceLine> run_acceptance(const AcceptanceOptions& options = {},
                                           const std::function<void(const AcceptanceLine&)>& on_line = {});

/// "PASS name (1.23s) detail"
std::string format_line(const AcceptanceLine& line);

/// {"checks":[...],"passed":bool}; only required lines decide "passed".
std::string acceptance_json(const std::vector<AcceptanceLine>& lines);

bool all_required_passed(const std::vector<AcceptanceLine>& lines);

}  // namespace icmc
