#pragma once

// Regenerates the worked examples and checks each against its expected value.

#include <string>
#include <vector>

namespace conelift {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  int threads = 1;
};

/// The example checks, numbered 1 to 12, in order.
std::vector<CheckResult> run_example_checks(const CheckOptions& opts = {});

/// "PASS  3 hexagon lift (0.12 s): detail"
std::string format_check(const CheckResult& r);

}  // namespace conelift
