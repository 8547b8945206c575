// Reproduction suites for the obstruction results; shared by the CLI and the
// acceptance binary.
#pragma once

#include <string>
#include <vector>

#include "qcc/catalog.hpp"
#include "qcc/obstruction.hpp"

namespace qcc {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
  std::string format() const;  // "PASS name: detail"
};

struct ReproduceContext {
  KnotTable knots;
  TangleTable tangles;
  ScanOptions options;
  static ReproduceContext load(const std::string& data_dir = "");
};

std::vector<std::string> reproduce_suites();  // prop2, prop3, examples5
std::vector<CheckLine> reproduce_prop2(const ReproduceContext& ctx);
std::vector<CheckLine> reproduce_prop3(const ReproduceContext& ctx);
std::vector<CheckLine> reproduce_examples5(const ReproduceContext& ctx);
std::vector<CheckLine> reproduce(const std::string& suite, const ReproduceContext& ctx);

// The printed value for the R5 union of T(7_13) and T(7_18), which the direct
// computation does not confirm; exposed so callers can flag the comparison.
std::string r5_union_printed_value();

}  // namespace qcc
