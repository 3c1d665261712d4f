#pragma once

// Named verification suites shared by the command line, the python module and the
// acceptance runner.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/report.hpp"

namespace qweyl {

enum class SuiteId {
  WeylRelations,
  AbRho,
  ActionTable,
  ModuleAlgebra,
  Pointwise,
  Model2N1,
  Invariance,
  Cyclicity,
  Obstruction,
};

const std::vector<SuiteId>& all_suites();
std::string suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);

struct SuiteOptions {
  int n = 1;
  double phi = 1.0471975511965976;
  double tolerance = 1e-9;
  /// Unset means the suite default (10 states, 20 operators, 20 triples).
  std::optional<int> samples;
  std::uint64_t seed = 7;
  double c = 1.0;
};

/// Runs one suite at opt.n and opt.phi. model2-n1 and obstruction ignore n.
Report run_suite(SuiteId id, const SuiteOptions& opt);
/// Every suite at the given n values, concurrently; the merged report is in a fixed order.
Report run_all(const SuiteOptions& opt, const std::vector<int>& ns = {1, 2});

}  // namespace qweyl
