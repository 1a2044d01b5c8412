// End-to-end verification of every counted or certified claim, one result per criterion.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::vector<int> census_degrees{3, 6, 9, 12};
  std::vector<int> oracle_degrees{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<int> node_degrees{3, 6, 9};
  std::vector<int> excess_n{1, 2, 3, 4, 5, 6};
  std::vector<int> hyper_n{1, 2};
  /// When set, Q_d for this degree gets +1 on its constant term (negative control).
  std::optional<int> corrupt_q_degree;
  bool run_negative_control = true;
  std::uint64_t seed = 0x5eed2011;
};

/// Options derived from a user degree list, as used by `verify-all --d ...`.
AcceptanceOptions options_for_degrees(const std::vector<int>& degrees);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_result(const CriterionResult& r);

}  // namespace nodal
