// JSON serialization of censuses and node reports.
//
// Counts are written as exact integers. Residuals are rounded to six
// significant digits so reports are byte-stable across runs.

#pragma once

#include <vector>

#include "json.hpp"

#include "nodal/critical.hpp"
#include "nodal/surfaces.hpp"

namespace nodal {

double round_significant(double x, int digits = 6);

nlohmann::json census_to_json(const FamilyCensus& census);
nlohmann::json singular_report_to_json(int d, const std::vector<SingularPoint>& points);
nlohmann::json hyper_report_to_json(int n, const std::vector<HyperSingularPoint>* points);
nlohmann::json real_report_to_json(int d, const std::vector<RealNode>& nodes);

}  // namespace nodal
