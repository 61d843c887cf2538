#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "tdim/graph.hpp"
#include "tdim/irreducible.hpp"
#include "tdim/resolve.hpp"
#include "tdim/threshold.hpp"

namespace tdim {

inline constexpr int kReportSchema = 1;

struct Report {
  Graph graph;
  std::optional<BetaResult> beta;
  std::optional<TauBounds> tau;
  std::optional<VerdictStatus> verdict;
  std::string rule;
  double wall_time_ms = 0;
};

Report report_from(const Graph &g, const IrreducibilityVerdict &v);

nlohmann::json certificate_json(const Certificate &c);
nlohmann::json to_json(const Report &r);

/// Fixed-width two-column table, one field per line.
std::string to_table(const Report &r);

/// Witness edges and basis from a JSON report, re-checked against g.
/// Returns the verified tau upper bound or nullopt when the witness fails.
std::optional<int> recheck_report(const Graph &g, const nlohmann::json &report);

} // namespace tdim
