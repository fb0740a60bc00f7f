#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzygy/analysis.hpp"
#include "syzygy/explorer.hpp"
#include "syzygy/io.hpp"

namespace syzygy {

inline constexpr const char* kReportSchemaVersion = "1";

struct ExpectationCheck {
  bool T_matches = true;
  std::optional<bool> t_matches;  // present when the file gave t
  std::vector<std::string> mismatches;
  bool ok() const { return T_matches && t_matches.value_or(true); }
};

// Compares against T_1..T_s (and t_1..t_s).
ExpectationCheck check_expectation(const Expectation& expect, const BettiTable& table);

// JSON document, schema version "1" (see docs/FORMAT.md).
std::string emit_report(const AnalysisReport& report,
                        const std::optional<Expectation>& expect = std::nullopt);

std::string emit_explorer_report(const SearchSummary& summary);

}  // namespace syzygy
