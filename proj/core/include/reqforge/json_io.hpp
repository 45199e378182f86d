#pragma once

#include <span>
#include <string>

#include "reqforge/analysis.hpp"
#include "reqforge/diagnostics.hpp"
#include "reqforge/stats.hpp"

namespace reqforge {

/// JSON renderings of the analysis results and diagnostics, for
/// downstream tooling. Key order is fixed and output is byte-stable;
/// the exact shapes are documented in docs/formats.md.
std::string diagnostics_to_json(std::span<const Diagnostic> diagnostics);
std::string stats_to_json(const ModelStats& s);
std::string closure_to_json(const TraceClosure& c);
std::string matrix_to_json(const TraceabilityMatrix& m);
std::string gap_report_to_json(const GapReport& report, Strictness strictness);
std::string roadmap_to_json(std::span<const RoadmapEntry> entries);
std::string rollup_to_json(const StatusRollup& rollup);

}  // namespace reqforge
