#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reqforge/model.hpp"

namespace reqforge {

/// Transitive reachability over trace links: contains (from, to) iff
/// `to` is reachable from `from` via one or more links.
class TraceClosure {
 public:
  TraceClosure() = default;
  explicit TraceClosure(std::set<std::pair<std::string, std::string>> pairs);

  bool reaches(std::string_view from, std::string_view to) const;

  /// All pairs, sorted by (from, to).
  const std::set<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// Exact reachability over the directed trace edges of a valid model.
TraceClosure trace_closure(const Model& model);

/// Boolean reachability restricted to two levels. Rows and columns are
/// sorted lexicographically by id.
struct TraceabilityMatrix {
  Level from_level = Level::tool;
  Level to_level = Level::case_study;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<bool>> cells;  // cells[r][c]

  bool cell(std::size_t row, std::size_t col) const {
    return cells[row][col];
  }
};

/// Throws std::invalid_argument when from == to; same-level matrices are
/// meaningful only for models validated with relaxed levels, and even
/// then the two axes must differ.
TraceabilityMatrix traceability_matrix(const Model& model, Level from,
                                       Level to);

enum class Strictness { lenient, strict };
enum class GapReason { no_incoming_trace, traced_but_unsatisfied };

std::string_view to_string(Strictness v);
std::string_view to_string(GapReason v);

struct GapEntry {
  std::string requirement;  // case study requirement
  GapReason reason = GapReason::no_incoming_trace;
};

/// Uncovered case study requirements. covered + uncovered equals the
/// total number of case study requirements.
struct GapReport {
  std::vector<GapEntry> entries;  // sorted by requirement id
  std::size_t covered_count = 0;
  std::size_t uncovered_count = 0;
};

/// A case study requirement is covered iff some tool-level requirement
/// reaches it through the trace closure and is satisfied by at least one
/// component. Lenient counts any non-cancelled satisfied tool
/// requirement; strict additionally demands status done. Uncovered
/// entries carry no_incoming_trace when no tool requirement reaches them
/// at all, else traced_but_unsatisfied.
GapReport gap_analysis(const Model& model, Strictness strictness);

struct RoadmapCover {
  std::string id;  // tool requirement
  Release release = Release::baseline;
  Status status = Status::planned;
};

struct RoadmapEntry {
  std::string requirement;  // case study requirement
  /// Every tool requirement reaching it via traces, sorted by id.
  std::vector<RoadmapCover> covering;
  /// Min/max release over the covering tool requirements that are
  /// satisfied by a component and not cancelled; absent when there is
  /// no such requirement.
  std::optional<Release> first_available;
  std::optional<Release> fully_available;
};

/// One entry per case study requirement, sorted by id.
std::vector<RoadmapEntry> roadmap(const Model& model);

struct StatusCounts {
  std::array<std::size_t, 5> by_status{};  // indexed by Status

  std::size_t& operator[](Status s) {
    return by_status[static_cast<std::size_t>(s)];
  }
  std::size_t operator[](Status s) const {
    return by_status[static_cast<std::size_t>(s)];
  }
  std::size_t total() const;
  /// done / (total - cancelled); 0 when the denominator is 0.
  double completion_ratio() const;
};

struct ContainerRollup {
  std::string id;
  Level kind = Level::tool;
  StatusCounts counts;
};

struct LevelRollup {
  Level level = Level::tool;
  StatusCounts counts;
};

struct StatusRollup {
  std::vector<ContainerRollup> per_container;  // declaration order
  std::vector<LevelRollup> per_level;          // tool, framework, case_study
};

StatusRollup status_rollup(const Model& model);

}  // namespace reqforge
