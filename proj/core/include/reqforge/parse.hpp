#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "reqforge/diagnostics.hpp"
#include "reqforge/model.hpp"

namespace reqforge {

/// Result of parsing or importing. The model is present iff no
/// error-severity diagnostic was produced.
struct ParseResult {
  std::optional<Model> model;
  std::vector<Diagnostic> diagnostics;
};

/// Parses one `.req` file. Never throws on bad input: syntax errors are
/// reported as diagnostics with locations and the parser resynchronizes
/// at the next top-level keyword, so one typo yields one diagnostic.
///
/// Error codes:
///   E020 invalid enum literal
///   E021 syntax error
///   E022 unknown keyword
///   E023 duplicate property
///   E024 missing required property
///   E025 malformed identifier
ParseResult parse(std::string_view text, std::string_view file_name);

}  // namespace reqforge
