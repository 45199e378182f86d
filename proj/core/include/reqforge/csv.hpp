#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqforge/diagnostics.hpp"
#include "reqforge/model.hpp"
#include "reqforge/parse.hpp"
#include "reqforge/validate.hpp"

namespace reqforge {

/// Column layout of the requirements tabular view. The header row is
/// mandatory and must match exactly.
inline constexpr std::string_view kRequirementsCsvHeader =
    "id,definition,criticality,release,status,comments";

/// Applies the rows of `csv_text` to the named container of `base`: a row
/// whose id already exists in the container replaces that requirement in
/// place, any other row is appended. The resulting model is revalidated
/// and the merged diagnostics are returned; imported requirements carry
/// spans pointing at their CSV row so findings report row numbers.
///
/// Error codes:
///   E030 missing or misordered header row
///   E031 invalid enum cell
///   E032 id collision outside the target container
///   E033 unknown container
///   E034 wrong number of cells in a row
///   E035 malformed identifier cell
ParseResult import_requirements_csv(std::string_view csv_text,
                                    std::string_view container_id,
                                    const Model& base,
                                    std::string_view csv_name = "csv",
                                    ValidateOptions options = {});

struct CsvExportResult {
  std::optional<std::string> text;
  std::vector<Diagnostic> diagnostics;
};

/// Renders the container's requirements as CSV: header plus one row per
/// requirement in container order. Cells are quoted only when they
/// contain a comma, quote or newline, so export∘import∘export is a fixed
/// point. Unknown container -> E033.
CsvExportResult export_requirements_csv(const Model& model,
                                        std::string_view container_id);

}  // namespace reqforge
