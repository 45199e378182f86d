#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reqforge {

/// Position in a source file. Lines and columns are 1-based byte counts.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { error, warning };

/// A parse or validation finding. The code identifies the rule that fired
/// and is stable; messages may be reworded between releases.
struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string subject;  // id of the offending element, if any
  std::optional<SourceSpan> location;
};

Diagnostic make_error(std::string code, std::string message,
                      std::string subject = {},
                      std::optional<SourceSpan> location = std::nullopt);

Diagnostic make_warning(std::string code, std::string message,
                        std::string subject = {},
                        std::optional<SourceSpan> location = std::nullopt);

/// Sorts by (file, line, code); diagnostics without a location come first.
/// Ties broken on column, subject and message so the order is total.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(std::span<const Diagnostic> diagnostics);

/// One-line rendering: "file:line:col: CODE message" (location parts
/// omitted when absent).
std::string to_text(const Diagnostic& d);

}  // namespace reqforge
