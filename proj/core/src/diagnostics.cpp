#include "reqforge/diagnostics.hpp"

#include <algorithm>
#include <tuple>

namespace reqforge {

Diagnostic make_error(std::string code, std::string message,
                      std::string subject,
                      std::optional<SourceSpan> location) {
  return Diagnostic{Severity::error, std::move(code), std::move(message),
                    std::move(subject), std::move(location)};
}

Diagnostic make_warning(std::string code, std::string message,
                        std::string subject,
                        std::optional<SourceSpan> location) {
  return Diagnostic{Severity::warning, std::move(code), std::move(message),
                    std::move(subject), std::move(location)};
}

namespace {

auto sort_key(const Diagnostic& d) {
  static const std::string empty;
  const bool located = d.location.has_value();
  const std::string& file = located ? d.location->file : empty;
  const int line = located ? d.location->line : 0;
  const int column = located ? d.location->column : 0;
  return std::tie(file, line, d.code, column, d.subject, d.message);
}

}  // namespace

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return sort_key(a) < sort_key(b);
                   });
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::error;
                     });
}

std::string to_text(const Diagnostic& d) {
  std::string out;
  if (d.location) {
    out += d.location->file;
    out += ':';
    out += std::to_string(d.location->line);
    out += ':';
    out += std::to_string(d.location->column);
    out += ": ";
  }
  out += d.code;
  out += ' ';
  out += d.message;
  return out;
}

}  // namespace reqforge
