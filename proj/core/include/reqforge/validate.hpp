#pragma once

#include <vector>

#include "reqforge/diagnostics.hpp"
#include "reqforge/model.hpp"

namespace reqforge {

struct ValidateOptions {
  /// When set, trace links may stay on one level (or point anywhere), but
  /// the trace graph must be acyclic. By default the source level must
  /// strictly precede the target level (tool < framework < case_study).
  bool relaxed_levels = false;
};

/// Checks every structural invariant of the metamodel and returns one
/// diagnostic per violation, sorted by (file, line, code). An empty
/// result means the model is valid. Violations are data, not failures.
///
/// Error codes:
///   E001 duplicate identifier
///   E002 unresolved reference
///   E003 reference to an element of the wrong kind
///   E004 empty requirement definition
///   E005 malformed identifier
///   E010 trace link violates the level order (default mode)
///   E011 trace cycle (relaxed mode)
///   E012 duplicate trace link
///   E013 duplicate satisfy link
///   E014 component containment cycle
/// Warning codes:
///   W001 empty container or package
std::vector<Diagnostic> validate(const Model& model,
                                 ValidateOptions options = {});

}  // namespace reqforge
