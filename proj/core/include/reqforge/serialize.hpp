#pragma once

#include <string>

#include "reqforge/model.hpp"

namespace reqforge {

/// Renders the canonical textual form: fixed keyword casing, 2-space
/// indentation, elements in declaration order, links emitted last sorted
/// by (source, target). parse(serialize(m)) is structurally equal to m,
/// and serialize is a fixed point on its own output.
std::string serialize(const Model& model);

}  // namespace reqforge
