#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqforge/diagnostics.hpp"
#include "reqforge/model.hpp"

namespace reqforge {

struct DotNode {
  std::string id;
  std::string label;
  std::string shape;                 // note | component | box3d | ellipse
  std::vector<std::string> cluster;  // enclosing cluster ids, outermost first
};

struct DotEdge {
  std::string from;
  std::string to;
  std::string style;  // solid | dashed
};

/// A deterministic DOT graph: nodes are emitted sorted by id within
/// their cluster, edges sorted by (from, to), clusters by id.
struct DotGraph {
  std::string name;
  std::vector<DotNode> nodes;
  std::vector<DotEdge> edges;
  std::map<std::string, std::string> cluster_labels;

  std::string to_dot() const;
};

struct DiagramResult {
  std::optional<DotGraph> graph;
  std::vector<Diagnostic> diagnostics;
};

/// Requirement trace diagram for one component: the component, the
/// requirements it satisfies, and everything reachable from those via
/// trace links. Satisfy edges are dashed, trace edges solid.
/// Unknown component -> E040.
DiagramResult requirement_diagram(const Model& model,
                                  std::string_view component_id);

/// Component/interface diagram for one package: its components with
/// sub-components clustered inside their parents, plus every interface
/// the package declares or its components reference. Provides edges are
/// solid, consumes edges dashed. Unknown package -> E041.
DiagramResult component_diagram(const Model& model,
                                std::string_view package_id);

/// Deployment diagram: platform nodes (box3d) and the components
/// deployed on them.
DotGraph deployment_diagram(const Model& model);

/// File name for a generated diagram: "<kind>_<root-id>.dot".
std::string diagram_file_name(std::string_view kind, std::string_view root_id);

/// Root id used for the deployment diagram: the model name with every
/// character outside [A-Za-z0-9_-] replaced by '_', or "model" when empty.
std::string deployment_root_id(const Model& model);

}  // namespace reqforge
