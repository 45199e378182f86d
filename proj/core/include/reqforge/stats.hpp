#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reqforge/model.hpp"

namespace reqforge {

struct ContainerStats {
  std::string id;
  Level kind = Level::tool;
  std::size_t requirements = 0;
};

struct PackageStats {
  std::string id;
  std::size_t components = 0;  // including sub-components
  std::size_t interfaces = 0;
  std::size_t nodes = 0;
};

/// Element counts. Architecture elements are packages, components
/// (including sub-components), interfaces and nodes; containers are
/// grouping elements and are counted in neither total.
struct ModelStats {
  std::size_t requirement_count = 0;
  std::size_t architecture_element_count = 0;
  std::size_t total_element_count = 0;
  std::vector<ContainerStats> per_container;  // declaration order
  std::vector<PackageStats> per_package;      // declaration order
};

ModelStats stats(const Model& model);

}  // namespace reqforge
