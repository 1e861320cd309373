#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pldg/udg.hpp"

namespace pldg {

// Static SVG rendering of one instance: nodes, kept edges solid,
// removed local-triangulation edges dashed, and a scale bar of one
// radio range.
std::string render_svg(const PointSet& ps,
                       const std::vector<std::pair<int, int>>& kept_edges,
                       const std::vector<std::pair<int, int>>& removed_edges);

} // namespace pldg
