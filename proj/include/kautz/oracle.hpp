#pragma once

#include "kautz/graph.hpp"
#include "kautz/layer_table.hpp"

namespace kautz {

/// Independent check of the congestion engine: BFS from every source of the
/// explicit graph, walk each BFS-tree path back, and record every position at
/// which the path crosses `edge`. Pairs u = v are skipped.
LayerTable oracle_congestion(const ExplicitDigraph& graph, const KautzEdge& edge);

}  // namespace kautz
