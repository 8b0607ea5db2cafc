#pragma once

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Line graph: one vertex per edge of g (in sorted edge order), adjacent when
/// the edges share an endpoint. The edgeless input yields the empty graph.
Graph line_graph(const Graph& g);

/// L^0 = g, L^i = line_graph applied i times.
Graph iterated_line_graph(const Graph& g, int i);

} // namespace wienerlab
