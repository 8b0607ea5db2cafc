#pragma once

#include <optional>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct EccentricityReport {
    std::vector<int32_t> ecc;
    int32_t diameter = 0;
    int32_t radius = 0;
};

/// Per-vertex eccentricities plus diameter and radius.
/// Throws DisconnectedError when g is not connected.
EccentricityReport eccentricities(const Graph& g);

struct Block {
    std::vector<int> vertices;
    bool complete = false;
};

/// Biconnected components (bridges appear as 2-vertex blocks). The blocks
/// partition the edge set. Throws DisconnectedError.
std::vector<Block> blocks(const Graph& g);

bool all_blocks_complete(const Graph& g);

/// Exact (vertex, edge) connectivity by brute-force cut search; n <= 16.
std::pair<int, int> connectivity(const Graph& g);

/// Triangle and K4 counts.
std::pair<long long, long long> clique_counts(const Graph& g);

/// Maximum matching size by subset dynamic programming; n <= 20.
int matching_number(const Graph& g);

/// True when the vertex set splits into paths of exactly r vertices.
/// Trees use a linear leaf-up pass; P_2 reduces to a perfect matching;
/// other graphs fall back to exhaustive partition search (n <= 12).
bool has_pr_factor(const Graph& g, int r);

} // namespace wienerlab
