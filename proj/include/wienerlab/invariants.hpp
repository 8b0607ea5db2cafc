#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Sum of distances over unordered reachable pairs. Disconnected inputs are
/// fine: unreachable pairs contribute nothing, so the total is the sum over
/// components.
index_t wiener(const Graph& g);

/// Same value through the subtree-size edge decomposition; trees only.
/// Kept as the independent second route for identity checks and fast sweeps.
index_t wiener_tree(const Graph& g);

/// Sum over ordered pairs, unreachable pairs counting zero.
index_t wiener_digraph(const Digraph& d);

/// Total distance from v to the vertices it reaches.
index_t transmission(const Graph& g, int v);

/// Szeged index: per edge ij, the product of the counts of vertices strictly
/// closer to i resp. j (equidistant vertices count for neither side).
index_t szeged(const Graph& g); // DisconnectedError

index_t schultz(const Graph& g); // DisconnectedError
index_t gutman(const Graph& g);  // DisconnectedError

/// Szeged minus Wiener; nonnegative on every connected graph.
index_t eta(const Graph& g); // DisconnectedError

/// Component-order products over pairs and triples (0 when there are fewer
/// components than required).
std::pair<index_t, index_t> n2_n3(const Graph& f);

using Rational = boost::rational<long long>;

/// Geodesic betweenness: B(x) sums sigma_uv(x)/sigma_uv over ordered
/// reachable pairs with u != x != v. Exact rationals.
std::vector<Rational> betweenness(const Digraph& d);

/// Number of ordered pairs (u, v), u != v, with a directed u->v path.
index_t p_pairs(const Digraph& d);

struct ReachCounts {
    std::vector<int> t; // vertices reachable from v, v included
    std::vector<int> s; // vertices that reach v, v included
};
ReachCounts reach_counts(const Digraph& d);

/// Per-arc reach product: for each arc a->b adds s(a) * t(b), the number of
/// ordered pairs whose unique path crosses the arc when the underlying graph
/// is a tree. Equals wiener_digraph on directed trees.
index_t arc_reach_product(const Digraph& d);

} // namespace wienerlab
