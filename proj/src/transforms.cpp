#include "wienerlab/transforms.hpp"

#include <algorithm>

namespace wienerlab {

Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    int m = static_cast<int>(es.size());
    // Two distinct edges of a simple graph share at most one endpoint, so
    // grouping incident edges per vertex emits every line-graph edge once.
    std::vector<std::vector<int>> incident(g.order());
    for (int i = 0; i < m; ++i) {
        incident[es[i].first].push_back(i);
        incident[es[i].second].push_back(i);
    }
    std::vector<Edge> out;
    for (const auto& ids : incident)
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b)
                out.push_back({ids[a], ids[b]});
    return Graph::from_edges(m, std::move(out));
}

Graph iterated_line_graph(const Graph& g, int i) {
    if (i < 0) throw BadParamsError("iteration count must be nonnegative");
    Graph cur = g;
    for (int k = 0; k < i; ++k) cur = line_graph(cur);
    return cur;
}

} // namespace wienerlab
