#include "wienerlab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace wienerlab {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

void set_bit(std::vector<uint64_t>& bits, int words, int row, int col) {
    bits[static_cast<size_t>(row) * words + col / 64] |= uint64_t{1} << (col % 64);
}

} // namespace

Graph Graph::empty(int n) {
    if (n < 0) throw BadParamsError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.words_ = words_for(n);
    g.adj_.assign(static_cast<size_t>(n) * g.words_, 0);
    g.degrees_.assign(n, 0);
    return g;
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    Graph g = empty(n);
    for (auto& [u, v] : edges) {
        if (u == v) throw BadParamsError("self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw BadParamsError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        set_bit(g.adj_, g.words_, u, v);
        set_bit(g.adj_, g.words_, v, u);
        ++g.degrees_[u];
        ++g.degrees_[v];
    }
    g.edges_ = std::move(edges);
    return g;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degrees_[v]);
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    assert(u != v && !has_edge(u, v));
    Graph g = *this;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), Edge{u, v});
    g.edges_.insert(it, Edge{u, v});
    set_bit(g.adj_, g.words_, u, v);
    set_bit(g.adj_, g.words_, v, u);
    ++g.degrees_[u];
    ++g.degrees_[v];
    return g;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(n_, -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for_each_neighbor(v, [&](int u) {
                if (label[u] == -1) {
                    label[u] = next;
                    stack.push_back(u);
                }
            });
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

bool Graph::is_tree() const {
    return n_ >= 1 && size() == n_ - 1 && is_connected();
}

bool Graph::is_forest() const {
    return size() == n_ - component_count();
}

int Graph::cyclomatic_number() const {
    return size() - n_ + component_count();
}

bool Graph::bipartition(std::vector<int>& color) const {
    color.assign(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool ok = true;
            for_each_neighbor(v, [&](int u) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

Graph Graph::induced_subgraph(std::span<const int> keep) const {
    std::vector<int> map(n_, -1);
    int k = 0;
    for (int v : keep) map[v] = k++;
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (map[u] != -1 && map[v] != -1) es.push_back({map[u], map[v]});
    return from_edges(k, std::move(es));
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (auto e : edges_)
        if (e != Edge{u, v}) es.push_back(e);
    return from_edges(n_, std::move(es));
}

Digraph Digraph::empty(int n) {
    if (n < 0) throw BadParamsError("vertex count must be nonnegative");
    Digraph d;
    d.n_ = n;
    d.words_ = words_for(n);
    d.out_.assign(static_cast<size_t>(n) * d.words_, 0);
    d.in_.assign(static_cast<size_t>(n) * d.words_, 0);
    d.out_deg_.assign(n, 0);
    d.in_deg_.assign(n, 0);
    return d;
}

Digraph Digraph::from_arcs(int n, std::vector<Edge> arcs) {
    Digraph d = empty(n);
    for (auto [u, v] : arcs) {
        if (u == v) throw BadParamsError("self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw BadParamsError("arc endpoint out of range");
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (auto [u, v] : arcs) {
        set_bit(d.out_, d.words_, u, v);
        set_bit(d.in_, d.words_, v, u);
        ++d.out_deg_[u];
        ++d.in_deg_[v];
    }
    d.arcs_ = std::move(arcs);
    return d;
}

Digraph Digraph::orientation(const Graph& g, uint64_t mask) {
    std::vector<Edge> arcs;
    arcs.reserve(g.size());
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        auto [u, v] = es[i];
        if (mask >> i & 1)
            arcs.push_back({v, u});
        else
            arcs.push_back({u, v});
    }
    return from_arcs(g.order(), std::move(arcs));
}

namespace {

// Frontier-bitset BFS over a row-major adjacency block.
void bitset_bfs(const uint64_t* adj, int n, int words, int source, std::vector<int32_t>& dist) {
    dist.assign(n, DistMatrix::kUnreachable);
    if (n == 0) return;
    std::vector<uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    visited[source / 64] |= uint64_t{1} << (source % 64);
    frontier = visited;
    dist[source] = 0;
    int32_t level = 0;
    bool more = true;
    while (more) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = frontier[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const uint64_t* row = adj + static_cast<size_t>(w * 64 + b) * words;
                for (int x = 0; x < words; ++x) next[x] |= row[x];
            }
        }
        more = false;
        for (int x = 0; x < words; ++x) {
            next[x] &= ~visited[x];
            visited[x] |= next[x];
            if (next[x]) more = true;
        }
        if (!more) break;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = next[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                dist[w * 64 + b] = level;
            }
        }
        frontier.swap(next);
    }
}

} // namespace

void bfs_fill(const Graph& g, int source, std::vector<int32_t>& dist) {
    bitset_bfs(g.adjacency(0).data(), g.order(), g.words(), source, dist);
}

void bfs_fill(const Digraph& g, int source, std::vector<int32_t>& dist) {
    bitset_bfs(g.out_adjacency(0).data(), g.order(), g.words(), source, dist);
}

DistMatrix bfs_apsp(const Graph& g) {
    int n = g.order();
    DistMatrix m(n, true);
    std::vector<int32_t> row;
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, row);
        for (int v = 0; v < n; ++v) m.set(s, v, row[v]);
    }
    return m;
}

DistMatrix bfs_apsp(const Digraph& g) {
    int n = g.order();
    DistMatrix m(n, false);
    std::vector<int32_t> row;
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, row);
        for (int v = 0; v < n; ++v) m.set(s, v, row[v]);
    }
    return m;
}

int32_t DistMatrix::max_finite() const {
    int32_t best = 0;
    for (int32_t d : d_)
        if (d != kUnreachable) best = std::max(best, d);
    return best;
}

bool DistMatrix::all_reachable() const {
    for (int32_t d : d_)
        if (d == kUnreachable) return false;
    return true;
}

bool Digraph::is_strongly_connected() const {
    if (n_ <= 1) return true;
    std::vector<int32_t> dist;
    bfs_fill(*this, 0, dist);
    for (int v = 0; v < n_; ++v)
        if (dist[v] == DistMatrix::kUnreachable) return false;
    // Reverse reachability from 0 via in-adjacency.
    std::vector<uint64_t> visited(words_, 0), frontier(words_, 0), next(words_, 0);
    visited[0] = 1;
    frontier[0] = 1;
    bool more = true;
    while (more) {
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = frontier[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                auto row = in_adjacency(w * 64 + b);
                for (int x = 0; x < words_; ++x) next[x] |= row[x];
            }
        }
        more = false;
        for (int x = 0; x < words_; ++x) {
            next[x] &= ~visited[x];
            visited[x] |= next[x];
            if (next[x]) more = true;
        }
        frontier.swap(next);
    }
    int count = 0;
    for (int x = 0; x < words_; ++x) count += __builtin_popcountll(visited[x]);
    return count == n_;
}

bool Digraph::is_acyclic() const {
    std::vector<int> indeg(in_deg_);
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        auto row = out_adjacency(v);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                if (--indeg[w * 64 + b] == 0) queue.push_back(w * 64 + b);
            }
        }
    }
    return seen == n_;
}

} // namespace wienerlab
