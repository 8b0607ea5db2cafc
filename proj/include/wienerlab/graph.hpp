#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wienerlab/common.hpp"

namespace wienerlab {

using Edge = std::pair<int, int>; // undirected: u < v; arc: u -> v

/// Simple undirected graph on vertices 0..n-1.
///
/// Stores the sorted, deduplicated edge list and per-vertex neighbor bitsets;
/// the two views always describe the same edge set. Values are immutable after
/// construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    static Graph empty(int n);
    /// Builds from an edge list. Endpoints may be in either order; duplicates
    /// are merged. Throws BadParamsError on self-loops or out-of-range ids.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        return (adj_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int min_degree() const;
    int max_degree() const;

    std::span<const uint64_t> adjacency(int v) const {
        return {adj_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    int words() const { return words_; }

    std::vector<int> neighbors(int v) const;

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const uint64_t* row = adj_.data() + static_cast<size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                f(w * 64 + b);
            }
        }
    }

    /// Copy with one extra edge; the edge must not already exist.
    Graph with_edge(int u, int v) const;

    std::vector<int> component_labels() const; // -1 never appears; labels 0..k-1
    int component_count() const;
    bool is_connected() const; // true for n <= 1
    bool is_tree() const;
    bool is_forest() const;
    /// Cyclomatic number m - n + c (c = number of components).
    int cyclomatic_number() const;
    /// Proper 2-coloring if one exists (color per vertex, 0/1 per component).
    bool bipartition(std::vector<int>& color) const;

    Graph induced_subgraph(std::span<const int> keep) const;
    Graph without_vertex(int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint64_t> adj_;
    std::vector<int> degrees_;
};

/// Directed graph with out- and in-adjacency bitsets.
class Digraph {
public:
    Digraph() = default;

    static Digraph empty(int n);
    /// Throws BadParamsError on self-loops, duplicates are merged.
    static Digraph from_arcs(int n, std::vector<Edge> arcs);
    /// Orientation of g: bit i of mask clear = edge i kept as (u -> v) with
    /// u < v as stored in g.edges(), set = reversed.
    static Digraph orientation(const Graph& g, uint64_t mask);

    int order() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Edge>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const {
        return (out_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    int out_degree(int v) const { return out_deg_[v]; }
    int in_degree(int v) const { return in_deg_[v]; }

    std::span<const uint64_t> out_adjacency(int v) const {
        return {out_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    std::span<const uint64_t> in_adjacency(int v) const {
        return {in_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    int words() const { return words_; }

    bool is_strongly_connected() const;
    bool is_acyclic() const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<Edge> arcs_;
    std::vector<uint64_t> out_, in_;
    std::vector<int> out_deg_, in_deg_;
};

/// All-pairs distances with an explicit unreachable sentinel.
class DistMatrix {
public:
    static constexpr int32_t kUnreachable = -1;

    DistMatrix() = default;
    DistMatrix(int n, bool symmetric)
        : n_(n), symmetric_(symmetric), d_(static_cast<size_t>(n) * n, kUnreachable) {}

    int order() const { return n_; }
    bool symmetric() const { return symmetric_; }

    int32_t at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    void set(int u, int v, int32_t d) { d_[static_cast<size_t>(u) * n_ + v] = d; }

    /// Max finite entry; 0 for n <= 1.
    int32_t max_finite() const;
    bool all_reachable() const;

private:
    int n_ = 0;
    bool symmetric_ = true;
    std::vector<int32_t> d_;
};

/// BFS from one source; dist must have size n and gets kUnreachable defaults.
void bfs_fill(const Graph& g, int source, std::vector<int32_t>& dist);
void bfs_fill(const Digraph& g, int source, std::vector<int32_t>& dist);

DistMatrix bfs_apsp(const Graph& g);
DistMatrix bfs_apsp(const Digraph& g);

} // namespace wienerlab
