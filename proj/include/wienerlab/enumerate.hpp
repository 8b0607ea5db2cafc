#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/parallel.hpp"

namespace wienerlab {

/// Predicates applied to enumeration streams. All predicates are pure; the
/// edge-count and regularity bounds are also used for sound pruning inside
/// the generator.
struct EnumFilter {
    std::optional<int> m;
    std::optional<int> min_m, max_m;
    std::optional<int> regular;
    std::optional<int> diameter;
    std::optional<int> radius;
    std::optional<int> pr_factor;
    std::optional<int> lambda; // cyclomatic number, connected classes
    std::optional<std::pair<int, int>> bipartition;
    bool eulerian = false; // connected, all degrees even
    bool all_odd = false;
    bool perfect_matching = false;

    bool matches(const Graph& g) const;
    static EnumFilter parse(const std::string& text);
    std::string text() const;
};

// ---- Trees ---------------------------------------------------------------

/// Streams every isomorphism class of free trees on n vertices exactly once
/// (canonical level sequences, centroid-rooted). 1 <= n <= 22.
void for_each_tree(int n, const std::function<void(const Graph&)>& fn);

/// Materialized stream; meant for n where the full list is small.
std::vector<Graph> trees(int n);

/// Chunked parallel sweep; `map` runs on worker threads, `reduce` must be a
/// commutative monoid so the result is schedule-independent.
template <class T, class Map, class Reduce>
T tree_map_reduce(int n, T init, Map&& map, Reduce&& reduce);

long long tree_count(int n);

// ---- General graphs ------------------------------------------------------

struct GraphClassParams {
    int n = 0;
    int max_m = -1;        // default C(n,2)
    int max_degree = -1;   // default n-1
    int exact_regular = -1; // when >= 0: connected r-regular targets only
    bool operator==(const GraphClassParams&) const = default;
    std::string key() const;
};

/// Isomorph-free classes within the caps, all edge counts, disconnected
/// included (unless exact_regular is set). Deterministic order, cached
/// in-process; spooled to $WIENERLAB_CACHE when set.
std::shared_ptr<const std::vector<Graph>> graph_classes(const GraphClassParams& params);

/// Connected classes on n vertices matching the filter.
std::vector<Graph> connected_graphs(int n, const EnumFilter& filter = {});

/// Connected r-regular classes; n*r even. Caps: r=3 up to n=14, r=4 up to
/// n=12, r>=5 up to n=10.
std::vector<Graph> regular_graphs(int n, int r);

// ---- Orientations --------------------------------------------------------

enum class OrientMode { All, Strong, Acyclic };

/// All 2^m orientations (each edge one way); m <= 24.
void for_each_orientation(const Graph& g, OrientMode mode,
                          const std::function<void(const Digraph&, uint64_t mask)>& fn);

// ---- Trees of diameter <= 4 ----------------------------------------------

/// A diameter <= 4 tree: a center with `children` neighbors, the i-th child
/// carrying branch_leaves[i] pendant leaves. branch_leaves is positive and
/// non-increasing; children >= number of branches (extra children are bare
/// leaves of the center). Degenerate cases: the one- and two-vertex trees.
struct Diam4Class {
    int children = 0;               // c >= 0
    std::vector<int> branch_leaves; // positive, non-increasing, size <= children

    Graph build() const;
    index_t wiener_value() const;
    int order() const;
};

/// Closed-form Wiener value for (c, M = sum m_i, S2 = sum m_i^2).
index_t diam4_wiener(long long c, long long m_total, long long sq_total);

/// Streams every class with W <= limit exactly once (values not sorted).
void for_each_diam4_upto(index_t limit, const std::function<void(const Diam4Class&)>& fn);

// --------------------------------------------------------------------------

namespace detail {
void tree_level_sequences(int n, const std::function<void(const std::vector<int>&)>& fn);
Graph tree_from_levels(const std::vector<int>& levels);
} // namespace detail

template <class T, class Map, class Reduce>
T tree_map_reduce(int n, T init, Map&& map, Reduce&& reduce) {
    // Producer fills a chunk of trees, workers fold it, repeat. With a
    // commutative reduce the outcome is identical to the serial pass.
    constexpr size_t kChunk = 2048;
    const T identity = init;
    std::vector<Graph> chunk;
    chunk.reserve(kChunk);
    T acc = std::move(init);
    auto flush = [&]() {
        if (chunk.empty()) return;
        acc = reduce(std::move(acc),
                     par::parallel_map_reduce(
                         static_cast<int64_t>(chunk.size()), identity,
                         [&](int64_t i) { return map(chunk[i]); }, reduce));
        chunk.clear();
    };
    detail::tree_level_sequences(n, [&](const std::vector<int>& levels) {
        chunk.push_back(detail::tree_from_levels(levels));
        if (chunk.size() >= kChunk) flush();
    });
    flush();
    return acc;
}

} // namespace wienerlab
