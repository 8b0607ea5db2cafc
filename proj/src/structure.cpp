#include "wienerlab/structure.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>

namespace wienerlab {

std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    std::vector<int32_t> dist(n);
    std::vector<int> parent(n), queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            g.for_each_neighbor(v, [&](int u) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                }
            });
        }
        for (auto [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1) continue;
            if (parent[u] == v || parent[v] == u) continue;
            int len = dist[u] + dist[v] + 1;
            if (best == -1 || len < best) best = len;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

EccentricityReport eccentricities(const Graph& g) {
    int n = g.order();
    EccentricityReport rep;
    rep.ecc.assign(n, 0);
    if (n == 0) return rep;
    std::vector<int32_t> dist;
    for (int v = 0; v < n; ++v) {
        bfs_fill(g, v, dist);
        int32_t e = 0;
        for (int u = 0; u < n; ++u) {
            if (dist[u] == DistMatrix::kUnreachable) throw DisconnectedError();
            e = std::max(e, dist[u]);
        }
        rep.ecc[v] = e;
    }
    rep.diameter = *std::max_element(rep.ecc.begin(), rep.ecc.end());
    rep.radius = *std::min_element(rep.ecc.begin(), rep.ecc.end());
    assert(rep.radius <= rep.diameter && rep.diameter <= 2 * rep.radius);
    return rep;
}

std::vector<Block> blocks(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError();
    int n = g.order();
    std::vector<Block> out;
    if (n <= 1) return out;

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    int timer = 0;

    auto emit = [&](const Edge& last) {
        Block b;
        std::vector<int> verts;
        long long edge_count = 0;
        while (true) {
            Edge e = estack.back();
            estack.pop_back();
            ++edge_count;
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == last) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        long long k = static_cast<long long>(verts.size());
        b.vertices = std::move(verts);
        b.complete = (edge_count == k * (k - 1) / 2);
        out.push_back(std::move(b));
    };

    // Iterative DFS; frames hold the neighbor list position.
    struct Frame {
        int v, parent;
        std::vector<int> nbrs;
        size_t idx = 0;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, g.neighbors(0)});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.idx < f.nbrs.size()) {
            int u = f.nbrs[f.idx++];
            if (u == f.parent) {
                f.parent = -2; // skip the tree edge to the parent exactly once
                continue;
            }
            if (disc[u] == -1) {
                estack.push_back({f.v, u});
                disc[u] = low[u] = timer++;
                stack.push_back({u, f.v, g.neighbors(u)});
            } else if (disc[u] < disc[f.v]) {
                estack.push_back({f.v, u});
                low[f.v] = std::min(low[f.v], disc[u]);
            }
        } else {
            int v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) emit({p, v});
            }
        }
    }
    return out;
}

bool all_blocks_complete(const Graph& g) {
    for (const auto& b : blocks(g))
        if (!b.complete) return false;
    return true;
}

namespace {

bool connected_after_removal(const Graph& g, uint32_t removed) {
    int n = g.order();
    uint32_t remaining = (n == 32 ? ~uint32_t{0} : ((uint32_t{1} << n) - 1)) & ~removed;
    if (remaining == 0) return true;
    int start = __builtin_ctz(remaining);
    uint32_t seen = uint32_t{1} << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int u) {
            uint32_t bit = uint32_t{1} << u;
            if ((remaining & bit) && !(seen & bit)) {
                seen |= bit;
                stack.push_back(u);
            }
        });
    }
    return seen == remaining;
}

bool some_cut_of_size(const Graph& g, int k, int lo, uint32_t chosen) {
    if (k == 0) return !connected_after_removal(g, chosen);
    for (int v = lo; v <= g.order() - k; ++v)
        if (some_cut_of_size(g, k - 1, v + 1, chosen | (uint32_t{1} << v))) return true;
    return false;
}

int edge_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    // Menger via unit-capacity max-flow from vertex 0 to every other vertex.
    int best = n;
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (int t = 1; t < n; ++t) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) cap[u][v] = g.has_edge(u, v) ? 1 : 0;
        int flow = 0;
        while (true) {
            std::vector<int> pred(n, -1);
            std::vector<int> queue{0};
            pred[0] = 0;
            size_t head = 0;
            while (head < queue.size() && pred[t] == -1) {
                int v = queue[head++];
                for (int u = 0; u < n; ++u)
                    if (pred[u] == -1 && cap[v][u] > 0) {
                        pred[u] = v;
                        queue.push_back(u);
                    }
            }
            if (pred[t] == -1) break;
            for (int v = t; v != 0; v = pred[v]) {
                cap[pred[v]][v] -= 1;
                cap[v][pred[v]] += 1;
            }
            ++flow;
        }
        best = std::min(best, flow);
    }
    return best;
}

} // namespace

std::pair<int, int> connectivity(const Graph& g) {
    int n = g.order();
    if (n > 16) throw TooLargeError("connectivity supports n <= 16");
    if (n == 0 || !g.is_connected()) return {0, 0};
    if (n == 1) return {0, 0};

    long long m = g.size();
    int kappa;
    if (m == static_cast<long long>(n) * (n - 1) / 2) {
        kappa = n - 1;
    } else {
        kappa = g.min_degree();
        for (int k = 0; k < kappa; ++k) {
            if (some_cut_of_size(g, k, 0, 0)) {
                kappa = k;
                break;
            }
        }
    }
    return {kappa, edge_connectivity(g)};
}

std::pair<long long, long long> clique_counts(const Graph& g) {
    int words = g.words();
    long long tri3 = 0, k4x6 = 0;
    std::vector<uint64_t> common(words);
    for (auto [u, v] : g.edges()) {
        auto au = g.adjacency(u);
        auto av = g.adjacency(v);
        int cnt = 0;
        for (int w = 0; w < words; ++w) {
            common[w] = au[w] & av[w];
            cnt += __builtin_popcountll(common[w]);
        }
        tri3 += cnt;
        if (cnt >= 2) {
            long long inner = 0;
            for (int w = 0; w < words; ++w) {
                uint64_t bits = common[w];
                while (bits) {
                    int b = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    auto aw = g.adjacency(w * 64 + b);
                    for (int x = 0; x < words; ++x)
                        inner += __builtin_popcountll(aw[x] & common[x]);
                }
            }
            k4x6 += inner / 2;
        }
    }
    return {tri3 / 3, k4x6 / 6};
}

namespace {

int matching_rec(const Graph& g, uint32_t s, std::vector<int8_t>& memo) {
    if (s == 0) return 0;
    int8_t& slot = memo[s];
    if (slot >= 0) return slot;
    int v = __builtin_ctz(s);
    uint32_t rest = s & ~(uint32_t{1} << v);
    int best = matching_rec(g, rest, memo);
    g.for_each_neighbor(v, [&](int u) {
        uint32_t bit = uint32_t{1} << u;
        if (rest & bit)
            best = std::max(best, 1 + matching_rec(g, rest & ~bit, memo));
    });
    slot = static_cast<int8_t>(best);
    return best;
}

} // namespace

int matching_number(const Graph& g) {
    int n = g.order();
    if (n > 20) throw TooLargeError("matching_number supports n <= 20");
    if (n == 0) return 0;
    std::vector<int8_t> memo(uint32_t{1} << n, -1);
    return matching_rec(g, (uint32_t{1} << n) - 1, memo);
}

namespace {

// Leaf-up pass for trees: every merge step is forced, so one bottom-up sweep
// decides whether a P_r partition exists.
bool tree_pr_factor(const Graph& g, int r) {
    int n = g.order();
    std::vector<int> order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    parent[0] = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        g.for_each_neighbor(v, [&](int u) {
            if (parent[u] == -1) {
                parent[u] = v;
                order.push_back(u);
            }
        });
    }
    std::vector<int> open(n, 0);
    std::vector<std::vector<int>> child_open(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto& opens = child_open[v];
        int positive = 0;
        for (int o : opens)
            if (o > 0) ++positive;
        int val;
        if (positive >= 3) return false;
        if (positive == 2) {
            int a = 0, b = 0;
            for (int o : opens)
                if (o > 0) (a == 0 ? a : b) = o;
            if (a + b + 1 != r) return false;
            val = 0;
        } else if (positive == 1) {
            int a = 0;
            for (int o : opens)
                if (o > 0) a = o;
            val = a + 1 == r ? 0 : a + 1;
        } else {
            val = r == 1 ? 0 : 1;
        }
        if (v == 0) return val == 0;
        open[v] = val;
        child_open[parent[v]].push_back(val);
    }
    return true;
}

// Exhaustive search used for general graphs and as the oracle route.
bool pr_partition_search(const Graph& g, int r, uint32_t used) {
    uint32_t all = g.order() == 32 ? ~uint32_t{0} : (uint32_t{1} << g.order()) - 1;
    if (used == all) return true;
    int v = __builtin_ctz(~used & all);

    // Grow a path of r vertices through v: a prefix on one side, then the rest.
    std::function<bool(std::vector<int>&, uint32_t)> extend_right =
        [&](std::vector<int>& path, uint32_t taken) -> bool {
        if (static_cast<int>(path.size()) == r) {
            if (pr_partition_search(g, r, used | taken)) return true;
            return false;
        }
        bool found = false;
        g.for_each_neighbor(path.back(), [&](int u) {
            if (found) return;
            uint32_t bit = uint32_t{1} << u;
            if ((used | taken) & bit) return;
            path.push_back(u);
            if (extend_right(path, taken | bit)) found = true;
            path.pop_back();
        });
        return found;
    };
    // Left part: paths ending at v; built backwards, then extended to the right.
    std::function<bool(std::vector<int>&, uint32_t)> grow = [&](std::vector<int>& left,
                                                                uint32_t taken) -> bool {
        std::vector<int> path(left.rbegin(), left.rend());
        if (extend_right(path, taken)) return true;
        if (static_cast<int>(left.size()) == r) return false;
        bool found = false;
        g.for_each_neighbor(left.back(), [&](int u) {
            if (found) return;
            uint32_t bit = uint32_t{1} << u;
            if ((used | taken) & bit) return;
            left.push_back(u);
            if (grow(left, taken | bit)) found = true;
            left.pop_back();
        });
        return found;
    };
    std::vector<int> left{v};
    return grow(left, uint32_t{1} << v);
}

} // namespace

bool has_pr_factor(const Graph& g, int r) {
    if (r < 1) throw BadParamsError("P_r factor needs r >= 1");
    int n = g.order();
    if (n % r != 0) return false;
    if (r == 1 || n == 0) return true;
    if (g.is_tree() || g.is_forest()) {
        if (!g.is_connected()) {
            auto labels = g.component_labels();
            int comps = *std::max_element(labels.begin(), labels.end()) + 1;
            for (int c = 0; c < comps; ++c) {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if (labels[v] == c) keep.push_back(v);
                if (!has_pr_factor(g.induced_subgraph(keep), r)) return false;
            }
            return true;
        }
        return tree_pr_factor(g, r);
    }
    if (r == 2) return matching_number(g) * 2 == n;
    if (n > 12) throw TooLargeError("P_r-factor search supports n <= 12 on general graphs");
    return pr_partition_search(g, r, 0);
}

} // namespace wienerlab
