#include "wienerlab/invariants.hpp"

#include <algorithm>

namespace wienerlab {

index_t wiener(const Graph& g) {
    int n = g.order();
    index_t total = 0;
    std::vector<int32_t> dist;
    for (int s = 0; s < n; ++s) {
        bfs_fill(g, s, dist);
        long long row = 0;
        for (int v = 0; v < n; ++v)
            if (dist[v] != DistMatrix::kUnreachable) row += dist[v];
        total += row;
    }
    return total / 2;
}

index_t wiener_tree(const Graph& g) {
    int n = g.order();
    if (!g.is_tree()) throw DomainError("wiener_tree expects a tree");
    if (n <= 1) return 0;
    // Root at 0; each edge contributes (subtree size) * (rest).
    std::vector<int> order, parent(n, -1), size(n, 1);
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
    index_t total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v == 0) continue;
        size[parent[v]] += size[v];
        total += static_cast<index_t>(size[v]) * (n - size[v]);
    }
    return total;
}

index_t wiener_digraph(const Digraph& d) {
    int n = d.order();
    index_t total = 0;
    std::vector<int32_t> dist;
    for (int s = 0; s < n; ++s) {
        bfs_fill(d, s, dist);
        long long row = 0;
        for (int v = 0; v < n; ++v)
            if (dist[v] != DistMatrix::kUnreachable) row += dist[v];
        total += row;
    }
    return total;
}

index_t transmission(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw BadParamsError("vertex out of range");
    std::vector<int32_t> dist;
    bfs_fill(g, v, dist);
    index_t total = 0;
    for (int u = 0; u < g.order(); ++u)
        if (dist[u] != DistMatrix::kUnreachable) total += dist[u];
    return total;
}

index_t szeged(const Graph& g) {
    int n = g.order();
    DistMatrix dm = bfs_apsp(g);
    if (!dm.all_reachable()) throw DisconnectedError();
    index_t total = 0;
    for (auto [i, j] : g.edges()) {
        long long ni = 0, nj = 0;
        for (int x = 0; x < n; ++x) {
            int32_t di = dm.at(x, i), dj = dm.at(x, j);
            if (di < dj)
                ++ni;
            else if (dj < di)
                ++nj;
        }
        total += static_cast<index_t>(ni) * nj;
    }
    return total;
}

index_t schultz(const Graph& g) {
    int n = g.order();
    index_t total = 0;
    std::vector<int32_t> dist;
    for (int u = 0; u < n; ++u) {
        bfs_fill(g, u, dist);
        long long row = 0;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (dist[v] == DistMatrix::kUnreachable) throw DisconnectedError();
            row += static_cast<long long>(g.degree(u) + g.degree(v)) * dist[v];
        }
        total += row;
    }
    return total / 2;
}

index_t gutman(const Graph& g) {
    int n = g.order();
    index_t total = 0;
    std::vector<int32_t> dist;
    for (int u = 0; u < n; ++u) {
        bfs_fill(g, u, dist);
        long long row = 0;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (dist[v] == DistMatrix::kUnreachable) throw DisconnectedError();
            row += static_cast<long long>(g.degree(u)) * g.degree(v) * dist[v];
        }
        total += row;
    }
    return total / 2;
}

index_t eta(const Graph& g) {
    index_t value = szeged(g) - wiener(g);
    assert(value >= 0);
    return value;
}

std::pair<index_t, index_t> n2_n3(const Graph& f) {
    auto labels = f.component_labels();
    int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<index_t> sizes(comps, 0);
    for (int l : labels) sizes[l] += 1;
    // Elementary symmetric polynomials e2, e3 of the component orders.
    index_t e1 = 0, e2 = 0, e3 = 0;
    for (index_t s : sizes) {
        e3 += e2 * s;
        e2 += e1 * s;
        e1 += s;
    }
    return {e2, e3};
}

namespace {

// Forward geodesic counts from s: sigma[v] = number of shortest s->v paths.
void geodesic_counts(const Digraph& d, int s, bool reverse, std::vector<int32_t>& dist,
                     std::vector<long long>& sigma) {
    int n = d.order();
    dist.assign(n, DistMatrix::kUnreachable);
    sigma.assign(n, 0);
    dist[s] = 0;
    sigma[s] = 1;
    std::vector<int> queue{s};
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        auto row = reverse ? d.in_adjacency(v) : d.out_adjacency(v);
        for (int w = 0; w < d.words(); ++w) {
            uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int u = w * 64 + b;
                if (dist[u] == DistMatrix::kUnreachable) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
                if (dist[u] == dist[v] + 1) sigma[u] += sigma[v];
            }
        }
    }
}

} // namespace

std::vector<Rational> betweenness(const Digraph& d) {
    int n = d.order();
    std::vector<Rational> b(n, Rational(0));
    std::vector<std::vector<int32_t>> fd(n), rd(n);
    std::vector<std::vector<long long>> fs(n), rs(n);
    for (int v = 0; v < n; ++v) {
        geodesic_counts(d, v, false, fd[v], fs[v]);
        geodesic_counts(d, v, true, rd[v], rs[v]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || fd[u][v] == DistMatrix::kUnreachable) continue;
            long long total = fs[u][v];
            for (int x = 0; x < n; ++x) {
                if (x == u || x == v) continue;
                if (fd[u][x] == DistMatrix::kUnreachable ||
                    rd[v][x] == DistMatrix::kUnreachable)
                    continue;
                if (fd[u][x] + rd[v][x] != fd[u][v]) continue;
                b[x] += Rational(fs[u][x] * rs[v][x], total);
            }
        }
    return b;
}

index_t p_pairs(const Digraph& d) {
    int n = d.order();
    index_t count = 0;
    std::vector<int32_t> dist;
    for (int s = 0; s < n; ++s) {
        bfs_fill(d, s, dist);
        for (int v = 0; v < n; ++v)
            if (v != s && dist[v] != DistMatrix::kUnreachable) ++count;
    }
    return count;
}

ReachCounts reach_counts(const Digraph& d) {
    int n = d.order();
    ReachCounts rc;
    rc.t.assign(n, 0);
    rc.s.assign(n, 0);
    std::vector<int32_t> dist;
    for (int v = 0; v < n; ++v) {
        bfs_fill(d, v, dist);
        for (int u = 0; u < n; ++u) {
            if (dist[u] != DistMatrix::kUnreachable) {
                ++rc.t[v];
                ++rc.s[u];
            }
        }
    }
    return rc;
}

index_t arc_reach_product(const Digraph& d) {
    ReachCounts rc = reach_counts(d);
    index_t total = 0;
    for (auto [a, b] : d.arcs()) total += static_cast<index_t>(rc.s[a]) * rc.t[b];
    return total;
}

} // namespace wienerlab
