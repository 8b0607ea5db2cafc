#include "wienerlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wienerlab {

namespace {

// Search state for one connected component on <= 32 vertices, adjacency as
// single-word masks. The partition is a permutation `order` cut into cells;
// cell boundaries and membership are invariant under isomorphism at every
// step, so the leaf set of the search tree is automorphism-closed. The
// canonical string is the lexicographic minimum over leaves; the number of
// leaf labelings attaining it is the automorphism group order.
struct CanonSearch {
    int n = 0;
    std::array<uint32_t, 32> adj{};

    struct Partition {
        std::array<int, 32> order{};
        // cells[i] = (start, size); cells are contiguous in `order`.
        std::array<std::pair<int, int>, 32> cells{};
        int cell_count = 0;
    };

    std::string best;
    uindex_t best_count = 0;

    uint32_t cell_mask(const Partition& p, int c) const {
        uint32_t m = 0;
        auto [s, len] = p.cells[c];
        for (int i = 0; i < len; ++i) m |= uint32_t{1} << p.order[s + i];
        return m;
    }

    // Splits cells by neighbor counts until the partition is equitable.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int d = 0; d < p.cell_count && !changed; ++d) {
                uint32_t dmask = cell_mask(p, d);
                for (int c = 0; c < p.cell_count; ++c) {
                    auto [s, len] = p.cells[c];
                    if (len <= 1) continue;
                    std::array<std::pair<int, int>, 32> keyed;
                    for (int i = 0; i < len; ++i) {
                        int v = p.order[s + i];
                        keyed[i] = {__builtin_popcount(adj[v] & dmask), v};
                    }
                    std::sort(keyed.begin(), keyed.begin() + len);
                    if (keyed[0].first == keyed[len - 1].first) continue;
                    // Rebuild: cell c becomes several cells ordered by count.
                    Partition q;
                    q.cell_count = 0;
                    int pos = 0;
                    for (int c2 = 0; c2 < p.cell_count; ++c2) {
                        auto [s2, len2] = p.cells[c2];
                        if (c2 != c) {
                            q.cells[q.cell_count++] = {pos, len2};
                            for (int i = 0; i < len2; ++i) q.order[pos++] = p.order[s2 + i];
                            continue;
                        }
                        int i = 0;
                        while (i < len) {
                            int j = i;
                            while (j < len && keyed[j].first == keyed[i].first) ++j;
                            q.cells[q.cell_count++] = {pos, j - i};
                            for (int t = i; t < j; ++t) q.order[pos++] = keyed[t].second;
                            i = j;
                        }
                    }
                    p = q;
                    changed = true;
                    break;
                }
            }
        }
    }

    // A cell is uniform when all its vertices have identical adjacency rows:
    // a clique or independent set, joined fully or not at all to every other
    // cell. Within such cells any ordering yields the same canonical bytes.
    bool cell_uniform(const Partition& p, int c) const {
        auto [s, len] = p.cells[c];
        int v = p.order[s];
        uint32_t cmask = cell_mask(p, c);
        int within = __builtin_popcount(adj[v] & cmask);
        if (within != 0 && within != len - 1) return false;
        for (int d = 0; d < p.cell_count; ++d) {
            if (d == c) continue;
            auto dlen = p.cells[d].second;
            int cnt = __builtin_popcount(adj[v] & cell_mask(p, d));
            if (cnt != 0 && cnt != dlen) return false;
        }
        return true;
    }

    int branch_cell(const Partition& p) const {
        for (int c = 0; c < p.cell_count; ++c)
            if (p.cells[c].second > 1 && !cell_uniform(p, c)) return c;
        return -1;
    }

    std::string bytes_for(const Partition& p) const {
        // perm[new] = old, cells in partition order, ascending inside a cell.
        std::array<int, 32> perm{};
        int pos = 0;
        for (int c = 0; c < p.cell_count; ++c) {
            auto [s, len] = p.cells[c];
            std::array<int, 32> tmp{};
            for (int i = 0; i < len; ++i) tmp[i] = p.order[s + i];
            std::sort(tmp.begin(), tmp.begin() + len);
            for (int i = 0; i < len; ++i) perm[pos++] = tmp[i];
        }
        std::string out;
        out.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
        out.push_back(static_cast<char>(n));
        int bit = 0;
        unsigned char cur = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                if (adj[perm[i]] >> perm[j] & 1) cur |= static_cast<unsigned char>(1 << bit);
                if (++bit == 8) {
                    out.push_back(static_cast<char>(cur));
                    cur = 0;
                    bit = 0;
                }
            }
        }
        if (bit) out.push_back(static_cast<char>(cur));
        return out;
    }

    void leaf(const Partition& p) {
        uindex_t mult = 1;
        for (int c = 0; c < p.cell_count; ++c)
            for (int i = 2; i <= p.cells[c].second; ++i) mult *= static_cast<unsigned>(i);
        std::string bytes = bytes_for(p);
        if (best_count == 0 || bytes < best) {
            best = std::move(bytes);
            best_count = mult;
        } else if (bytes == best) {
            best_count += mult;
        }
    }

    void descend(Partition p) {
        refine(p);
        int c = branch_cell(p);
        if (c < 0) {
            leaf(p);
            return;
        }
        auto [s, len] = p.cells[c];
        std::array<int, 32> members{};
        for (int i = 0; i < len; ++i) members[i] = p.order[s + i];
        std::sort(members.begin(), members.begin() + len);
        for (int i = 0; i < len; ++i) {
            int v = members[i];
            Partition q;
            q.cell_count = 0;
            int pos = 0;
            for (int c2 = 0; c2 < p.cell_count; ++c2) {
                auto [s2, len2] = p.cells[c2];
                if (c2 != c) {
                    q.cells[q.cell_count++] = {pos, len2};
                    for (int t = 0; t < len2; ++t) q.order[pos++] = p.order[s2 + t];
                    continue;
                }
                q.cells[q.cell_count++] = {pos, 1};
                q.order[pos++] = v;
                q.cells[q.cell_count++] = {pos, len2 - 1};
                for (int t = 0; t < len2; ++t)
                    if (p.order[s2 + t] != v) q.order[pos++] = p.order[s2 + t];
            }
            descend(q);
        }
    }

    // Initial cells keyed by (degree, sorted distance multiset); the key order
    // is an isomorphism invariant, so equal graphs start from equal partitions.
    void run(const std::vector<int>& vertices, const Graph& g) {
        n = static_cast<int>(vertices.size());
        std::vector<int> idx_of(g.order(), -1);
        for (int i = 0; i < n; ++i) idx_of[vertices[i]] = i;
        for (int i = 0; i < n; ++i) {
            uint32_t mask = 0;
            g.for_each_neighbor(vertices[i], [&](int u) {
                if (idx_of[u] >= 0) mask |= uint32_t{1} << idx_of[u];
            });
            adj[i] = mask;
        }

        std::vector<std::vector<int>> sig(n);
        for (int s = 0; s < n; ++s) {
            std::vector<int> dist(n, -1);
            std::vector<int> stack{s};
            dist[s] = 0;
            size_t head = 0;
            while (head < stack.size()) {
                int v = stack[head++];
                uint32_t bits = adj[v];
                while (bits) {
                    int u = __builtin_ctz(bits);
                    bits &= bits - 1;
                    if (dist[u] == -1) {
                        dist[u] = dist[v] + 1;
                        stack.push_back(u);
                    }
                }
            }
            std::sort(dist.begin(), dist.end());
            sig[s] = {__builtin_popcount(adj[s])};
            sig[s].insert(sig[s].end(), dist.begin(), dist.end());
        }

        std::vector<int> by_sig(n);
        std::iota(by_sig.begin(), by_sig.end(), 0);
        std::stable_sort(by_sig.begin(), by_sig.end(),
                         [&](int a, int b) { return sig[a] < sig[b]; });

        Partition p;
        int pos = 0;
        int i = 0;
        while (i < n) {
            int j = i;
            while (j < n && sig[by_sig[j]] == sig[by_sig[i]]) ++j;
            p.cells[p.cell_count++] = {pos, j - i};
            for (int t = i; t < j; ++t) p.order[pos++] = by_sig[t];
            i = j;
        }
        descend(p);
    }
};

// Decodes canonical bytes of a component back into edges, offset into the
// combined labeling.
void append_component_edges(const std::string& bytes, int offset, std::vector<Edge>& edges) {
    int cn = static_cast<unsigned char>(bytes[0]);
    int bit = 0;
    size_t idx = 1;
    for (int j = 1; j < cn; ++j) {
        for (int i = 0; i < j; ++i) {
            if (static_cast<unsigned char>(bytes[idx]) >> bit & 1)
                edges.push_back({offset + i, offset + j});
            if (++bit == 8) {
                bit = 0;
                ++idx;
            }
        }
    }
}

std::string pack_graph(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.order()));
    int bit = 0;
    unsigned char cur = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<unsigned char>(1 << bit);
            if (++bit == 8) {
                out.push_back(static_cast<char>(cur));
                cur = 0;
                bit = 0;
            }
        }
    }
    if (bit) out.push_back(static_cast<char>(cur));
    return out;
}

} // namespace

CanonForm canonical_form(const Graph& g) {
    if (g.order() > 32) throw TooLargeError("canonical_form supports n <= 32");
    if (g.order() == 0) return {std::string(1, '\0'), 1};

    auto labels = g.component_labels();
    int comp_count = *std::max_element(labels.begin(), labels.end()) + 1;

    std::vector<std::vector<int>> comps(comp_count);
    for (int v = 0; v < g.order(); ++v) comps[labels[v]].push_back(v);

    std::vector<std::pair<std::string, uindex_t>> forms;
    forms.reserve(comp_count);
    for (auto& comp : comps) {
        CanonSearch search;
        search.run(comp, g);
        forms.push_back({std::move(search.best), search.best_count});
    }
    // Components ordered by canonical bytes; k equal components contribute an
    // extra k! (they can be permuted wholesale).
    std::sort(forms.begin(), forms.end());
    uindex_t aut = 1;
    for (size_t i = 0; i < forms.size();) {
        size_t j = i;
        while (j < forms.size() && forms[j].first == forms[i].first) ++j;
        for (size_t t = i; t < j; ++t) aut *= forms[t].second;
        for (size_t k = 2; k <= j - i; ++k) aut *= static_cast<unsigned>(k);
        i = j;
    }
    if (comp_count == 1) return {std::move(forms[0].first), aut};

    std::vector<Edge> edges;
    int offset = 0;
    for (auto& [bytes, cnt] : forms) {
        append_component_edges(bytes, offset, edges);
        offset += static_cast<unsigned char>(bytes[0]);
    }
    Graph relabeled = Graph::from_edges(g.order(), std::move(edges));
    return {pack_graph(relabeled), aut};
}

std::string canonical_bytes(const Graph& g) { return canonical_form(g).bytes; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_bytes(a) == canonical_bytes(b);
}

} // namespace wienerlab
