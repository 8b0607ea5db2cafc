#include "wienerlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "wienerlab/canonical.hpp"
#include "wienerlab/io.hpp"
#include "wienerlab/structure.hpp"

namespace wienerlab {

// ---- EnumFilter ------------------------------------------------------------

bool EnumFilter::matches(const Graph& g) const {
    int edge_count = g.size();
    if (m && edge_count != *m) return false;
    if (min_m && edge_count < *min_m) return false;
    if (max_m && edge_count > *max_m) return false;
    if (lambda) {
        if (!g.is_connected()) return false;
        if (g.cyclomatic_number() != *lambda) return false;
    }
    if (regular) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != *regular) return false;
    }
    if (eulerian) {
        if (!g.is_connected()) return false;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) % 2 != 0) return false;
    }
    if (all_odd) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) % 2 != 1) return false;
    }
    if (diameter || radius) {
        if (!g.is_connected()) return false;
        auto ecc = eccentricities(g);
        if (diameter && ecc.diameter != *diameter) return false;
        if (radius && ecc.radius != *radius) return false;
    }
    if (perfect_matching) {
        if (g.order() % 2 != 0) return false;
        if (matching_number(g) * 2 != g.order()) return false;
    }
    if (pr_factor && !has_pr_factor(g, *pr_factor)) return false;
    if (bipartition) {
        if (!g.is_connected()) return false;
        std::vector<int> color;
        if (!g.bipartition(color)) return false;
        int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
        int b = g.order() - a;
        auto [p, q] = *bipartition;
        if (!((a == p && b == q) || (a == q && b == p))) return false;
    }
    return true;
}

EnumFilter EnumFilter::parse(const std::string& text) {
    EnumFilter f;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        std::string key = item.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : item.substr(eq + 1);
        auto as_int = [&]() {
            if (val.empty()) throw BadParamsError("filter key '" + key + "' needs a value");
            return std::stoi(val);
        };
        if (key == "m")
            f.m = as_int();
        else if (key == "mmin")
            f.min_m = as_int();
        else if (key == "mmax")
            f.max_m = as_int();
        else if (key == "regular")
            f.regular = as_int();
        else if (key == "diameter")
            f.diameter = as_int();
        else if (key == "radius")
            f.radius = as_int();
        else if (key == "lambda")
            f.lambda = as_int();
        else if (key == "prfactor")
            f.pr_factor = as_int();
        else if (key == "eulerian")
            f.eulerian = true;
        else if (key == "allodd")
            f.all_odd = true;
        else if (key == "pm")
            f.perfect_matching = true;
        else if (key == "bip") {
            auto colon = val.find(':');
            if (colon == std::string::npos)
                throw BadParamsError("bip filter wants 'bip=p:q'");
            f.bipartition = {std::stoi(val.substr(0, colon)), std::stoi(val.substr(colon + 1))};
        } else {
            throw BadParamsError("unknown filter key '" + key + "'");
        }
    }
    return f;
}

std::string EnumFilter::text() const {
    std::ostringstream out;
    auto put = [&](const std::string& k, const std::string& v) {
        if (out.tellp() > 0) out << ',';
        out << k;
        if (!v.empty()) out << '=' << v;
    };
    if (m) put("m", std::to_string(*m));
    if (min_m) put("mmin", std::to_string(*min_m));
    if (max_m) put("mmax", std::to_string(*max_m));
    if (regular) put("regular", std::to_string(*regular));
    if (diameter) put("diameter", std::to_string(*diameter));
    if (radius) put("radius", std::to_string(*radius));
    if (lambda) put("lambda", std::to_string(*lambda));
    if (pr_factor) put("prfactor", std::to_string(*pr_factor));
    if (eulerian) put("eulerian", "");
    if (all_odd) put("allodd", "");
    if (perfect_matching) put("pm", "");
    if (bipartition)
        put("bip", std::to_string(bipartition->first) + ":" + std::to_string(bipartition->second));
    return out.str();
}

// ---- Free trees ------------------------------------------------------------
//
// Rooted trees come from the classic level-sequence successor rule: sequences
// start at (1,2,...,n) and end at (1,2,2,...,2), each canonical sequence
// listing child subtrees in non-increasing order. A rooted sequence is kept
// exactly when its root is a centroid of the underlying free tree; with two
// centroids the root-side half must compare >= the other half, so every free
// isomorphism class survives exactly once.

namespace detail {

namespace {

struct TreeScratch {
    std::vector<int> parent, size, weight;
};

// parent[i] from a level sequence (levels start at 1, preorder).
void parents_from_levels(const std::vector<int>& levels, std::vector<int>& parent) {
    int n = static_cast<int>(levels.size());
    parent.assign(n, -1);
    std::vector<int> stack; // stack[d] = last vertex seen at level d+1
    stack.assign(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        int lvl = levels[i];
        if (lvl >= 2) parent[i] = stack[lvl - 2];
        stack[lvl - 1] = i;
    }
}

// True when the sequence is the canonical representative of its free tree.
bool is_free_representative(const std::vector<int>& levels, TreeScratch& ts) {
    int n = static_cast<int>(levels.size());
    if (n <= 2) return true;
    parents_from_levels(levels, ts.parent);
    ts.size.assign(n, 1);
    for (int i = n - 1; i >= 1; --i) ts.size[ts.parent[i]] += ts.size[i];
    ts.weight.assign(n, 0);
    for (int i = n - 1; i >= 1; --i)
        ts.weight[ts.parent[i]] = std::max(ts.weight[ts.parent[i]], ts.size[i]);
    int best = n;
    for (int i = 0; i < n; ++i) {
        int w = std::max(ts.weight[i], i == 0 ? 0 : n - ts.size[i]);
        ts.weight[i] = w; // reuse as the final weight
        best = std::min(best, w);
    }
    if (ts.weight[0] != best) return false;
    if (2 * best != n) return true; // unique centroid at the root

    // Bicentroidal: the second centroid is the root child whose subtree has
    // n/2 vertices; compare the two halves as rooted sequences.
    int c = -1;
    for (int i = 1; i < n && c == -1; ++i)
        if (ts.parent[i] == 0 && ts.size[i] == n / 2 && ts.weight[i] == best) c = i;
    if (c == -1) return true; // both centroids inside one root subtree: impossible
    int end = c + ts.size[c];
    // half2 = segment [c, end) with levels shifted to start at 1.
    // half1 = remainder, already rooted at 0.
    std::vector<int> h1, h2;
    h1.reserve(n / 2);
    h2.reserve(n / 2);
    for (int i = 0; i < n; ++i) {
        if (i >= c && i < end)
            h2.push_back(levels[i] - 1);
        else
            h1.push_back(levels[i]);
    }
    return h1 >= h2;
}

} // namespace

void tree_level_sequences(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1 || n > 22) throw TooLargeError("tree enumeration supports 1 <= n <= 22");
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    TreeScratch ts;
    while (true) {
        if (is_free_representative(levels, ts)) fn(levels);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p == -1) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[i] == levels[p] - 1) {
                q = i;
                break;
            }
        int d = p - q;
        for (int i = p; i < n; ++i) levels[i] = levels[i - d];
    }
}

Graph tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<int> parent;
    parents_from_levels(levels, parent);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.push_back({parent[i], i});
    return Graph::from_edges(n, std::move(edges));
}

} // namespace detail

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
    detail::tree_level_sequences(
        n, [&](const std::vector<int>& levels) { fn(detail::tree_from_levels(levels)); });
}

std::vector<Graph> trees(int n) {
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

long long tree_count(int n) {
    long long count = 0;
    detail::tree_level_sequences(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

// ---- Graph classes ---------------------------------------------------------
//
// Orderly breadth-first generation over edge counts: every class with m+1
// edges is some class with m edges plus one edge, so extending every level
// member in all ways and deduplicating by canonical form visits each class
// exactly once. Levels stay deduplicated and sorted, which makes the output
// order deterministic and lets sweeps partition it by prefix.

std::string GraphClassParams::key() const {
    std::ostringstream out;
    out << "n" << n << "_m" << max_m << "_d" << max_degree << "_r" << exact_regular;
    return out.str();
}

namespace {

struct RegularTarget {
    int r = -1;
    int target_m = 0;
};

// Pruning for exact-regular targets: every deficient vertex needs enough
// deficient non-neighbors, saturated components can never reconnect, and the
// total deficiency must cover the component count.
bool completable_to_regular(const Graph& g, const RegularTarget& t) {
    int n = g.order();
    long long total_need = 0;
    std::vector<int> need(n);
    for (int v = 0; v < n; ++v) {
        need[v] = t.r - g.degree(v);
        total_need += need[v];
    }
    for (int v = 0; v < n; ++v) {
        if (need[v] == 0) continue;
        int avail = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && need[u] > 0 && !g.has_edge(u, v)) ++avail;
        if (avail < need[v]) return false;
    }
    auto labels = g.component_labels();
    int comps = *std::max_element(labels.begin(), labels.end()) + 1;
    if (comps > 1) {
        std::vector<long long> comp_need(comps, 0);
        for (int v = 0; v < n; ++v) comp_need[labels[v]] += need[v];
        for (long long cn : comp_need)
            if (cn == 0) return false;
        if (total_need < 2 * (comps - 1)) return false;
    }
    return true;
}

std::vector<Graph> generate_classes(const GraphClassParams& p) {
    int n = p.n;
    int max_m = p.max_m;
    int max_deg = p.max_degree;
    RegularTarget reg;
    if (p.exact_regular >= 0) {
        reg.r = p.exact_regular;
        reg.target_m = n * reg.r / 2;
    }

    std::vector<Graph> out;
    // Levels keyed by canonical bytes, kept sorted for determinism.
    std::map<std::string, Graph> level;
    level.emplace(canonical_bytes(Graph::empty(n)), Graph::empty(n));

    for (int m = 0; m <= max_m; ++m) {
        std::vector<const Graph*> members;
        members.reserve(level.size());
        for (auto& [k, g] : level) members.push_back(&g);

        if (reg.r >= 0) {
            if (m == reg.target_m) {
                for (const Graph* g : members)
                    if (g->is_connected()) out.push_back(*g);
                break;
            }
        } else {
            for (const Graph* g : members) out.push_back(*g);
        }
        if (m == max_m) break;

        // Children of this level, deduplicated by canonical form.
        auto tagged = par::parallel_collect<std::vector<std::pair<std::string, Graph>>>(
            static_cast<int64_t>(members.size()), [](int64_t) { return true; },
            [&](int64_t i) {
                const Graph& g = *members[i];
                std::vector<std::pair<std::string, Graph>> kids;
                for (int v = 1; v < n; ++v) {
                    if (max_deg >= 0 && g.degree(v) >= max_deg) continue;
                    for (int u = 0; u < v; ++u) {
                        if (max_deg >= 0 && g.degree(u) >= max_deg) continue;
                        if (g.has_edge(u, v)) continue;
                        Graph child = g.with_edge(u, v);
                        if (reg.r >= 0 && !completable_to_regular(child, reg)) continue;
                        kids.emplace_back(canonical_bytes(child), std::move(child));
                    }
                }
                return kids;
            });
        level.clear();
        for (auto& kids : tagged)
            for (auto& [key, child] : kids) level.emplace(std::move(key), std::move(child));
    }
    return out;
}

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const std::vector<Graph>>> class_cache;

std::shared_ptr<const std::vector<Graph>> load_spool(const std::string& path,
                                                     const std::string& key) {
    std::ifstream probe(path);
    if (!probe) return nullptr;
    std::string header;
    std::getline(probe, header);
    if (header != "#wienerlab-cache v1 " + key) return nullptr;
    probe.close();
    auto graphs = read_graph_file(path);
    return std::make_shared<const std::vector<Graph>>(std::move(graphs));
}

} // namespace

std::shared_ptr<const std::vector<Graph>> graph_classes(const GraphClassParams& params) {
    GraphClassParams p = params;
    if (p.n < 0) throw BadParamsError("negative vertex count");
    long long full = static_cast<long long>(p.n) * (p.n - 1) / 2;
    if (p.max_m < 0 || p.max_m > full) p.max_m = static_cast<int>(full);
    if (p.max_degree < 0 || p.max_degree > p.n - 1) p.max_degree = p.n - 1;
    if (p.exact_regular >= 0) {
        int r = p.exact_regular;
        if ((p.n * r) % 2 != 0) throw BadParamsError("n*r must be even for r-regular graphs");
        p.max_degree = std::min(p.max_degree, r);
        p.max_m = p.n * r / 2;
        int cap = r <= 2 ? 16 : r == 3 ? 14 : r == 4 ? 12 : 10;
        if (p.n > cap)
            throw TooLargeError("regular enumeration cap exceeded (r=" + std::to_string(r) +
                                " allows n <= " + std::to_string(cap) + ")");
    } else {
        if (p.n > 10) throw TooLargeError("graph enumeration supports n <= 10");
        if (p.n == 10 && p.max_m > 14)
            throw TooLargeError("n = 10 enumeration needs an edge bound (m <= 14)");
    }

    std::string key = p.key();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = class_cache.find(key);
        if (it != class_cache.end()) return it->second;
    }

    const char* cache_dir = std::getenv("WIENERLAB_CACHE");
    std::string spool_path;
    if (cache_dir && *cache_dir) {
        spool_path = std::string(cache_dir) + "/" + key + ".g6";
        if (auto loaded = load_spool(spool_path, key)) {
            std::lock_guard<std::mutex> lock(cache_mutex);
            class_cache[key] = loaded;
            return loaded;
        }
    }

    auto result = std::make_shared<const std::vector<Graph>>(generate_classes(p));
    if (!spool_path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_dir, ec);
        if (!ec) write_graph6_file(spool_path, *result, "wienerlab-cache v1 " + key);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    class_cache[key] = result;
    return result;
}

std::vector<Graph> connected_graphs(int n, const EnumFilter& filter) {
    GraphClassParams p;
    p.n = n;
    if (filter.regular) {
        p.exact_regular = *filter.regular;
    } else {
        int cap = -1;
        if (filter.m) cap = *filter.m;
        if (filter.max_m) cap = filter.max_m.value();
        if (filter.lambda) cap = n - 1 + *filter.lambda;
        p.max_m = cap;
        if (filter.regular) p.max_degree = *filter.regular;
    }
    auto classes = graph_classes(p);
    std::vector<Graph> out;
    for (const auto& g : *classes)
        if (g.is_connected() && filter.matches(g)) out.push_back(g);
    return out;
}

std::vector<Graph> regular_graphs(int n, int r) {
    if (r < 0) throw BadParamsError("negative regularity");
    GraphClassParams p;
    p.n = n;
    p.exact_regular = r;
    return *graph_classes(p);
}

// ---- Orientations ----------------------------------------------------------

void for_each_orientation(const Graph& g, OrientMode mode,
                          const std::function<void(const Digraph&, uint64_t)>& fn) {
    int m = g.size();
    if (m > 24) throw TooLargeError("orientation enumeration supports m <= 24");
    uint64_t total = uint64_t{1} << m;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Digraph d = Digraph::orientation(g, mask);
        if (mode == OrientMode::Strong && !d.is_strongly_connected()) continue;
        if (mode == OrientMode::Acyclic && !d.is_acyclic()) continue;
        fn(d, mask);
    }
}

// ---- Diameter <= 4 trees ----------------------------------------------------

index_t diam4_wiener(long long c, long long m_total, long long sq_total) {
    // Distances in the two-level broom: derived once from the edge cut
    // decomposition and frozen; verified against BFS in the tests.
    return static_cast<index_t>(c) * c + 3 * static_cast<index_t>(c) * m_total - m_total +
           2 * static_cast<index_t>(m_total) * m_total - sq_total;
}

int Diam4Class::order() const {
    long long m_total = 0;
    for (int x : branch_leaves) m_total += x;
    return static_cast<int>(1 + children + m_total);
}

index_t Diam4Class::wiener_value() const {
    long long m_total = 0, sq = 0;
    for (int x : branch_leaves) {
        m_total += x;
        sq += static_cast<long long>(x) * x;
    }
    return diam4_wiener(children, m_total, sq);
}

Graph Diam4Class::build() const {
    std::vector<Edge> edges;
    int next = 1 + children;
    for (int i = 0; i < children; ++i) {
        edges.push_back({0, 1 + i});
        int leaves = i < static_cast<int>(branch_leaves.size()) ? branch_leaves[i] : 0;
        for (int l = 0; l < leaves; ++l) edges.push_back({1 + i, next++});
    }
    return Graph::from_edges(next, std::move(edges));
}

void for_each_diam4_upto(index_t limit, const std::function<void(const Diam4Class&)>& fn) {
    if (limit > 50000)
        throw TooLargeError("diameter-4 class streams are practical up to W <= 50000; "
                            "value queries go through the search module");
    if (limit < 0) return;
    fn(Diam4Class{0, {}}); // K1, W = 0
    if (limit >= 1) fn(Diam4Class{1, {}});
    for (long long c = 2; static_cast<index_t>(c) * c <= limit; ++c)
        fn(Diam4Class{static_cast<int>(c), {}}); // stars, W = c^2

    // Brooms: non-increasing positive leaf counts. W grows with every extra
    // bare child, with every new branch, and with every leaf added to the
    // last branch, which bounds all three loops.
    std::vector<int> branches;
    std::function<void(long long, long long)> rec = [&](long long m_total, long long sq) {
        int k = static_cast<int>(branches.size());
        if (k >= 1) {
            for (long long c = std::max<long long>(k, 2);; ++c) {
                if (diam4_wiener(c, m_total, sq) > limit) break;
                // A double star is symmetric in (bare side, leaf side); keep
                // the representative whose bare side is at least as large.
                if (k == 1 && c - 1 < branches[0]) continue;
                fn(Diam4Class{static_cast<int>(c), branches});
            }
        }
        int cap = branches.empty() ? std::numeric_limits<int>::max() : branches.back();
        for (int nxt = 1; nxt <= cap; ++nxt) {
            long long nm = m_total + nxt;
            long long nsq = sq + static_cast<long long>(nxt) * nxt;
            if (diam4_wiener(std::max<long long>(k + 1, 2), nm, nsq) > limit) break;
            branches.push_back(nxt);
            rec(nm, nsq);
            branches.pop_back();
        }
    };
    rec(0, 0);
}

} // namespace wienerlab
