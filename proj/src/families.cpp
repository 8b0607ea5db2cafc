#include "wienerlab/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "wienerlab/enumerate.hpp"
#include "wienerlab/structure.hpp"

namespace wienerlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw BadParamsError(msg);
}

// Build-time structural checks; a failed one is a bug in the builder, so it
// throws rather than asserting.
void built_check(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("family invariant violated: " + what);
}

uint64_t pick(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

} // namespace

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 1, 0});
    return Graph::from_edges(n, std::move(e));
}

Graph star_graph(int n) {
    require(n >= 1, "star needs n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(int p, int q) {
    require(p >= 1 && q >= 1, "complete bipartite needs p, q >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.push_back({i, p + j});
    return Graph::from_edges(p + q, std::move(e));
}

Graph caterpillar(const std::vector<int>& leaf_counts) {
    int s = static_cast<int>(leaf_counts.size());
    require(s >= 1, "caterpillar needs a spine");
    for (int c : leaf_counts) require(c >= 0, "leaf counts must be nonnegative");
    std::vector<Edge> e;
    int next = s;
    for (int i = 0; i < s; ++i) {
        if (i + 1 < s) e.push_back({i, i + 1});
        for (int l = 0; l < leaf_counts[i]; ++l) e.push_back({i, next++});
    }
    Graph g = Graph::from_edges(next, std::move(e));
    built_check(g.is_tree(), "caterpillar is a tree");
    // Removing all leaves must leave a path (or nothing).
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2) keep.push_back(v);
    Graph spine = g.induced_subgraph(keep);
    built_check(spine.order() == 0 || (spine.is_tree() && spine.max_degree() <= 2),
                "caterpillar spine is a path");
    return g;
}

Graph generalized_star(const std::vector<int>& branch_lengths) {
    int t = static_cast<int>(branch_lengths.size());
    require(t >= 3, "generalized star needs t >= 3 branches");
    for (int k : branch_lengths) require(k >= 1, "branch lengths must be positive");
    std::vector<Edge> e;
    int next = 1;
    for (int i = 0; i < t; ++i) {
        int prev = 0;
        for (int step = 0; step < branch_lengths[i]; ++step) {
            e.push_back({prev, next});
            prev = next++;
        }
    }
    Graph g = Graph::from_edges(next, std::move(e));
    long long q = std::accumulate(branch_lengths.begin(), branch_lengths.end(), 0LL);
    built_check(g.is_tree() && g.size() == q, "generalized star has q = sum k_i edges");
    built_check(g.degree(0) == t, "generalized star center degree");
    return g;
}

Graph h_tree(int a, int b, int c) {
    require(a >= 1 && b >= 1 && c >= 1, "H tree needs a, b, c >= 1");
    // 0 and 1 are the degree-3 vertices, 2 the middle of the length-2 path.
    std::vector<Edge> e{{0, 2}, {1, 2}};
    int next = 3;
    auto pendant_path = [&](int from, int len) {
        int prev = from;
        for (int i = 0; i < len; ++i) {
            e.push_back({prev, next});
            prev = next++;
        }
    };
    pendant_path(0, a);
    pendant_path(0, b);
    pendant_path(1, c);
    pendant_path(1, 1);
    Graph g = Graph::from_edges(next, std::move(e));
    built_check(g.order() == a + b + c + 4, "H tree order a+b+c+4");
    int deg3 = 0, deg1 = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 3) ++deg3;
        if (g.degree(v) == 1) ++deg1;
    }
    built_check(g.is_tree() && deg3 == 2 && deg1 == 4, "H tree degree profile");
    return g;
}

Graph theta_graph(int a, int b, int c) {
    require(a >= b && b >= c && c >= 0, "theta needs a >= b >= c >= 0");
    require(b >= 1, "theta needs b >= 1");
    // Hubs 0 and 1; three internally disjoint paths with a, b, c inner vertices.
    std::vector<Edge> e;
    int next = 2;
    auto path = [&](int len) {
        if (len == 0) {
            e.push_back({0, 1});
            return;
        }
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, 1});
    };
    path(a);
    path(b);
    path(c);
    Graph g = Graph::from_edges(next, std::move(e));
    built_check(g.order() == a + b + c + 2, "theta order a+b+c+2");
    built_check(g.size() == a + b + c + 3, "theta size");
    built_check(g.degree(0) == 3 && g.degree(1) == 3, "theta hub degrees");
    return g;
}

namespace {

// Shifts a gadget's edges into the global labeling.
void emit(std::vector<Edge>& out, std::span<const Edge> edges, int offset) {
    for (auto [u, v] : edges) out.push_back({u + offset, v + offset});
}

} // namespace

Graph cubic_chain(int n) {
    require(n >= 10 && n % 2 == 0, "cubic chain needs even n >= 10");
    // 5-vertex end block: K4 with one edge subdivided; vertex 4 attaches.
    static const std::vector<Edge> end5{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
    // 7-vertex end block: triangular prism with one edge subdivided; 6 attaches.
    static const std::vector<Edge> end7{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                        {4, 5}, {1, 4}, {2, 5}, {0, 6}, {3, 6}};
    // Middle gadget: K4 minus an edge; 0 and 1 are the degree-2 ports.
    static const std::vector<Edge> gadget{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    int gadgets = n % 4 == 2 ? (n - 10) / 4 : (n - 12) / 4;
    std::vector<Edge> e;
    emit(e, end5, 0);
    int prev_port = 4;
    int base = 5;
    for (int i = 0; i < gadgets; ++i) {
        emit(e, gadget, base);
        e.push_back({prev_port, base});
        prev_port = base + 1;
        base += 4;
    }
    if (n % 4 == 2) {
        emit(e, end5, base);
        e.push_back({prev_port, base + 4});
        base += 5;
    } else {
        emit(e, end7, base);
        e.push_back({prev_port, base + 6});
        base += 7;
    }
    Graph g = Graph::from_edges(base, std::move(e));
    built_check(g.order() == n, "cubic chain order");
    built_check(g.is_connected() && g.min_degree() == 3 && g.max_degree() == 3,
                "cubic chain is connected 3-regular");
    return g;
}

Graph radius_gadget(int n, int r, int s) {
    require(r >= 3, "radius gadget needs r >= 3");
    require(n >= 2 * r, "radius gadget needs n >= 2r");
    require(s >= 1 && s <= n - 2 * r + 1, "radius gadget needs 1 <= s <= n-2r+1");
    int bsize = n - 2 * r + 2 - s;
    // A = clique replacing v1 (s vertices), B = clique replacing v2, then the
    // remaining cycle vertices v3..v2r in order.
    std::vector<Edge> e;
    auto A = [&](int i) { return i; };
    auto B = [&](int i) { return s + i; };
    int cyc = s + bsize; // v3 is cyc, v4 cyc+1, ..., v2r is cyc + 2r - 3
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) e.push_back({A(i), A(j)});
    for (int i = 0; i < bsize; ++i)
        for (int j = i + 1; j < bsize; ++j) e.push_back({B(i), B(j)});
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < bsize; ++j) e.push_back({A(i), B(j)});
    for (int i = 0; i < bsize; ++i) e.push_back({B(i), cyc});
    for (int i = 0; i + 1 < 2 * r - 2; ++i) e.push_back({cyc + i, cyc + i + 1});
    for (int i = 0; i < s; ++i) e.push_back({A(i), cyc + 2 * r - 3});
    Graph g = Graph::from_edges(n, std::move(e));
    built_check(g.order() == n, "radius gadget order");
    built_check(eccentricities(g).radius == r, "radius gadget radius");
    return g;
}

Graph eulerian_c3(int n) {
    require(n >= 5, "C_{n,3} needs n >= 5");
    // Cycle on 0..n-3 plus a triangle sharing vertex 0.
    std::vector<Edge> e;
    int big = n - 2;
    for (int i = 0; i + 1 < big; ++i) e.push_back({i, i + 1});
    e.push_back({big - 1, 0});
    e.push_back({0, big});
    e.push_back({big, big + 1});
    e.push_back({big + 1, 0});
    Graph g = Graph::from_edges(n, std::move(e));
    built_check(g.is_connected(), "C_{n,3} connected");
    for (int v = 0; v < n; ++v) built_check(g.degree(v) % 2 == 0, "C_{n,3} all degrees even");
    return g;
}

Graph dumbbell(int n, int p, int q) {
    require(p >= 1 && q >= 1, "dumbbell needs clique sizes >= 1");
    require(n >= p + q, "dumbbell needs n >= p + q");
    // Cliques 0..p-1 and p..p+q-1; the connecting path leaves vertex 0 and
    // enters vertex p, passing through n - p - q inner vertices.
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.push_back({i, j});
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) e.push_back({p + i, p + j});
    int prev = 0;
    for (int i = 0; i < n - p - q; ++i) {
        e.push_back({prev, p + q + i});
        prev = p + q + i;
    }
    e.push_back({prev, p});
    Graph g = Graph::from_edges(n, std::move(e));
    built_check(g.is_connected() && g.order() == n, "dumbbell connected");
    return g;
}

Graph barbell(int n, int p1, int p2, int q1, int q2) {
    require(p1 >= 1 && p2 >= 1 && q1 >= 1 && q2 >= 1, "barbell needs positive part sizes");
    require(n >= p1 + p2 + q1 + q2, "barbell needs n >= p1+p2+q1+q2");
    std::vector<Edge> e;
    for (int i = 0; i < p1; ++i)
        for (int j = 0; j < p2; ++j) e.push_back({i, p1 + j});
    int qbase = p1 + p2;
    for (int i = 0; i < q1; ++i)
        for (int j = 0; j < q2; ++j) e.push_back({qbase + i, qbase + q1 + j});
    int prev = 0; // a vertex of the first part of the first biclique
    for (int i = 0; i < n - p1 - p2 - q1 - q2; ++i) {
        e.push_back({prev, qbase + q1 + q2 + i});
        prev = qbase + q1 + q2 + i;
    }
    e.push_back({prev, qbase});
    Graph g = Graph::from_edges(n, std::move(e));
    built_check(g.is_connected() && g.order() == n, "barbell connected");
    return g;
}

Graph connectivity_min_graph(int n, int k) {
    require(k >= 1, "connectivity gadget needs k >= 1");
    require(n >= k + 2, "connectivity gadget needs n >= k + 2");
    // K_k joined to K_1 (vertex k) and K_{n-k-1} (the rest).
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.push_back({i, j});
    for (int i = 0; i < k; ++i) e.push_back({i, k});
    for (int i = k + 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    for (int i = 0; i < k; ++i)
        for (int j = k + 1; j < n; ++j) e.push_back({i, j});
    Graph g = Graph::from_edges(n, std::move(e));
    if (n <= 16) built_check(connectivity(g).first == k, "connectivity gadget has kappa = k");
    return g;
}

Graph nanotube60(int k) {
    require(k >= 2, "nanotube needs k >= 2");
    // Cap A: 0..5; rings i = 1..k-1 at 6 + 12(i-1) + j for j = 0..11;
    // cap B: last 6 labels. Ring gaps use alternating parities, caps take the
    // parity the adjacent gap leaves free.
    std::vector<Edge> e;
    auto ring = [&](int i, int j) { return 6 + 12 * (i - 1) + ((j % 12) + 12) % 12; };
    int capB = 6 + 12 * (k - 1);
    for (int t = 0; t < 6; ++t) e.push_back({t, (t + 1) % 6});
    for (int t = 0; t < 6; ++t) e.push_back({capB + t, capB + (t + 1) % 6});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 0; j < 12; ++j) e.push_back({ring(i, j), ring(i, j + 1)});
    for (int i = 1; i <= k - 2; ++i)
        for (int j = i % 2; j < 12; j += 2) e.push_back({ring(i, j), ring(i + 1, j)});
    for (int t = 0; t < 6; ++t) e.push_back({t, ring(1, 2 * t)});
    int parityB = (k - 1) % 2;
    for (int t = 0; t < 6; ++t) e.push_back({capB + t, ring(k - 1, 2 * t + parityB)});
    Graph g = Graph::from_edges(12 * k, std::move(e));
    built_check(g.is_connected() && g.min_degree() == 3 && g.max_degree() == 3,
                "nanotube is connected 3-regular");
    built_check(g.size() == 18 * k, "nanotube edge count");
    built_check(girth(g) == std::optional<int>(5), "nanotube girth 5");
    return g;
}

Graph bipartition_tree_min(int p, int q) {
    require(p >= 1 && q >= 1, "bipartition tree needs p, q >= 1");
    if (p < q) std::swap(p, q);
    // Double star: centers 0 and 1; q-1 leaves under 0, p-1 leaves under 1.
    std::vector<Edge> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < q - 1; ++i) e.push_back({0, next++});
    for (int i = 0; i < p - 1; ++i) e.push_back({1, next++});
    Graph g = Graph::from_edges(p + q, std::move(e));
    std::vector<int> color;
    built_check(g.is_tree() && g.bipartition(color), "double star bipartite");
    int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
    built_check(std::minmax(a, g.order() - a) == std::minmax(p, q),
                "double star bipartition sizes");
    return g;
}

Graph bipartition_tree_max(int p, int q) {
    require(p >= 1 && q >= 1, "bipartition tree needs p, q >= 1");
    if (p < q) std::swap(p, q);
    // Path on 2q-1 vertices, its ends carrying ceil/floor((p-q+1)/2) leaves.
    int len = 2 * q - 1;
    std::vector<Edge> e;
    for (int i = 0; i + 1 < len; ++i) e.push_back({i, i + 1});
    int next = len;
    int extra = p - q + 1;
    for (int i = 0; i < (extra + 1) / 2; ++i) e.push_back({0, next++});
    for (int i = 0; i < extra / 2; ++i) e.push_back({len - 1, next++});
    Graph g = Graph::from_edges(p + q, std::move(e));
    std::vector<int> color;
    built_check(g.is_tree() && g.bipartition(color), "path tree bipartite");
    int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
    built_check(std::minmax(a, g.order() - a) == std::minmax(p, q),
                "path tree bipartition sizes");
    return g;
}

Graph bipartition_unicyclic_min(int p, int q) {
    require(p >= 2 && q >= 2, "unicyclic bipartition needs p, q >= 2");
    if (p < q) std::swap(p, q);
    // 4-cycle 0-1-2-3; p-2 pendants on 0, q-2 pendants on 1.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    int next = 4;
    for (int i = 0; i < p - 2; ++i) e.push_back({0, next++});
    for (int i = 0; i < q - 2; ++i) e.push_back({1, next++});
    Graph g = Graph::from_edges(p + q, std::move(e));
    std::vector<int> color;
    built_check(g.is_connected() && g.cyclomatic_number() == 1 && g.bipartition(color),
                "unicyclic bipartite");
    int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
    built_check(std::minmax(a, g.order() - a) == std::minmax(p, q),
                "unicyclic bipartition sizes");
    return g;
}

Graph subdivided_tree(const Graph& topology, const std::vector<int>& lengths) {
    require(topology.is_tree(), "subdivision wants a tree topology");
    require(lengths.size() == topology.edges().size(), "one length per edge");
    for (int l : lengths) require(l >= 1, "segment lengths must be positive");
    std::vector<Edge> e;
    int next = topology.order();
    for (size_t i = 0; i < lengths.size(); ++i) {
        auto [u, v] = topology.edges()[i];
        int prev = u;
        for (int s = 1; s < lengths[i]; ++s) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, v});
    }
    return Graph::from_edges(next, std::move(e));
}

Graph build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto want = [&](size_t k) {
        require(p.size() == k, spec.tag + " wants " + std::to_string(k) + " parameter(s)");
    };
    auto iv = [&](size_t i) { return static_cast<int>(p[i]); };
    const std::string& t = spec.tag;
    if (t == "path") {
        want(1);
        return path_graph(iv(0));
    }
    if (t == "cycle") {
        want(1);
        return cycle_graph(iv(0));
    }
    if (t == "star") {
        want(1);
        return star_graph(iv(0));
    }
    if (t == "complete") {
        want(1);
        return complete_graph(iv(0));
    }
    if (t == "complete_bipartite" || t == "kpq") {
        want(2);
        return complete_bipartite(iv(0), iv(1));
    }
    if (t == "caterpillar") {
        require(!p.empty(), "caterpillar wants leaf counts");
        std::vector<int> counts(p.begin(), p.end());
        return caterpillar(counts);
    }
    if (t == "gstar" || t == "generalized_star") {
        require(p.size() >= 3, "generalized star wants at least 3 branch lengths");
        std::vector<int> ks(p.begin(), p.end());
        return generalized_star(ks);
    }
    if (t == "H" || t == "h") {
        want(3);
        return h_tree(iv(0), iv(1), iv(2));
    }
    if (t == "theta") {
        want(3);
        return theta_graph(iv(0), iv(1), iv(2));
    }
    if (t == "cubic_chain") {
        want(1);
        return cubic_chain(iv(0));
    }
    if (t == "radius_gadget" || t == "gnrs") {
        want(3);
        return radius_gadget(iv(0), iv(1), iv(2));
    }
    if (t == "eulerian_c3" || t == "cn3") {
        want(1);
        return eulerian_c3(iv(0));
    }
    if (t == "dumbbell") {
        want(3);
        return dumbbell(iv(0), iv(1), iv(2));
    }
    if (t == "barbell") {
        want(5);
        return barbell(iv(0), iv(1), iv(2), iv(3), iv(4));
    }
    if (t == "connectivity_min" || t == "kmin") {
        want(2);
        return connectivity_min_graph(iv(0), iv(1));
    }
    if (t == "nanotube60") {
        want(1);
        return nanotube60(iv(0));
    }
    if (t == "bip_tree_min") {
        want(2);
        return bipartition_tree_min(iv(0), iv(1));
    }
    if (t == "bip_tree_max") {
        want(2);
        return bipartition_tree_max(iv(0), iv(1));
    }
    if (t == "bip_uni_min") {
        want(2);
        return bipartition_unicyclic_min(iv(0), iv(1));
    }
    throw BadParamsError("unknown family tag '" + t + "'");
}

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.tag = text.substr(0, colon);
    require(!spec.tag.empty(), "family spec wants 'tag:params'");
    if (colon != std::string::npos) {
        std::stringstream in(text.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty()) spec.params.push_back(std::stoll(item));
    }
    return spec;
}

std::string FamilySpec::text() const {
    std::ostringstream out;
    out << tag;
    for (size_t i = 0; i < params.size(); ++i) out << (i == 0 ? ':' : ',') << params[i];
    return out.str();
}

// ---- Congruence instances ---------------------------------------------------

namespace {

// Smallest admissible order for a residue class, preferring variety when a
// second value fits under the cap.
int sample_order(std::mt19937_64& rng, int residue, int r, int cap) {
    int base = ((residue % r) + r) % r;
    if (base == 0) base = r;
    std::vector<int> options;
    for (int o = base; o <= cap; o += r) options.push_back(o);
    if (options.empty())
        throw TooLargeError("no admissible part order <= " + std::to_string(cap));
    return options[pick(rng, options.size())];
}

Graph sample_connected(std::mt19937_64& rng, int order, bool tree) {
    if (tree) {
        auto pool = trees(order);
        return pool[pick(rng, pool.size())];
    }
    auto pool = connected_graphs(order);
    return pool[pick(rng, pool.size())];
}

// Random labeled tree on k nodes (uniform via random parent chains; k <= 2
// handled directly).
std::vector<Edge> random_tree_edges(std::mt19937_64& rng, int k) {
    std::vector<Edge> out;
    for (int v = 1; v < k; ++v) out.push_back({static_cast<int>(pick(rng, v)), v});
    return out;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int v) { return up[v] == v ? v : up[v] = find(up[v]); }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

// Glues parts H (fixed) through connectors F along a random superedge tree.
// The connector vertices (v1, v2) of each F are part of the class definition
// and stay fixed across members; only the identification targets vary.
Graph glue_instance(std::mt19937_64& rng, const std::vector<Graph>& hs,
                    const std::vector<Graph>& fs,
                    const std::vector<std::pair<int, int>>& connectors) {
    int ell = static_cast<int>(hs.size());
    std::vector<int> h_base(ell), f_base(fs.size());
    int total = 0;
    for (int i = 0; i < ell; ++i) {
        h_base[i] = total;
        total += hs[i].order();
    }
    for (size_t j = 0; j < fs.size(); ++j) {
        f_base[j] = total;
        total += fs[j].order();
    }
    std::vector<Edge> edges;
    for (int i = 0; i < ell; ++i)
        for (auto [u, v] : hs[i].edges()) edges.push_back({u + h_base[i], v + h_base[i]});
    for (size_t j = 0; j < fs.size(); ++j)
        for (auto [u, v] : fs[j].edges()) edges.push_back({u + f_base[j], v + f_base[j]});

    UnionFind uf(total);
    auto super = random_tree_edges(rng, ell);
    for (size_t j = 0; j < fs.size(); ++j) {
        auto [hx, hy] = super[j];
        auto [v1, v2] = connectors[j];
        int tx = static_cast<int>(pick(rng, hs[hx].order()));
        int ty = static_cast<int>(pick(rng, hs[hy].order()));
        uf.unite(f_base[j] + v1, h_base[hx] + tx);
        uf.unite(f_base[j] + v2, h_base[hy] + ty);
    }
    // Quotient by the identification.
    std::vector<int> label(total, -1);
    int next = 0;
    for (int v = 0; v < total; ++v) {
        int root = uf.find(v);
        if (label[root] == -1) label[root] = next++;
        label[v] = label[root];
    }
    std::vector<Edge> quotient;
    quotient.reserve(edges.size());
    for (auto [u, v] : edges) {
        int a = label[u], b = label[v];
        built_check(a != b, "congruence glue produced a loop");
        quotient.push_back({a, b});
    }
    size_t before = quotient.size();
    Graph g = Graph::from_edges(next, std::move(quotient));
    built_check(static_cast<size_t>(g.size()) == before, "congruence glue kept all edges");
    built_check(g.is_connected(), "congruence instance connected");
    return g;
}

} // namespace

CongruencePair build_congruence_instance(int r, int t, int ell, uint64_t seed,
                                         bool tree_variant) {
    require(r >= 2, "congruence instance needs r >= 2");
    require(t >= 0 && t < r, "congruence instance needs 0 <= t < r");
    require(ell >= 2, "congruence instance needs ell >= 2");
    if (tree_variant) require(t == 0 && r % 2 == 0, "tree variant wants even r, t = 0");

    std::mt19937_64 rng(seed);
    int cap_h = tree_variant ? 12 : 9;
    int cap_f = tree_variant ? 10 : 9;
    std::vector<Graph> hs, fs;
    std::vector<std::pair<int, int>> connectors;
    for (int i = 0; i < ell; ++i)
        hs.push_back(sample_connected(rng, sample_order(rng, -t, r, cap_h), tree_variant));
    for (int j = 0; j < ell - 1; ++j) {
        fs.push_back(sample_connected(rng, sample_order(rng, t + 2, r, cap_f), tree_variant));
        int fo = fs.back().order();
        int v1 = static_cast<int>(pick(rng, fo));
        int v2 = fo == 1 ? v1 : static_cast<int>(pick(rng, fo - 1));
        if (fo > 1 && v2 >= v1) ++v2;
        connectors.push_back({v1, v2});
    }

    CongruencePair out;
    out.r = r;
    out.t = t;
    out.ell = ell;
    out.tree_variant = tree_variant;
    out.g1 = glue_instance(rng, hs, fs, connectors);
    out.g2 = glue_instance(rng, hs, fs, connectors);
    return out;
}

std::pair<Graph, Graph> build_kproportional_pair(uint64_t seed, int k) {
    require(k >= 1, "k-proportional pair needs k >= 1");
    std::mt19937_64 rng(seed);
    // Topology: a tree with no degree-2 vertices, so its edges are exactly
    // the segments of the subdivided trees.
    Graph topology;
    while (true) {
        int nodes = 2 + static_cast<int>(pick(rng, 5)); // 2..6
        Graph cand = Graph::from_edges(nodes, random_tree_edges(rng, nodes));
        bool ok = true;
        for (int v = 0; v < nodes; ++v)
            if (cand.degree(v) == 2) ok = false;
        if (ok) {
            topology = cand;
            break;
        }
    }
    int segments = topology.size();
    std::vector<int> m1(segments), m2(segments);
    long long total = 0;
    for (int i = 0; i < segments; ++i) {
        m1[i] = 1 + static_cast<int>(pick(rng, 4));
        total += m1[i];
    }
    while (true) {
        long long t2 = 0;
        for (int i = 0; i < segments; ++i) {
            m2[i] = 1 + static_cast<int>(pick(rng, 4));
            t2 += m2[i];
        }
        if (t2 == total) break;
    }
    std::vector<int> l1(segments), l2(segments);
    for (int i = 0; i < segments; ++i) {
        l1[i] = k * m1[i];
        l2[i] = k * m2[i];
    }
    Graph t1 = subdivided_tree(topology, l1);
    Graph t2 = subdivided_tree(topology, l2);
    built_check(t1.order() == t2.order(), "k-proportional pair orders agree");
    return {std::move(t1), std::move(t2)};
}

Graph random_block_complete_graph(int order, uint64_t seed) {
    require(order >= 1, "block-complete graph needs order >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int n = 1;
    while (n < order) {
        int grow = 1 + static_cast<int>(pick(rng, std::min(3, order - n)));
        int attach = static_cast<int>(pick(rng, n));
        // New clique on {attach} + [n, n+grow): shares exactly one vertex.
        std::vector<int> verts{attach};
        for (int i = 0; i < grow; ++i) verts.push_back(n + i);
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                edges.push_back({verts[a], verts[b]});
        n += grow;
    }
    Graph g = Graph::from_edges(order, std::move(edges));
    built_check(g.is_connected() && all_blocks_complete(g), "block-complete construction");
    return g;
}

CompositeInstance build_gxy_instance(int r, int p, uint64_t seed) {
    require(r >= 2, "composite instance needs parts of order >= 2");
    require(p >= 2, "composite instance needs p >= 2");
    std::mt19937_64 rng(seed);
    CompositeInstance out;
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i) {
        Graph part = random_block_complete_graph(r, rng());
        for (auto [u, v] : part.edges()) edges.push_back({u + i * r, v + i * r});
        out.parts.push_back(std::move(part));
    }
    auto super = random_tree_edges(rng, p);
    for (auto [x, y] : super) {
        int u = x * r + static_cast<int>(pick(rng, r));
        int v = y * r + static_cast<int>(pick(rng, r));
        edges.push_back({u, v});
    }
    out.composite = Graph::from_edges(p * r, std::move(edges));
    built_check(out.composite.is_connected(), "composite connected");
    return out;
}

} // namespace wienerlab
