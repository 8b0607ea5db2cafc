#pragma once

#include <string>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Tagged parametric description of a named graph family, with a canonical
/// text syntax "tag:p1,p2,..." used by the CLI.
struct FamilySpec {
    std::string tag;
    std::vector<long long> params;

    static FamilySpec parse(const std::string& text);
    std::string text() const;
};

/// Builds the family member; every builder asserts its structural invariant
/// and throws BadParamsError naming the violated constraint.
Graph build_family(const FamilySpec& spec);

// Direct constructors (vertex labelings documented per builder).
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);     // center 0, leaves 1..n-1
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
Graph caterpillar(const std::vector<int>& leaf_counts); // spine 0..s-1
Graph generalized_star(const std::vector<int>& branch_lengths); // center 0
Graph h_tree(int a, int b, int c);
Graph theta_graph(int a, int b, int c);
Graph cubic_chain(int n);
Graph radius_gadget(int n, int r, int s);
Graph eulerian_c3(int n);
Graph dumbbell(int n, int p, int q);
Graph barbell(int n, int p1, int p2, int q1, int q2);
Graph connectivity_min_graph(int n, int k);
Graph nanotube60(int k);
Graph bipartition_tree_min(int p, int q);
Graph bipartition_tree_max(int p, int q);
Graph bipartition_unicyclic_min(int p, int q);

/// Tree with the topology's edges replaced by paths of the given lengths
/// (edge i becomes a path with lengths[i] edges).
Graph subdivided_tree(const Graph& topology, const std::vector<int>& lengths);

/// Two members of the same congruence class: shared part multisets H (orders
/// = -t mod r) and F (orders = t+2 mod r), different connection choices.
/// The tree variant restricts every part to trees with t = 0.
struct CongruencePair {
    Graph g1, g2;
    int r = 0, t = 0, ell = 0;
    bool tree_variant = false;
};
CongruencePair build_congruence_instance(int r, int t, int ell, uint64_t seed,
                                         bool tree_variant = false);

/// Two trees of equal order with the same number of segments, all segment
/// lengths divisible by k.
std::pair<Graph, Graph> build_kproportional_pair(uint64_t seed, int k);

/// Connected graph on `order` vertices all of whose blocks are cliques.
Graph random_block_complete_graph(int order, uint64_t seed);

/// p block-complete graphs of order r joined into one connected graph by
/// p-1 extra edges; returns the composite and the parts.
struct CompositeInstance {
    Graph composite;
    std::vector<Graph> parts;
};
CompositeInstance build_gxy_instance(int r, int p, uint64_t seed);

} // namespace wienerlab
