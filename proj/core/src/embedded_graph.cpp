#include "surfpoly/embedded_graph.hpp"

#include <numeric>
#include <vector>

#include "surfpoly/errors.hpp"

namespace surfpoly {

namespace {

/// Components of the spanning subgraph (all vertices of g, edges of H).
int spanning_components(const RibbonGraph& g, EdgeSubset H) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int e : H.elements()) {
        const int a = find(g.vertex_of(2 * e)), b = find(g.vertex_of(2 * e + 1));
        if (a != b) {
            parent[a] = b;
            ++merges;
        }
    }
    return n - merges;
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(RibbonGraph carrier, EdgeSubset marked)
    : carrier_(std::move(carrier)), dual_(carrier_.dual()), marked_(marked) {
    if (!marked.fits(carrier_.edge_count()))
        throw EdgeOutOfRange("marked set exceeds the carrier's edges");
}

EmbeddedGraph EmbeddedGraph::cellular(RibbonGraph map) {
    EdgeSubset all = map.all_edges();
    return EmbeddedGraph(std::move(map), all);
}

void EmbeddedGraph::require_within_marked(EdgeSubset H) const {
    if (!H.subset_of(marked_))
        throw HNotWithinMarked("subset contains edges outside the marked set");
}

int EmbeddedGraph::subgraph_components(EdgeSubset H) const {
    require_within_marked(H);
    return spanning_components(carrier_, H);
}

int EmbeddedGraph::kernel_dim(EdgeSubset H) const {
    require_within_marked(H);
    const EdgeSubset removed = H.complement_in(carrier_.edge_count());
    return spanning_components(dual_, removed) - carrier_.counts().components;
}

int EmbeddedGraph::kernel_dim_via_nullity(EdgeSubset H) const {
    if (!is_cellular())
        throw NotCellular("nullity route for k(H) requires a cellular embedding");
    require_within_marked(H);
    const int nullity = H.count() - carrier_.vertex_count() + subgraph_components(H);
    return nullity - carrier_.genus() - neighborhood_double_genus(H) / 2 +
           complement_double_genus(H) / 2;
}

int EmbeddedGraph::neighborhood_double_genus(EdgeSubset H) const {
    require_within_marked(H);
    return 2 * carrier_.restrict_to(H).genus();
}

int EmbeddedGraph::complement_double_genus(EdgeSubset H) const {
    require_within_marked(H);
    // Removing a neighborhood of H from Sigma deformation-retracts onto the
    // spanning ribbon subgraph of the dual carrier on the complement of H,
    // taken in the carrier's full edge set.
    const EdgeSubset rest = H.complement_in(carrier_.edge_count());
    return 2 * dual_.restrict_to(rest).genus();
}

EmbeddedGraph EmbeddedGraph::delete_marked(int e) const {
    if (e < 0 || e >= carrier_.edge_count() || !marked_.contains(e))
        throw EdgeNotMarked("edge is not marked");
    return EmbeddedGraph(carrier_, marked_.without(e));
}

EmbeddedGraph EmbeddedGraph::recap() const {
    return cellular(carrier_.restrict_to(marked_));
}

}  // namespace surfpoly
