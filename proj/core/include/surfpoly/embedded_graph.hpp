#ifndef SURFPOLY_EMBEDDED_GRAPH_HPP
#define SURFPOLY_EMBEDDED_GRAPH_HPP

#include "surfpoly/edge_subset.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly {

/// A graph G embedded in an orientable surface Sigma, cellularly or not.
/// Sigma is the capped surface of a cellular carrier map and G is the
/// spanning subgraph of the carrier on the marked edges. Every parameter of
/// the Krushkal expansion is computed from the carrier by orbit counting.
class EmbeddedGraph {
  public:
    EmbeddedGraph(RibbonGraph carrier, EdgeSubset marked);
    static EmbeddedGraph cellular(RibbonGraph map);

    const RibbonGraph& carrier() const { return carrier_; }
    const RibbonGraph& dual_carrier() const { return dual_; }
    EdgeSubset marked() const { return marked_; }
    bool is_cellular() const { return marked_ == carrier_.all_edges(); }
    int marked_count() const { return marked_.count(); }

    /// c(H): components of the spanning subgraph on H (all carrier vertices).
    int subgraph_components(EdgeSubset H) const;

    /// k(H): dimension of the kernel of the map induced on first homology by
    /// H inside Sigma. Computed as the component surplus of the complementary
    /// spanning subgraph of the dual carrier.
    int kernel_dim(EdgeSubset H) const;

    /// Cross-check route for k(H) via the nullity of the cycle matroid:
    /// n(H) - g - s(H)/2 + s_perp(H)/2. Requires a cellular embedding.
    int kernel_dim_via_nullity(EdgeSubset H) const;

    /// s(H): twice the genus of a regular neighborhood of H. Always even.
    int neighborhood_double_genus(EdgeSubset H) const;

    /// s_perp(H): twice the genus of the surface left after removing a
    /// regular neighborhood of H from Sigma. Always even.
    int complement_double_genus(EdgeSubset H) const;

    /// Removes e from the marked set; the ambient surface is unchanged, so
    /// the result may be non-cellular.
    EmbeddedGraph delete_marked(int e) const;

    /// Re-caps the regular neighborhood of the marked subgraph: the marked
    /// spanning ribbon subgraph becomes its own cellular carrier.
    EmbeddedGraph recap() const;

    friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
        return a.carrier_ == b.carrier_ && a.marked_ == b.marked_;
    }

  private:
    void require_within_marked(EdgeSubset H) const;

    RibbonGraph carrier_;
    RibbonGraph dual_;
    EdgeSubset marked_;
};

}  // namespace surfpoly

#endif
