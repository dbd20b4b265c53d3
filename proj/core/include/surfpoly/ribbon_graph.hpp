#ifndef SURFPOLY_RIBBON_GRAPH_HPP
#define SURFPOLY_RIBBON_GRAPH_HPP

#include <utility>
#include <vector>

#include "surfpoly/edge_subset.hpp"

namespace surfpoly {

struct MapCounts {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int components = 0;

    friend bool operator==(const MapCounts&, const MapCounts&) = default;
};

/// Abstract multigraph: a vertex count and a list of edges given by their
/// endpoint vertices (loops allowed).
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Orientable ribbon graph (combinatorial map): a permutation pair on
/// half-edges {0,..,2m-1}. sigma gives the counterclockwise next half-edge
/// around the incident vertex, alpha pairs the two half-edges of each edge.
/// After construction alpha is always the canonical pairing alpha(h) = h^1,
/// so edge i consists of half-edges {2i, 2i+1}. Vertices whose half-edges
/// have all been removed by restriction or deletion survive as an explicit
/// isolated-vertex count. Values are immutable; every operation returns a
/// fresh graph.
class RibbonGraph {
  public:
    /// The empty map, optionally with isolated vertices.
    explicit RibbonGraph(int isolated_vertices = 0);

    /// Validates a raw permutation pair and normalizes alpha to the canonical
    /// pairing, relabeling half-edges (and conjugating sigma) if needed.
    static RibbonGraph from_permutations(std::vector<int> sigma, std::vector<int> alpha,
                                         int isolated_vertices = 0);
    /// Same, with alpha already canonical.
    static RibbonGraph from_sigma(std::vector<int> sigma, int isolated_vertices = 0);

    int half_edge_count() const { return static_cast<int>(sigma_.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int isolated_vertex_count() const { return isolated_; }
    EdgeSubset all_edges() const { return EdgeSubset::all(edge_count()); }

    int next_around_vertex(int h) const { return sigma_[h]; }          // sigma
    int partner(int h) const { return h ^ 1; }                         // alpha
    int next_around_face(int h) const { return sigma_[h ^ 1]; }        // sigma∘alpha
    static int edge_of(int h) { return h / 2; }

    /// Vertex ids are sigma-orbit indices, ordered by smallest half-edge;
    /// isolated vertices come after them.
    int vertex_count() const;
    int vertex_of(int h) const;

    /// (v, e, f, c); isolated vertices contribute one vertex, one face and
    /// one component each.
    MapCounts counts() const;
    /// Total genus of the capped surface, summed over components.
    int genus() const;
    bool is_connected() const { return counts().components == 1; }

    /// Endpoints of the edges plus isolated vertices, as an abstract
    /// multigraph.
    Multigraph underlying_graph() const;

    /// Surface dual: sigma* = sigma∘alpha, alpha* = alpha. Edge indices are
    /// preserved, faces and vertices swap.
    RibbonGraph dual() const;

    /// Spanning ribbon subgraph on the edges of H. All vertices are kept;
    /// those losing every half-edge become isolated.
    RibbonGraph restrict_to(EdgeSubset H) const;

    /// Face count of restrict_to(H); isolated vertices count one each.
    int boundary_components(EdgeSubset H) const;

    /// Removes edge e; endpoint vertices losing their last half-edge become
    /// isolated. The capped surface is recomputed, so the genus may drop.
    RibbonGraph delete_edge(int e) const;

    /// Contraction, defined for every edge (loops included) by
    /// dual(delete(dual(G), e)). For a non-loop edge this splices the two
    /// endpoint rotations together.
    RibbonGraph contract_edge(int e) const;

    /// Label sequence invariant under half-edge relabelings that conjugate
    /// sigma and alpha simultaneously. Computed per component by minimizing a
    /// breadth-first relabeling over all starting half-edges.
    std::vector<int> canonical_form() const;
    static RibbonGraph from_canonical_form(const std::vector<int>& form);

    static bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
        return a.sigma_ == b.sigma_ && a.isolated_ == b.isolated_;
    }

  private:
    std::vector<int> sigma_;      // image array; alpha is implicit (h ^ 1)
    std::vector<int> vertex_of_;  // sigma-orbit index per half-edge
    int isolated_ = 0;
};

}  // namespace surfpoly

#endif
