#ifndef SURFPOLY_ENUMERATE_HPP
#define SURFPOLY_ENUMERATE_HPP

#include <string>
#include <vector>

#include "surfpoly/laurent.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly {

/// All rotation systems of an abstract multigraph: the product over vertices
/// of the (d-1)! cyclic orders of the d incident half-edges. Vertices without
/// incident edges become isolated vertices of every emitted map. Requires at
/// most 6 edges.
std::vector<RibbonGraph> rotation_systems(const Multigraph& graph);

struct EnumOptions {
    bool connected = false;
    bool one_vertex = false;
    bool one_face = false;
    int max_vertices = 0;  // 0 = unlimited
};

/// Isomorph-free list of all ribbon graphs with at most max_edges edges and
/// no isolated vertices, filtered by the options. Maps are emitted as
/// canonical representatives, ordered by edge count and canonical form.
/// Requires max_edges <= 6.
std::vector<RibbonGraph> all_maps(int max_edges, EnumOptions options = {});

enum class MapInvariant { Krushkal, LasVergnas, BollobasRiordan, IsoClass };

/// Canonical string key of an invariant value (polynomial text, or the
/// serialized canonical form for IsoClass).
std::string invariant_key(const RibbonGraph& map, MapInvariant invariant);

struct CollisionPair {
    RibbonGraph first, second;
    std::string equal_value;               // shared invariant
    std::string first_value, second_value; // differing invariant
};

/// All unordered pairs of non-isomorphic maps in the pool that agree on
/// `equal` and differ on `distinct`. Isomorphic duplicates in the pool are
/// discarded first; the output order is deterministic.
std::vector<CollisionPair> search_collisions(const std::vector<RibbonGraph>& pool,
                                             MapInvariant equal, MapInvariant distinct,
                                             int workers = 1);

/// Non-isomorphic pairs sharing a Krushkal polynomial.
std::vector<CollisionPair> search_krushkal_equal(const std::vector<RibbonGraph>& pool,
                                                 int workers = 1);

}  // namespace surfpoly

#endif
