#include "surfpoly/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "surfpoly/embedded_graph.hpp"
#include "surfpoly/errors.hpp"
#include "surfpoly/invariants.hpp"
#include "surfpoly/parallel.hpp"

namespace surfpoly {

namespace {

constexpr int kMaxEnumerationEdges = 6;

void emit_rotation_systems(const std::vector<std::vector<int>>& incidence, std::size_t vertex,
                           std::vector<int>& sigma, int isolated,
                           std::vector<RibbonGraph>& out) {
    if (vertex == incidence.size()) {
        out.push_back(RibbonGraph::from_sigma(sigma, isolated));
        return;
    }
    const std::vector<int>& half_edges = incidence[vertex];
    if (half_edges.empty()) {
        emit_rotation_systems(incidence, vertex + 1, sigma, isolated, out);
        return;
    }
    // cyclic orders, each once: anchor the smallest half-edge, permute the rest
    std::vector<int> tail(half_edges.begin() + 1, half_edges.end());
    std::sort(tail.begin(), tail.end());
    do {
        int prev = half_edges[0];
        for (int h : tail) {
            sigma[prev] = h;
            prev = h;
        }
        sigma[prev] = half_edges[0];
        emit_rotation_systems(incidence, vertex + 1, sigma, isolated, out);
    } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

std::vector<RibbonGraph> rotation_systems(const Multigraph& graph) {
    if (graph.edges.size() > kMaxEnumerationEdges)
        throw TooLarge("rotation-system enumeration capped at 6 edges");
    std::vector<std::vector<int>> incidence(static_cast<std::size_t>(graph.vertex_count));
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto& [u, w] = graph.edges[e];
        if (u < 0 || u >= graph.vertex_count || w < 0 || w >= graph.vertex_count)
            throw EdgeOutOfRange("edge endpoint out of range");
        incidence[static_cast<std::size_t>(u)].push_back(static_cast<int>(2 * e));
        incidence[static_cast<std::size_t>(w)].push_back(static_cast<int>(2 * e + 1));
    }
    const int isolated = static_cast<int>(std::count_if(
        incidence.begin(), incidence.end(), [](const auto& v) { return v.empty(); }));

    std::vector<RibbonGraph> out;
    std::vector<int> sigma(2 * graph.edges.size());
    emit_rotation_systems(incidence, 0, sigma, isolated, out);
    return out;
}

// Maps are generated level by level: every map with k+1 edges and no isolated
// vertices arises from one with k edges by inserting a fresh edge, each of
// whose half-edges lands either after an existing half-edge in some rotation
// or on a fresh vertex. Duplicates are rejected by canonical form.
std::vector<RibbonGraph> all_maps(int max_edges, EnumOptions options) {
    if (max_edges < 0 || max_edges > kMaxEnumerationEdges)
        throw TooLarge("map enumeration capped at 6 edges");

    std::vector<RibbonGraph> out;
    auto emit = [&](const RibbonGraph& g) {
        const MapCounts c = g.counts();
        if (options.connected && c.components != 1) return;
        if (options.one_vertex && c.vertices != 1) return;
        if (options.one_face && c.faces != 1) return;
        if (options.max_vertices > 0 && c.vertices > options.max_vertices) return;
        out.push_back(g);
    };

    std::set<std::vector<int>> level{RibbonGraph().canonical_form()};
    for (const auto& form : level) emit(RibbonGraph::from_canonical_form(form));

    for (int m = 1; m <= max_edges; ++m) {
        std::set<std::vector<int>> next;
        for (const auto& form : level) {
            const RibbonGraph base = RibbonGraph::from_canonical_form(form);
            const int n = base.half_edge_count();
            std::vector<int> sigma(static_cast<std::size_t>(n));
            for (int h = 0; h < n; ++h) sigma[h] = base.next_around_vertex(h);
            sigma.push_back(0);
            sigma.push_back(0);
            const int x = n, y = n + 1;
            // p = -1 places the half-edge on a fresh vertex, p = h splices it
            // in directly after h
            for (int p1 = -1; p1 < n; ++p1) {
                std::vector<int> s1 = sigma;
                if (p1 < 0) {
                    s1[x] = x;
                } else {
                    s1[x] = s1[p1];
                    s1[p1] = x;
                }
                for (int p2 = -1; p2 <= n; ++p2) {
                    std::vector<int> s2 = s1;
                    if (p2 < 0) {
                        s2[y] = y;
                    } else {
                        const int after = (p2 == n) ? x : p2;
                        s2[y] = s2[after];
                        s2[after] = y;
                    }
                    next.insert(RibbonGraph::from_sigma(std::move(s2)).canonical_form());
                }
            }
        }
        for (const auto& form : next) emit(RibbonGraph::from_canonical_form(form));
        level = std::move(next);
    }
    return out;
}

std::string invariant_key(const RibbonGraph& map, MapInvariant invariant) {
    switch (invariant) {
        case MapInvariant::Krushkal:
            return krushkal(EmbeddedGraph::cellular(map)).str();
        case MapInvariant::LasVergnas:
            return las_vergnas(map).str();
        case MapInvariant::BollobasRiordan:
            return bollobas_riordan(map).str();
        case MapInvariant::IsoClass: {
            std::string key;
            for (int v : map.canonical_form()) {
                key += std::to_string(v);
                key += ',';
            }
            return key;
        }
    }
    throw Error("unknown invariant");
}

std::vector<CollisionPair> search_collisions(const std::vector<RibbonGraph>& pool,
                                             MapInvariant equal, MapInvariant distinct,
                                             int workers) {
    // dedupe isomorphic pool entries, then order by canonical form
    std::map<std::vector<int>, RibbonGraph> unique;
    for (const RibbonGraph& g : pool) unique.emplace(g.canonical_form(), g);
    std::vector<RibbonGraph> maps;
    maps.reserve(unique.size());
    for (auto& [form, g] : unique) maps.push_back(std::move(g));

    std::vector<std::string> equal_keys(maps.size()), distinct_keys(maps.size());
    parallel_for(maps.size(), workers, [&](std::size_t i) {
        equal_keys[i] = invariant_key(maps[i], equal);
        distinct_keys[i] = invariant_key(maps[i], distinct);
    });

    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < maps.size(); ++i) groups[equal_keys[i]].push_back(i);

    std::vector<CollisionPair> out;
    for (const auto& [value, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const std::size_t i = members[a], j = members[b];
                if (distinct_keys[i] == distinct_keys[j]) continue;
                CollisionPair pair;
                pair.first = maps[i];
                pair.second = maps[j];
                pair.equal_value = value;
                pair.first_value = distinct_keys[i];
                pair.second_value = distinct_keys[j];
                out.push_back(std::move(pair));
            }
        }
    }
    return out;
}

std::vector<CollisionPair> search_krushkal_equal(const std::vector<RibbonGraph>& pool,
                                                 int workers) {
    return search_collisions(pool, MapInvariant::Krushkal, MapInvariant::IsoClass, workers);
}

}  // namespace surfpoly
