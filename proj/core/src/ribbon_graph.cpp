#include "surfpoly/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surfpoly/errors.hpp"

namespace surfpoly {

namespace {

void check_permutation(const std::vector<int>& perm, const char* name) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(perm.size(), 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
            throw NotAPermutation(std::string(name) + " is not a permutation");
        seen[v] = 1;
    }
}

/// Number of orbits of an image-array permutation.
int orbit_count(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int orbits = 0;
    for (int h = 0; h < static_cast<int>(perm.size()); ++h) {
        if (seen[h]) continue;
        ++orbits;
        for (int t = h; !seen[t]; t = perm[t]) seen[t] = 1;
    }
    return orbits;
}

}  // namespace

RibbonGraph::RibbonGraph(int isolated_vertices) : isolated_(isolated_vertices) {
    if (isolated_vertices < 0) throw SemanticError("negative isolated-vertex count");
}

RibbonGraph RibbonGraph::from_sigma(std::vector<int> sigma, int isolated_vertices) {
    if (sigma.size() % 2 != 0) throw OddHalfEdgeCount("half-edge count must be even");
    check_permutation(sigma, "sigma");
    if (isolated_vertices < 0) throw SemanticError("negative isolated-vertex count");
    RibbonGraph g(isolated_vertices);
    g.sigma_ = std::move(sigma);

    g.vertex_of_.assign(g.sigma_.size(), -1);
    int next_vertex = 0;
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (g.vertex_of_[h] >= 0) continue;
        for (int t = h; g.vertex_of_[t] < 0; t = g.sigma_[t]) g.vertex_of_[t] = next_vertex;
        ++next_vertex;
    }
    return g;
}

RibbonGraph RibbonGraph::from_permutations(std::vector<int> sigma, std::vector<int> alpha,
                                           int isolated_vertices) {
    if (sigma.size() != alpha.size())
        throw NotAPermutation("sigma and alpha must have the same length");
    if (sigma.size() % 2 != 0) throw OddHalfEdgeCount("half-edge count must be even");
    check_permutation(sigma, "sigma");
    check_permutation(alpha, "alpha");
    const int n = static_cast<int>(sigma.size());
    for (int h = 0; h < n; ++h) {
        if (alpha[h] == h) throw AlphaHasFixedPoint("alpha fixes half-edge " + std::to_string(h));
        if (alpha[alpha[h]] != h) throw AlphaNotInvolution("alpha is not an involution");
    }

    // Relabel so that the pairs of alpha become {2i, 2i+1}, taken in order of
    // their smaller member; sigma is conjugated by the same relabeling.
    std::vector<int> relabel(sigma.size());
    int next = 0;
    for (int h = 0; h < n; ++h) {
        if (h > alpha[h]) continue;
        relabel[h] = next++;
        relabel[alpha[h]] = next++;
    }
    std::vector<int> new_sigma(sigma.size());
    for (int h = 0; h < n; ++h) new_sigma[relabel[h]] = relabel[sigma[h]];
    return from_sigma(std::move(new_sigma), isolated_vertices);
}

int RibbonGraph::vertex_count() const {
    return (vertex_of_.empty() ? 0 : *std::max_element(vertex_of_.begin(), vertex_of_.end()) + 1) +
           isolated_;
}

int RibbonGraph::vertex_of(int h) const {
    if (h < 0 || h >= half_edge_count()) throw EdgeOutOfRange("half-edge out of range");
    return vertex_of_[h];
}

MapCounts RibbonGraph::counts() const {
    MapCounts c;
    c.edges = edge_count();

    std::vector<int> phi(sigma_.size());
    for (int h = 0; h < half_edge_count(); ++h) phi[h] = sigma_[h ^ 1];
    c.faces = orbit_count(phi) + isolated_;
    c.vertices = vertex_count();

    // components of the group generated by sigma and alpha
    std::vector<int> parent(sigma_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int h = 0; h < half_edge_count(); ++h) {
        for (int t : {sigma_[h], h ^ 1}) {
            const int a = find(h), b = find(t);
            if (a != b) {
                parent[a] = b;
                ++merges;
            }
        }
    }
    c.components = (half_edge_count() - merges) + isolated_;
    return c;
}

int RibbonGraph::genus() const {
    // Per component the capped surface satisfies v - e + f = 2 - 2g; isolated
    // vertices are spheres. The total is computed per component so that a
    // negative or fractional genus in any component is caught.
    std::vector<int> comp(sigma_.size(), -1);
    int ncomp = 0;
    for (int h = 0; h < half_edge_count(); ++h) {
        if (comp[h] >= 0) continue;
        std::vector<int> stack{h};
        comp[h] = ncomp;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int u : {sigma_[t], t ^ 1}) {
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        ++ncomp;
    }

    std::vector<int> v(ncomp, 0), e(ncomp, 0), f(ncomp, 0);
    std::vector<char> seen(sigma_.size(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
        if (h % 2 == 0) ++e[comp[h]];
        if (!seen[h]) {
            ++v[comp[h]];
            for (int t = h; !seen[t]; t = sigma_[t]) seen[t] = 1;
        }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
        if (seen[h]) continue;
        ++f[comp[h]];
        for (int t = h; !seen[t]; t = sigma_[t ^ 1]) seen[t] = 1;
    }

    int total = 0;
    for (int i = 0; i < ncomp; ++i) {
        const int euler = v[i] - e[i] + f[i];
        if ((2 - euler) % 2 != 0 || euler > 2)
            throw Error("corrupted map: component Euler characteristic " +
                        std::to_string(euler));
        total += (2 - euler) / 2;
    }
    return total;
}

Multigraph RibbonGraph::underlying_graph() const {
    Multigraph g;
    g.vertex_count = vertex_count();
    g.edges.reserve(edge_count());
    for (int e = 0; e < edge_count(); ++e)
        g.edges.emplace_back(vertex_of_[2 * e], vertex_of_[2 * e + 1]);
    return g;
}

RibbonGraph RibbonGraph::dual() const {
    std::vector<int> star(sigma_.size());
    for (int h = 0; h < half_edge_count(); ++h) star[h] = sigma_[h ^ 1];
    return from_sigma(std::move(star), isolated_);
}

RibbonGraph RibbonGraph::restrict_to(EdgeSubset H) const {
    if (!H.fits(edge_count())) throw EdgeOutOfRange("edge subset out of range");

    // Edges of H are reindexed in increasing order; the canonical pairing is
    // preserved because both half-edges of an edge move together.
    std::vector<int> new_index(sigma_.size(), -1);
    int kept = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (!H.contains(e)) continue;
        new_index[2 * e] = 2 * kept;
        new_index[2 * e + 1] = 2 * kept + 1;
        ++kept;
    }

    std::vector<int> new_sigma(2 * static_cast<std::size_t>(kept));
    for (int h = 0; h < half_edge_count(); ++h) {
        if (new_index[h] < 0) continue;
        int t = sigma_[h];
        while (new_index[t] < 0) t = sigma_[t];
        new_sigma[new_index[h]] = new_index[t];
    }

    // vertices whose half-edges were all dropped become isolated
    std::vector<char> vertex_kept(static_cast<std::size_t>(vertex_count() - isolated_), 0);
    for (int h = 0; h < half_edge_count(); ++h)
        if (new_index[h] >= 0) vertex_kept[vertex_of_[h]] = 1;
    const int newly_isolated = static_cast<int>(std::count(
        vertex_kept.begin(), vertex_kept.end(), 0));

    return from_sigma(std::move(new_sigma), isolated_ + newly_isolated);
}

int RibbonGraph::boundary_components(EdgeSubset H) const {
    return restrict_to(H).counts().faces;
}

RibbonGraph RibbonGraph::delete_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw EdgeOutOfRange("edge index out of range");
    return restrict_to(all_edges().without(e));
}

RibbonGraph RibbonGraph::contract_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw EdgeOutOfRange("edge index out of range");
    return dual().delete_edge(e).dual();
}

// -- canonical form -----------------------------------------------------------
//
// For one component, a start half-edge determines a breadth-first relabeling
// (visiting sigma(h) then alpha(h)); its label sequence is the relabeled
// sigma and alpha image arrays. Taking the minimum over all starts yields a
// sequence invariant under simultaneous conjugation. Components are
// canonicalized separately and sorted.

namespace {

std::vector<int> component_sequence(const std::vector<int>& sigma,
                                    const std::vector<int>& members, int start) {
    std::vector<int> label(sigma.size(), -1);
    std::vector<int> order;
    order.reserve(members.size());
    label[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int h = order[i];
        for (int t : {sigma[h], h ^ 1}) {
            if (label[t] < 0) {
                label[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<int> seq;
    seq.reserve(2 * order.size());
    for (int h : order) seq.push_back(label[sigma[h]]);
    for (int h : order) seq.push_back(label[h ^ 1]);
    return seq;
}

}  // namespace

std::vector<int> RibbonGraph::canonical_form() const {
    // component decomposition over half-edges
    std::vector<int> comp(sigma_.size(), -1);
    std::vector<std::vector<int>> members;
    for (int h = 0; h < half_edge_count(); ++h) {
        if (comp[h] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{h};
        comp[h] = id;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            members[id].push_back(t);
            for (int u : {sigma_[t], t ^ 1}) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }

    std::vector<std::vector<int>> comp_forms;
    comp_forms.reserve(members.size());
    for (const auto& m : members) {
        std::vector<int> best;
        for (int start : m) {
            auto seq = component_sequence(sigma_, m, start);
            if (best.empty() || seq < best) best = std::move(seq);
        }
        best.insert(best.begin(), static_cast<int>(m.size()));
        comp_forms.push_back(std::move(best));
    }
    std::sort(comp_forms.begin(), comp_forms.end());

    std::vector<int> form{isolated_, static_cast<int>(comp_forms.size())};
    for (const auto& cf : comp_forms) form.insert(form.end(), cf.begin(), cf.end());
    return form;
}

RibbonGraph RibbonGraph::from_canonical_form(const std::vector<int>& form) {
    if (form.size() < 2) throw Error("malformed canonical form");
    const int isolated = form[0];
    const int ncomp = form[1];
    std::size_t pos = 2;
    std::vector<int> sigma, alpha;
    int base = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (pos >= form.size()) throw Error("malformed canonical form");
        const int size = form[pos++];
        if (size <= 0 || pos + 2 * static_cast<std::size_t>(size) > form.size())
            throw Error("malformed canonical form");
        sigma.resize(static_cast<std::size_t>(base + size));
        alpha.resize(static_cast<std::size_t>(base + size));
        for (int i = 0; i < size; ++i) sigma[base + i] = base + form[pos + i];
        for (int i = 0; i < size; ++i) alpha[base + i] = base + form[pos + size + i];
        pos += 2 * static_cast<std::size_t>(size);
        base += size;
    }
    if (pos != form.size()) throw Error("malformed canonical form");
    return from_permutations(std::move(sigma), std::move(alpha), isolated);
}

bool RibbonGraph::isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    return a.canonical_form() == b.canonical_form();
}

}  // namespace surfpoly
