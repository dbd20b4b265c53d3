#include "surfpoly/invariants.hpp"

#include <numeric>

#include "surfpoly/enumerate.hpp"
#include "surfpoly/errors.hpp"
#include "surfpoly/parallel.hpp"

namespace surfpoly {

namespace {

/// All subsets of `within`, in increasing binary-counter order over its bits.
std::vector<EdgeSubset> subsets_of(EdgeSubset within) {
    const std::vector<int> bits = within.elements();
    std::vector<EdgeSubset> out;
    out.reserve(std::size_t{1} << bits.size());
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << bits.size()); ++u) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if ((u >> i) & 1) mask |= std::uint64_t{1} << bits[i];
        out.push_back(EdgeSubset(mask));
    }
    return out;
}

Perspective lv_perspective(const RibbonGraph& map) {
    return make_perspective(bond_matroid(map.dual()), cycle_matroid(map));
}

}  // namespace

LaurentPoly krushkal(const EmbeddedGraph& graph) {
    const VarSet& vars = VarSet::krushkal();
    const int c_g = graph.subgraph_components(graph.marked());
    LaurentPoly out(vars);
    for (EdgeSubset h : subsets_of(graph.marked())) {
        const int s = graph.neighborhood_double_genus(h);
        const int s_perp = graph.complement_double_genus(h);
        const Exponents exps{graph.subgraph_components(h) - c_g, graph.kernel_dim(h),
                             s / 2, s_perp / 2};
        for (std::int32_t e : exps)
            if (e < 0) throw Error("negative exponent in the Krushkal expansion");
        out.add_term(exps, 1);
    }
    return out;
}

LaurentPoly las_vergnas(const RibbonGraph& map) {
    return tutte_perspective(lv_perspective(map));
}

LaurentPoly bollobas_riordan(const RibbonGraph& map) {
    const VarSet& vars = VarSet::bollobas_riordan();
    const LaurentPoly x1 = LaurentPoly::parse("X-1", vars);
    std::vector<LaurentPoly> px{LaurentPoly::constant(vars, 1)};
    for (int i = 1; i <= map.edge_count(); ++i) px.push_back(px.back() * x1);

    const EmbeddedGraph cell = EmbeddedGraph::cellular(map);
    const int v = map.vertex_count();
    const int c_g = cell.subgraph_components(map.all_edges());
    LaurentPoly out(vars);
    for (EdgeSubset h : subsets_of(map.all_edges())) {
        const int c_h = cell.subgraph_components(h);
        const int nullity = h.count() - v + c_h;
        const int double_genus = 2 * map.restrict_to(h).genus();
        const int bc = map.boundary_components(h);
        if (double_genus != c_h - bc + nullity)
            throw Error("ribbon subgraph genus disagrees with c - bc + n");
        LaurentPoly term = px[static_cast<std::size_t>(c_h - c_g)];
        term *= LaurentPoly::monomial(vars, {0, nullity, double_genus}, 1);
        out += term;
    }
    return out;
}

bool verify_lv_specialization(const RibbonGraph& map) {
    const VarSet& vars = VarSet::las_vergnas();
    const LaurentPoly lv = las_vergnas(map);
    const LaurentPoly p = krushkal(EmbeddedGraph::cellular(map));
    LaurentPoly rhs = p.substitute(vars, {{"X", LaurentPoly::parse("x-1", vars)},
                                          {"Y", LaurentPoly::parse("y-1", vars)},
                                          {"A", LaurentPoly::variable(vars, "z", -1)},
                                          {"B", LaurentPoly::variable(vars, "z")}});
    rhs *= LaurentPoly::variable(vars, "z", map.genus());
    if (!rhs.is_polynomial())
        throw Error("z^g prefactor failed to clear the negative z exponents");
    return lv == rhs;
}

bool verify_br_reduction(const RibbonGraph& map) {
    const VarSet& vars = VarSet::bollobas_riordan();
    const LaurentPoly br = bollobas_riordan(map);
    const LaurentPoly p = krushkal(EmbeddedGraph::cellular(map));
    LaurentPoly rhs = p.substitute(vars, {{"X", LaurentPoly::parse("X-1", vars)},
                                          {"Y", LaurentPoly::variable(vars, "Y")},
                                          {"A", LaurentPoly::parse("Y*Z^2", vars)},
                                          {"B", LaurentPoly::variable(vars, "Y", -1)}});
    rhs *= LaurentPoly::variable(vars, "Y", map.genus());
    if (!rhs.is_polynomial())
        throw Error("Y^g prefactor failed to clear the negative Y exponents");
    return br == rhs;
}

bool verify_lv_duality(const RibbonGraph& map) {
    const VarSet& vars = VarSet::las_vergnas();
    const LaurentPoly lhs = las_vergnas(map.dual());
    LaurentPoly rhs = las_vergnas(map).substitute(
        vars, {{"x", LaurentPoly::variable(vars, "y")},
               {"y", LaurentPoly::variable(vars, "x")},
               {"z", LaurentPoly::variable(vars, "z", -1)}});
    rhs *= LaurentPoly::variable(vars, "z", 2 * map.genus());
    return lhs == rhs;
}

bool verify_krushkal_duality(const RibbonGraph& map) {
    const VarSet& vars = VarSet::krushkal();
    const LaurentPoly lhs = krushkal(EmbeddedGraph::cellular(map.dual()));
    const LaurentPoly rhs = krushkal(EmbeddedGraph::cellular(map))
                                .substitute(vars, {{"X", LaurentPoly::variable(vars, "Y")},
                                                   {"Y", LaurentPoly::variable(vars, "X")},
                                                   {"A", LaurentPoly::variable(vars, "B")},
                                                   {"B", LaurentPoly::variable(vars, "A")}});
    return lhs == rhs;
}

bool verify_parameter_identities(const RibbonGraph& map) {
    const EmbeddedGraph cell = EmbeddedGraph::cellular(map);
    const Perspective p = lv_perspective(map);
    const int g = map.genus();
    const EdgeSubset full = map.all_edges();

    if (2 * g != p.from().rank(full) - p.to().rank(full)) return false;
    for (EdgeSubset h : subsets_of(full)) {
        if (cell.kernel_dim(h) != cell.kernel_dim_via_nullity(h)) return false;
        const int s = cell.neighborhood_double_genus(h);
        const int s_perp = cell.complement_double_genus(h);
        if (g + s / 2 - s_perp / 2 != p.from().rank(h) - p.to().rank(h)) return false;
    }
    return true;
}

EditCaseReport verify_deletion_contraction_case(const RibbonGraph& map, int edge) {
    if (edge < 0 || edge >= map.edge_count()) throw EdgeOutOfRange("edge index out of range");
    EditCaseReport report;
    report.edge = edge;
    report.is_loop = map.vertex_of(2 * edge) == map.vertex_of(2 * edge + 1);

    const EmbeddedGraph cell = EmbeddedGraph::cellular(map);
    const EdgeSubset rest = map.all_edges().without(edge);
    report.is_bridge =
        cell.subgraph_components(rest) != cell.subgraph_components(map.all_edges());

    const EmbeddedGraph deleted = cell.delete_marked(edge);
    const RibbonGraph contracted = map.contract_edge(edge);

    const LaurentPoly p = krushkal(cell);
    const LaurentPoly p_del = krushkal(deleted);
    const LaurentPoly p_con = krushkal(EmbeddedGraph::cellular(contracted));
    const LaurentPoly p_recap = krushkal(deleted.recap());
    report.krushkal_embedded_deletion = (p == p_del + p_con);
    report.krushkal_recapped_deletion = (p == p_recap + p_con);

    const LaurentPoly br = bollobas_riordan(map);
    const LaurentPoly br_del = bollobas_riordan(map.delete_edge(edge));
    const LaurentPoly br_con = bollobas_riordan(contracted);
    report.br_ribbon_deletion = (br == br_del + br_con);

    const LaurentPoly lv = las_vergnas(map);
    const LaurentPoly lv_recap = las_vergnas(deleted.recap().carrier());
    const LaurentPoly lv_con = las_vergnas(contracted);
    report.lv_recapped_deletion = (lv == lv_recap + lv_con);
    return report;
}

GraphVerification verify_all(const RibbonGraph& map) {
    GraphVerification row;
    row.canonical = map.canonical_form();
    row.lv_specialization = verify_lv_specialization(map);
    row.br_reduction = verify_br_reduction(map);
    row.lv_duality = verify_lv_duality(map);
    row.krushkal_duality = verify_krushkal_duality(map);
    row.tutte_recovery = verify_tutte_recovery(lv_perspective(map));
    row.parameter_identities = verify_parameter_identities(map);

    row.deletion_contraction = true;
    for (int e = 0; e < map.edge_count(); ++e) {
        const EditCaseReport r = verify_deletion_contraction_case(map, e);
        if (r.ordinary() && !(r.krushkal_embedded_deletion && r.br_ribbon_deletion))
            row.deletion_contraction = false;
    }

    row.matroid_checks = cycle_matroid(map).bases_complement_dual() &&
                         bond_matroid(map.dual()).bases_complement_dual();

    // Each expansion must count its 2^e subsets: the Krushkal summands are
    // monic monomials, so its plain coefficient sum works; the corank-nullity
    // style expansions need every (x-1)/(y-1) factor evaluated to 1.
    const mpz_class expected = mpz_class(1) << map.edge_count();
    row.coefficient_sums =
        krushkal(EmbeddedGraph::cellular(map)).coefficient_sum() == expected &&
        las_vergnas(map).evaluate({{"x", 2}, {"y", 2}, {"z", 1}}) == expected &&
        bollobas_riordan(map).evaluate({{"X", 2}, {"Y", 1}, {"Z", 1}}) == expected;
    return row;
}

SweepReport sweep_verify(int max_edges, int workers) {
    EnumOptions options;
    options.connected = true;
    const std::vector<RibbonGraph> pool = all_maps(max_edges, options);

    SweepReport report;
    report.maps_checked = static_cast<int>(pool.size());
    report.rows.resize(pool.size());
    parallel_for(pool.size(), workers,
                 [&](std::size_t i) { report.rows[i] = verify_all(pool[i]); });
    report.all_pass = std::all_of(report.rows.begin(), report.rows.end(),
                                  [](const GraphVerification& r) { return r.all(); });
    return report;
}

}  // namespace surfpoly
