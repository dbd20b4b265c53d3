#ifndef SURFPOLY_INVARIANTS_HPP
#define SURFPOLY_INVARIANTS_HPP

#include <string>
#include <vector>

#include "surfpoly/embedded_graph.hpp"
#include "surfpoly/laurent.hpp"
#include "surfpoly/matroid.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly {

/// Krushkal polynomial over (X, Y, A, B): the subset expansion
///   sum over H of X^(c(H)-c(G)) Y^k(H) A^(s(H)/2) B^(s_perp(H)/2),
/// computed from surface parameters only. Works for non-cellular embeddings.
LaurentPoly krushkal(const EmbeddedGraph& graph);

/// Las Vergnas polynomial over (x, y, z): the Tutte polynomial of the matroid
/// perspective from the bond matroid of the dual map to the cycle matroid of
/// the map, with edges identified by their shared indices. Computed from
/// matroid ranks only, sharing no code path with krushkal().
LaurentPoly las_vergnas(const RibbonGraph& map);

/// Bollobas-Riordan polynomial over (X, Y, Z). The Z exponent is computed as
/// twice the genus of the spanning ribbon subgraph and cross-checked against
/// c(H) - bc(H) + n(H).
LaurentPoly bollobas_riordan(const RibbonGraph& map);

/// las_vergnas(G) == z^g * krushkal(G)(x-1, y-1, z^-1, z); the right-hand
/// side is additionally required to be Laurent-free (a violation throws).
bool verify_lv_specialization(const RibbonGraph& map);

/// bollobas_riordan(G) == Y^g * krushkal(G)(X-1, Y, Y*Z^2, Y^-1), with the
/// same Laurent-free requirement after the Y^g prefactor.
bool verify_br_reduction(const RibbonGraph& map);

/// las_vergnas(dual(G)) == z^(2g) * las_vergnas(G)(y, x, z^-1).
bool verify_lv_duality(const RibbonGraph& map);

/// krushkal(dual(G)) == krushkal(G) with X<->Y and A<->B swapped.
bool verify_krushkal_duality(const RibbonGraph& map);

/// Cross-validates the surface parameters against the matroid ranks for
/// every subset H: both routes to k(H) agree, 2g = r_M(G) - r_M'(G), and
/// g + s(H)/2 - s_perp(H)/2 = r_M(H) - r_M'(H).
bool verify_parameter_identities(const RibbonGraph& map);

/// Behaviour of the four deletion/contraction decompositions at one edge.
struct EditCaseReport {
    int edge = -1;
    bool is_loop = false;
    bool is_bridge = false;
    /// The additive decompositions are only claimed for ordinary edges
    /// (neither loop nor bridge); otherwise the report is informational.
    bool ordinary() const { return !is_loop && !is_bridge; }

    bool krushkal_embedded_deletion = false;  // P_G = P_{G-e,Sigma} + P_{G/e,Sigma}
    bool br_ribbon_deletion = false;          // BR_G = BR_{G-e} + BR_{G/e}
    bool krushkal_recapped_deletion = false;  // P_G ?= P_{G-e,recapped} + P_{G/e,Sigma}
    bool lv_recapped_deletion = false;        // LV_G ?= LV_{G-e,recapped} + LV_{G/e,Sigma}
};

EditCaseReport verify_deletion_contraction_case(const RibbonGraph& map, int edge);

/// One map's verification results, as run by the sweep and the CLI.
struct GraphVerification {
    std::vector<int> canonical;
    bool lv_specialization = false;
    bool br_reduction = false;
    bool lv_duality = false;
    bool krushkal_duality = false;
    bool tutte_recovery = false;
    bool parameter_identities = false;
    bool deletion_contraction = false;  // additive forms at every ordinary edge
    bool matroid_checks = false;        // base-complement duality of C(G), B(G*)
    bool coefficient_sums = false;      // all-ones evaluation equals 2^e

    bool all() const {
        return lv_specialization && br_reduction && lv_duality && krushkal_duality &&
               tutte_recovery && parameter_identities && deletion_contraction &&
               matroid_checks && coefficient_sums;
    }
};

GraphVerification verify_all(const RibbonGraph& map);

struct SweepReport {
    int maps_checked = 0;
    std::vector<GraphVerification> rows;
    bool all_pass = false;
};

/// Runs verify_all over every isomorph-free connected map with at most
/// max_edges edges. Row order is deterministic and independent of workers.
SweepReport sweep_verify(int max_edges, int workers = 1);

}  // namespace surfpoly

#endif
