#ifndef SURFPOLY_TESTS_SUPPORT_HPP
#define SURFPOLY_TESTS_SUPPORT_HPP

#include <numeric>
#include <random>
#include <vector>

#include "surfpoly/laurent.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly::testing {

/// One vertex, two interleaved loops; cellular in the torus.
inline RibbonGraph two_loop_torus() {
    return RibbonGraph::from_sigma({2, 3, 1, 0});
}

/// Two vertices joined by edges a, b, c with rotation (a b c) at both;
/// cellular in the torus. Edge indices: a=0, b=1, c=2.
inline RibbonGraph theta_torus() {
    return RibbonGraph::from_sigma({2, 3, 4, 5, 0, 1});
}

/// Single loop on the sphere.
inline RibbonGraph loop_sphere() {
    return RibbonGraph::from_sigma({1, 0});
}

/// Single edge joining two vertices, on the sphere.
inline RibbonGraph edge_sphere() {
    return RibbonGraph::from_sigma({0, 1});
}

/// Uniformly random rotation system on m edges (any vertex structure).
inline RibbonGraph random_map(std::mt19937& rng, int edges) {
    std::vector<int> sigma(static_cast<std::size_t>(2 * edges));
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = sigma.size(); i > 1; --i)
        std::swap(sigma[i - 1], sigma[rng() % i]);
    return RibbonGraph::from_sigma(std::move(sigma));
}

/// Random Laurent polynomial: up to `max_terms` terms, exponents in
/// [-max_exp, max_exp], coefficients in [-9, 9].
inline LaurentPoly random_poly(std::mt19937& rng, const VarSet& vars, int max_terms = 4,
                               int max_exp = 3) {
    LaurentPoly p(vars);
    const int terms = static_cast<int>(rng() % (max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        Exponents exps(vars.size());
        for (auto& e : exps)
            e = static_cast<std::int32_t>(rng() % (2 * max_exp + 1)) - max_exp;
        p.add_term(exps, static_cast<long>(rng() % 19) - 9);
    }
    return p;
}

}  // namespace surfpoly::testing

#endif
