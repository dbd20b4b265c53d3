#ifndef SURFPOLY_MATROID_HPP
#define SURFPOLY_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "surfpoly/edge_subset.hpp"
#include "surfpoly/laurent.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly {

/// Matroid given by its complete rank table over subsets of {0,..,n-1}.
/// The rank axioms are verified on construction: exhaustively for n <= 12,
/// on a deterministic sample above that. Hard cap n <= 24 (table memory).
class RankOracle {
  public:
    static constexpr int kMaxGroundSet = 24;
    static constexpr int kExhaustiveCheck = 12;

    static RankOracle from_table(int ground_set_size, std::vector<std::uint8_t> ranks);

    int size() const { return n_; }
    int rank(std::uint32_t subset) const { return ranks_[subset]; }
    int rank(EdgeSubset subset) const { return ranks_[subset.bits()]; }
    int rank() const { return ranks_.back(); }  // rank of the whole matroid
    int nullity(std::uint32_t subset) const;

    /// r*(H) = |H| + r(E \ H) - r(E).
    RankOracle dual() const;

    /// Minimal dependent subsets, ascending by bitmask. Requires n <= 16.
    std::vector<std::uint32_t> circuits() const;

    /// Every base of the dual is the complement of a base, checked by
    /// enumeration. Requires n <= 12.
    bool bases_complement_dual() const;

    friend bool operator==(const RankOracle&, const RankOracle&) = default;

  private:
    RankOracle(int n, std::vector<std::uint8_t> ranks)
        : n_(n), ranks_(std::move(ranks)) {}

    int n_ = 0;
    std::vector<std::uint8_t> ranks_;
};

/// Cycle matroid: r(H) = v - c(H), components counted over all vertices.
RankOracle cycle_matroid(const Multigraph& graph);
RankOracle cycle_matroid(const RibbonGraph& graph);

/// Bond matroid: dual of the cycle matroid.
RankOracle bond_matroid(const Multigraph& graph);
RankOracle bond_matroid(const RibbonGraph& graph);

/// A matroid perspective M -> M' on a shared ground set:
/// r_M(X) - r_M(Y) >= r_M'(X) - r_M'(Y) for all Y within X. Verified on
/// construction over all nested pairs for n <= 12 (sampled above), plus the
/// circuit-image condition for n <= 10.
class Perspective {
  public:
    const RankOracle& from() const { return from_; }
    const RankOracle& to() const { return to_; }
    int size() const { return from_.size(); }

  private:
    friend Perspective make_perspective(RankOracle M, RankOracle Mp);
    Perspective(RankOracle from, RankOracle to)
        : from_(std::move(from)), to_(std::move(to)) {}

    RankOracle from_, to_;
};

Perspective make_perspective(RankOracle M, RankOracle Mp);

/// Corank-nullity expansion over (x, y).
LaurentPoly tutte(const RankOracle& M);

/// Three-variable Tutte polynomial of a perspective over (x, y, z).
LaurentPoly tutte_perspective(const Perspective& P);

/// Checks that tutte_perspective recovers both ordinary Tutte polynomials:
/// T_M by substituting z -> x-1, and T_M' by clearing denominators of the
/// z -> 1/(y-1) substitution against the (y-1)^(r(M)-r(M')) prefactor.
bool verify_tutte_recovery(const Perspective& P, std::string* diagnostic = nullptr);

}  // namespace surfpoly

#endif
