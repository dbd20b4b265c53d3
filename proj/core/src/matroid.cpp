#include "surfpoly/matroid.hpp"

#include <bit>
#include <numeric>
#include <random>
#include <sstream>

#include "surfpoly/errors.hpp"

namespace surfpoly {

namespace {

std::string mask_str(std::uint32_t mask) {
    std::ostringstream out;
    out << "0x" << std::hex << mask;
    return out.str();
}

void check_axioms(int n, const std::vector<std::uint8_t>& r) {
    if (r[0] != 0) throw NotAMatroid("R1 fails: rank of the empty set is nonzero");

    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    auto check_r2 = [&](std::uint32_t h, int y) {
        const std::uint32_t hy = h | (1u << y);
        if (r[hy] != r[h] && r[hy] != r[h] + 1)
            throw NotAMatroid("R2 fails at H=" + mask_str(h) + ", y=" + std::to_string(y));
    };
    auto check_r3 = [&](std::uint32_t h, int y, int z) {
        const std::uint32_t hy = h | (1u << y), hz = h | (1u << z);
        if (r[hy] == r[h] && r[hz] == r[h] && r[hy | hz] != r[h])
            throw NotAMatroid("R3 fails at H=" + mask_str(h) + ", y=" + std::to_string(y) +
                              ", z=" + std::to_string(z));
    };

    if (n <= RankOracle::kExhaustiveCheck) {
        for (std::uint32_t h = 0; h <= full; ++h) {
            for (int y = 0; y < n; ++y) {
                if (h & (1u << y)) continue;
                check_r2(h, y);
                for (int z = y + 1; z < n; ++z) {
                    if (h & (1u << z)) continue;
                    check_r3(h, y, z);
                }
            }
            if (h == full) break;
        }
    } else {
        std::mt19937 rng(0x5eedu);  // fixed seed keeps construction deterministic
        for (int i = 0; i < 200000; ++i) {
            const std::uint32_t h = rng() & full;
            const int y = static_cast<int>(rng() % n), z = static_cast<int>(rng() % n);
            if (!(h & (1u << y))) check_r2(h, y);
            if (y != z && !(h & (1u << y)) && !(h & (1u << z))) check_r3(h, y, z);
        }
    }
}

}  // namespace

RankOracle RankOracle::from_table(int ground_set_size, std::vector<std::uint8_t> ranks) {
    if (ground_set_size < 0 || ground_set_size > kMaxGroundSet)
        throw GroundSetTooLarge("ground set size " + std::to_string(ground_set_size) +
                                " exceeds the cap of " + std::to_string(kMaxGroundSet));
    if (ranks.size() != (std::size_t{1} << ground_set_size))
        throw NotAMatroid("rank table size does not match the ground set");
    check_axioms(ground_set_size, ranks);
    return RankOracle(ground_set_size, std::move(ranks));
}

int RankOracle::nullity(std::uint32_t subset) const {
    return std::popcount(subset) - ranks_[subset];
}

RankOracle RankOracle::dual() const {
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    std::vector<std::uint8_t> table(ranks_.size());
    for (std::uint32_t h = 0; h < ranks_.size(); ++h)
        table[h] = static_cast<std::uint8_t>(std::popcount(h) + ranks_[full & ~h] - rank());
    RankOracle d = from_table(n_, std::move(table));
    if (d.rank() + rank() != n_) throw NotAMatroid("dual rank identity violated");
    return d;
}

std::vector<std::uint32_t> RankOracle::circuits() const {
    if (n_ > 16) throw GroundSetTooLarge("circuit enumeration capped at 16 elements");
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    for (std::uint32_t h = 1; h <= full; ++h) {
        if (ranks_[h] >= std::popcount(h)) continue;  // independent
        bool minimal = true;
        for (std::uint32_t b = h; b != 0 && minimal; b &= b - 1) {
            const std::uint32_t sub = h & ~(b & (~b + 1));
            if (ranks_[sub] < std::popcount(sub)) minimal = false;
        }
        if (minimal) out.push_back(h);
        if (h == full) break;
    }
    return out;
}

bool RankOracle::bases_complement_dual() const {
    if (n_ > kExhaustiveCheck)
        throw GroundSetTooLarge("base enumeration capped at 12 elements");
    const RankOracle d = dual();
    const std::uint32_t full = (n_ == 0) ? 0 : (std::uint32_t{1} << n_) - 1;
    for (std::uint32_t h = 0;; ++h) {
        const bool base_of_dual =
            d.ranks_[h] == std::popcount(h) && d.ranks_[h] == d.rank();
        const std::uint32_t c = full & ~h;
        const bool complement_of_base =
            ranks_[c] == std::popcount(c) && ranks_[c] == rank();
        if (base_of_dual != complement_of_base) return false;
        if (h == full) break;
    }
    return true;
}

RankOracle cycle_matroid(const Multigraph& graph) {
    const int m = static_cast<int>(graph.edges.size());
    if (m > RankOracle::kMaxGroundSet)
        throw GroundSetTooLarge("cycle matroid capped at 24 edges");
    std::vector<std::uint8_t> table(std::size_t{1} << m);
    std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count));
    for (std::uint32_t h = 0; h < table.size(); ++h) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (std::uint32_t b = h; b != 0; b &= b - 1) {
            const auto& [u, w] = graph.edges[static_cast<std::size_t>(std::countr_zero(b))];
            const int a = find(u), c = find(w);
            if (a != c) {
                parent[a] = c;
                ++merges;
            }
        }
        table[h] = static_cast<std::uint8_t>(merges);  // v - c(H)
    }
    return RankOracle::from_table(m, std::move(table));
}

RankOracle cycle_matroid(const RibbonGraph& graph) {
    return cycle_matroid(graph.underlying_graph());
}

RankOracle bond_matroid(const Multigraph& graph) {
    return cycle_matroid(graph).dual();
}

RankOracle bond_matroid(const RibbonGraph& graph) {
    return cycle_matroid(graph).dual();
}

Perspective make_perspective(RankOracle M, RankOracle Mp) {
    if (M.size() != Mp.size())
        throw GroundSetMismatch("perspective requires a shared ground set");
    const int n = M.size();
    const std::uint32_t full = (n == 0) ? 0 : (std::uint32_t{1} << n) - 1;

    auto check_pair = [&](std::uint32_t x, std::uint32_t y) {
        if (M.rank(x) - M.rank(y) < Mp.rank(x) - Mp.rank(y))
            throw NotAPerspective("rank inequality fails at X=" + mask_str(x) +
                                  ", Y=" + mask_str(y));
    };

    if (n <= RankOracle::kExhaustiveCheck) {
        for (std::uint32_t x = 0;; ++x) {
            // all subsets y of x, descending
            std::uint32_t y = x;
            while (true) {
                check_pair(x, y);
                if (y == 0) break;
                y = (y - 1) & x;
            }
            if (x == full) break;
        }
    } else {
        std::mt19937 rng(0xfacadeu);
        for (int i = 0; i < 200000; ++i) {
            const std::uint32_t x = rng() & full;
            check_pair(x, rng() & x);
        }
    }

    // redundant check: each circuit of M must map to a union of circuits of
    // M', i.e. no element of it may be a coloop of M' restricted to it
    if (n <= 10) {
        for (std::uint32_t c : M.circuits()) {
            for (std::uint32_t b = c; b != 0; b &= b - 1) {
                const std::uint32_t without = c & ~(b & (~b + 1));
                if (Mp.rank(c) != Mp.rank(without))
                    throw NotAPerspective("circuit " + mask_str(c) +
                                          " is not a union of circuits of the target");
            }
        }
    }
    return Perspective(std::move(M), std::move(Mp));
}

LaurentPoly tutte(const RankOracle& M) {
    const VarSet& vars = VarSet::tutte();
    const LaurentPoly x1 = LaurentPoly::parse("x-1", vars);
    const LaurentPoly y1 = LaurentPoly::parse("y-1", vars);
    std::vector<LaurentPoly> px{LaurentPoly::constant(vars, 1)}, py{px};
    for (int i = 1; i <= M.size(); ++i) {
        px.push_back(px.back() * x1);
        py.push_back(py.back() * y1);
    }
    LaurentPoly out(vars);
    const std::uint32_t full = (M.size() == 0) ? 0 : (std::uint32_t{1} << M.size()) - 1;
    for (std::uint32_t h = 0;; ++h) {
        out += px[static_cast<std::size_t>(M.rank() - M.rank(h))] *
               py[static_cast<std::size_t>(M.nullity(h))];
        if (h == full) break;
    }
    return out;
}

LaurentPoly tutte_perspective(const Perspective& P) {
    const VarSet& vars = VarSet::las_vergnas();
    const LaurentPoly x1 = LaurentPoly::parse("x-1", vars);
    const LaurentPoly y1 = LaurentPoly::parse("y-1", vars);
    std::vector<LaurentPoly> px{LaurentPoly::constant(vars, 1)}, py{px};
    for (int i = 1; i <= P.size(); ++i) {
        px.push_back(px.back() * x1);
        py.push_back(py.back() * y1);
    }
    const RankOracle& m = P.from();
    const RankOracle& mp = P.to();
    LaurentPoly out(vars);
    const std::uint32_t full = (P.size() == 0) ? 0 : (std::uint32_t{1} << P.size()) - 1;
    for (std::uint32_t h = 0;; ++h) {
        const int corank = m.rank() - m.rank(h);
        const int corank_p = mp.rank() - mp.rank(h);
        LaurentPoly term = px[static_cast<std::size_t>(corank_p)] *
                           py[static_cast<std::size_t>(m.nullity(h))];
        term *= LaurentPoly::variable(vars, "z", corank - corank_p);
        out += term;
        if (h == full) break;
    }
    return out;
}

bool verify_tutte_recovery(const Perspective& P, std::string* diagnostic) {
    const VarSet& txy = VarSet::tutte();
    const VarSet& txyz = VarSet::las_vergnas();
    const LaurentPoly t3 = tutte_perspective(P);
    const LaurentPoly tm = tutte(P.from());
    const LaurentPoly tmp = tutte(P.to());

    // T_M(x,y) = T_{M->M'}(x,y,x-1)
    const LaurentPoly via_z = t3.substitute(
        txy, {{"x", LaurentPoly::variable(txy, "x")},
              {"y", LaurentPoly::variable(txy, "y")},
              {"z", LaurentPoly::parse("x-1", txy)}});
    if (via_z != tm) {
        if (diagnostic)
            *diagnostic = "z -> x-1 substitution gives " + via_z.str() + ", expected " + tm.str();
        return false;
    }

    // T_M'(x,y) = (y-1)^(r(M)-r(M')) T_{M->M'}(x,y,1/(y-1)), checked with
    // denominators cleared: z^D T(x,y,1/z) is Laurent-free because the z
    // degree never exceeds D, and substituting z -> y-1 then compares exactly.
    const int d = P.from().rank() - P.to().rank();
    LaurentPoly flipped = t3.substitute(
        txyz, {{"x", LaurentPoly::variable(txyz, "x")},
               {"y", LaurentPoly::variable(txyz, "y")},
               {"z", LaurentPoly::variable(txyz, "z", -1)}});
    flipped *= LaurentPoly::variable(txyz, "z", d);
    if (!flipped.is_polynomial()) {
        if (diagnostic) *diagnostic = "cleared form has a negative exponent";
        return false;
    }
    const LaurentPoly via_y = flipped.substitute(
        txy, {{"x", LaurentPoly::variable(txy, "x")},
              {"y", LaurentPoly::variable(txy, "y")},
              {"z", LaurentPoly::parse("y-1", txy)}});
    if (via_y != tmp) {
        if (diagnostic)
            *diagnostic =
                "cleared z -> 1/(y-1) substitution gives " + via_y.str() + ", expected " +
                tmp.str();
        return false;
    }
    return true;
}

}  // namespace surfpoly
