#include <doctest.h>

#include <random>

#include "support.hpp"
#include "surfpoly/errors.hpp"
#include "surfpoly/matroid.hpp"

using namespace surfpoly;
using namespace surfpoly::testing;

namespace {

RankOracle free_matroid(int n) {
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::uint32_t h = 0; h < table.size(); ++h)
        table[h] = static_cast<std::uint8_t>(std::popcount(h));
    return RankOracle::from_table(n, std::move(table));
}

RankOracle rank_zero_matroid(int n) {
    return RankOracle::from_table(n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

}  // namespace

TEST_CASE("axioms are checked on construction") {
    CHECK_THROWS_AS(RankOracle::from_table(1, {1, 1}), NotAMatroid);           // R1
    CHECK_THROWS_AS(RankOracle::from_table(1, {0, 2}), NotAMatroid);           // R2
    CHECK_THROWS_AS(RankOracle::from_table(2, {0, 2, 1, 2}), NotAMatroid);     // R2
    CHECK(RankOracle::from_table(2, {0, 1, 1, 1}).rank() == 1);  // U_{1,2} is fine
}

TEST_CASE("R3 violation is caught") {
    // r({0}) = r({1}) = 0 but r({0,1}) = 1 breaks R3
    CHECK_THROWS_AS(RankOracle::from_table(2, {0, 0, 0, 1}), NotAMatroid);
}

TEST_CASE("cycle matroid ranks") {
    const RankOracle theta = cycle_matroid(theta_torus());
    CHECK(theta.rank() == 1);
    const int expected[] = {0, 1, 1, 1, 1, 1, 1, 1};
    for (std::uint32_t h = 0; h < 8; ++h) CHECK(theta.rank(h) == expected[h]);

    CHECK(cycle_matroid(loop_sphere()).rank() == 0);

    // a forest is a free matroid
    const Multigraph path{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(cycle_matroid(path) == free_matroid(3));
}

TEST_CASE("dual matroid") {
    CHECK(free_matroid(4).dual() == rank_zero_matroid(4));
    std::mt19937 rng(47);
    for (int i = 0; i < 50; ++i) {
        const RankOracle m = cycle_matroid(random_map(rng, 1 + static_cast<int>(rng() % 5)));
        CHECK(m.dual().dual() == m);
        CHECK(m.rank() + m.dual().rank() == m.size());
        CHECK(m.bases_complement_dual());
    }
}

TEST_CASE("bond matroids of the torus examples") {
    // dual map of the theta graph has one vertex and three loops
    const RankOracle m = bond_matroid(theta_torus().dual());
    CHECK(m.rank() == 3);
    for (std::uint32_t h = 0; h < 8; ++h) CHECK(m.rank(h) == std::popcount(h));

    const RankOracle m1 = bond_matroid(two_loop_torus().dual());
    CHECK(m1.rank() == 2);
    for (std::uint32_t h = 0; h < 4; ++h) CHECK(m1.rank(h) == std::popcount(h));

    const Multigraph theta_abstract{2, {{0, 1}, {0, 1}, {0, 1}}};
    CHECK(bond_matroid(theta_abstract).rank() == 2);
    CHECK(bond_matroid(Multigraph{1, {{0, 0}}}) == free_matroid(1));
}

TEST_CASE("circuits are the minimal dependent sets") {
    const RankOracle triangle = cycle_matroid(Multigraph{3, {{0, 1}, {1, 2}, {2, 0}}});
    CHECK(triangle.circuits() == std::vector<std::uint32_t>{0b111});

    CHECK(free_matroid(4).circuits().empty());

    // the theta graph: any two parallel edges close a cycle
    CHECK(cycle_matroid(theta_torus()).circuits() ==
          std::vector<std::uint32_t>{0b011, 0b101, 0b110});

    // its bond matroid has the single bond {a, b, c}
    CHECK(bond_matroid(theta_torus()).circuits() == std::vector<std::uint32_t>{0b111});
}

TEST_CASE("perspective validation") {
    const RankOracle m = bond_matroid(theta_torus().dual());
    const RankOracle mp = cycle_matroid(theta_torus());
    CHECK_NOTHROW(make_perspective(m, mp));
    CHECK_NOTHROW(make_perspective(m, m));
    CHECK_THROWS_AS(make_perspective(rank_zero_matroid(2), free_matroid(2)),
                    NotAPerspective);
    CHECK_THROWS_AS(make_perspective(free_matroid(1), free_matroid(2)),
                    GroundSetMismatch);
}

TEST_CASE("tutte polynomials of tiny matroids") {
    CHECK(tutte(free_matroid(1)).str() == "x");          // coloop
    CHECK(tutte(rank_zero_matroid(1)).str() == "y");     // loop
    CHECK(tutte(cycle_matroid(Multigraph{3, {{0, 1}, {1, 2}, {2, 0}}})).str() ==
          "x^2+x+y");
}

TEST_CASE("tutte polynomial of a perspective") {
    const Perspective ex1 = make_perspective(bond_matroid(two_loop_torus().dual()),
                                             cycle_matroid(two_loop_torus()));
    CHECK(tutte_perspective(ex1).str() == "z^2+2*z+1");

    const Perspective ex3 = make_perspective(bond_matroid(theta_torus().dual()),
                                             cycle_matroid(theta_torus()));
    // 3z + 3z^2 + (x-1)z^2 + 1, expanded
    CHECK(tutte_perspective(ex3) ==
          LaurentPoly::parse("3*z+2*z^2+x*z^2+1", VarSet::las_vergnas()));

    // the equal-pair perspective collapses to the ordinary Tutte polynomial
    std::mt19937 rng(53);
    for (int i = 0; i < 30; ++i) {
        const RankOracle m = cycle_matroid(random_map(rng, 1 + static_cast<int>(rng() % 4)));
        const LaurentPoly t3 = tutte_perspective(make_perspective(m, m));
        const LaurentPoly t2 = tutte(m);
        LaurentPoly lifted(VarSet::las_vergnas());
        for (const auto& [exps, coeff] : t2.terms())
            lifted.add_term({exps[0], exps[1], 0}, coeff);
        CHECK(t3 == lifted);
    }
}

TEST_CASE("tutte recovery identities") {
    const Perspective ex1 = make_perspective(bond_matroid(two_loop_torus().dual()),
                                             cycle_matroid(two_loop_torus()));
    CHECK(tutte(ex1.from()).str() == "x^2");
    CHECK(tutte(ex1.to()).str() == "y^2");
    CHECK(verify_tutte_recovery(ex1));

    const Perspective ex3 = make_perspective(bond_matroid(theta_torus().dual()),
                                             cycle_matroid(theta_torus()));
    CHECK(verify_tutte_recovery(ex3));

    std::mt19937 rng(59);
    for (int i = 0; i < 30; ++i) {
        const RankOracle m = cycle_matroid(random_map(rng, 1 + static_cast<int>(rng() % 4)));
        std::string diag;
        CHECK(verify_tutte_recovery(make_perspective(m, m), &diag));
    }
}

TEST_CASE("subset-count evaluation of perspective expansions") {
    std::mt19937 rng(61);
    for (int i = 0; i < 30; ++i) {
        const RibbonGraph g = random_map(rng, 1 + static_cast<int>(rng() % 4));
        const Perspective p =
            make_perspective(bond_matroid(g.dual()), cycle_matroid(g));
        CHECK(tutte_perspective(p).evaluate({{"x", 2}, {"y", 2}, {"z", 1}}) ==
              mpz_class(1) << g.edge_count());
    }
}

TEST_CASE("ground set caps") {
    CHECK_THROWS_AS(free_matroid(25), GroundSetTooLarge);
    CHECK_THROWS_AS(RankOracle::from_table(3, {0, 1, 1}), NotAMatroid);
}
