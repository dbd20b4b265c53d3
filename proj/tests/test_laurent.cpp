#include <doctest.h>

#include <random>

#include "support.hpp"
#include "surfpoly/errors.hpp"
#include "surfpoly/laurent.hpp"

using namespace surfpoly;

namespace {
const VarSet kZ{"z"};
const VarSet kXY{"x", "y"};

LaurentPoly pz(const std::string& text) { return LaurentPoly::parse(text, kZ); }
}  // namespace

TEST_CASE("ring arithmetic on small cases") {
    CHECK((pz("1+z") * pz("1+z")).str() == "z^2+2*z+1");
    CHECK((pz("z^2") * pz("z^-2")).str() == "1");
    CHECK((pz("z^2+2*z+1") + pz("-z^2-2*z-1")).is_zero());
    CHECK((pz("z") - pz("z")).str() == "0");
}

TEST_CASE("canonical text ordering") {
    const VarSet krush = VarSet::krushkal();
    CHECK(LaurentPoly::parse("B+2+A", krush).str() == "A+B+2");
    CHECK(LaurentPoly::parse("3+3*B+X*B+A", krush).str() == "X*B+A+3*B+3");
    CHECK(LaurentPoly::parse("1 + z + z", kZ).str() == pz("2*z+1").str());
    CHECK(pz("z^-1 + 1").str() == "1+z^-1");
}

TEST_CASE("parse accepts the documented grammar") {
    CHECK(pz("z^2+2*z+1").term_count() == 3);
    CHECK(LaurentPoly::parse("Y^2*Z^2 + 3*Y + X + 2", VarSet::bollobas_riordan())
              .coefficient_sum() == 7);
    CHECK(pz("-z+1").str() == "-z+1");
    CHECK(pz("- 2 * z ^ -3").str() == "-2*z^-3");
    CHECK_THROWS_AS(pz("w+1"), UnknownVariable);
    CHECK_THROWS_AS(pz("z+"), SyntaxError);
    CHECK_THROWS_AS(pz("z 2"), SyntaxError);
    CHECK_THROWS_AS(pz(""), SyntaxError);
}

TEST_CASE("format is idempotent through parse") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const LaurentPoly p = testing::random_poly(rng, kXY);
        const std::string text = p.str();
        CHECK(LaurentPoly::parse(text, kXY).str() == text);
    }
}

TEST_CASE("addition and multiplication require matching variable sets") {
    CHECK_THROWS_AS(pz("z") + LaurentPoly::parse("x", kXY), VarSetMismatch);
    CHECK_THROWS_AS(pz("z") * LaurentPoly::parse("x", kXY), VarSetMismatch);
}

TEST_CASE("substitution merges the torus examples") {
    // B+2+A with A -> z^-1, B -> z, then times z, gives z^2+2z+1
    const VarSet krush = VarSet::krushkal();
    const LaurentPoly p = LaurentPoly::parse("B+2+A", krush);
    const VarSet lv = VarSet::las_vergnas();
    LaurentPoly image = p.substitute(lv, {{"X", LaurentPoly::parse("x-1", lv)},
                                          {"Y", LaurentPoly::parse("y-1", lv)},
                                          {"A", LaurentPoly::variable(lv, "z", -1)},
                                          {"B", LaurentPoly::variable(lv, "z")}});
    image *= LaurentPoly::variable(lv, "z");
    CHECK(image.str() == "z^2+2*z+1");
}

TEST_CASE("substitution corner cases") {
    const LaurentPoly p = pz("z^-2+z");
    // identity substitution
    CHECK(p.substitute(kZ, {{"z", LaurentPoly::variable(kZ, "z")}}) == p);
    // a negative exponent needs an invertible monomial
    CHECK_THROWS_AS(p.substitute(kZ, {{"z", pz("z+1")}}),
                    NonInvertibleSubstituentForNegativeExponent);
    CHECK_THROWS_AS(p.substitute(kZ, {{"z", pz("2*z")}}),
                    NonInvertibleSubstituentForNegativeExponent);
    CHECK_THROWS_AS(pz("z").substitute(kZ, {}), MissingAssignment);
    // polynomial substituents are fine for nonnegative exponents
    CHECK(pz("z^2").substitute(kXY, {{"z", LaurentPoly::parse("x+y", kXY)}}).str() ==
          "x^2+2*x*y+y^2");
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    const VarSet target{"u", "v"};
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly p = testing::random_poly(rng, kXY);
        const LaurentPoly q = testing::random_poly(rng, kXY);
        // invertible monomial images keep negative exponents legal
        const std::vector<std::pair<std::string, LaurentPoly>> phi{
            {"x", LaurentPoly::monomial(target, {1, -1}, ((rng() & 1) != 0u) ? 1 : -1)},
            {"y", LaurentPoly::monomial(target, {0, 2}, 1)}};
        CHECK((p * q).substitute(target, phi) ==
              p.substitute(target, phi) * q.substitute(target, phi));
        CHECK((p + q).substitute(target, phi) ==
              p.substitute(target, phi) + q.substitute(target, phi));
    }
}

TEST_CASE("exact rational evaluation") {
    CHECK(pz("z^2+2*z+1").evaluate({{"z", 1}}) == 4);
    CHECK(LaurentPoly::parse("3+3*B+X*B+A", VarSet::krushkal())
              .evaluate({{"X", 1}, {"Y", 1}, {"A", 1}, {"B", 1}}) == 8);
    CHECK(LaurentPoly::parse("x+y", kXY).evaluate({{"x", 2}, {"y", 3}}) == 5);
    CHECK(pz("z^-2").evaluate({{"z", mpq_class(2, 3)}}) == mpq_class(9, 4));
    CHECK_THROWS_AS(pz("z^-1").evaluate({{"z", 0}}), ZeroAtNegativeExponent);
}

TEST_CASE("exact division") {
    const LaurentPoly y1 = LaurentPoly::parse("y-1", kXY);
    const LaurentPoly p = LaurentPoly::parse("x^2+3*x+1", kXY);
    CHECK((p * y1 * y1).divide_exact(y1 * y1) == p);
    CHECK_THROWS_AS(LaurentPoly::parse("y", kXY).divide_exact(y1), NotDivisible);
    CHECK_THROWS_AS(p.divide_exact(LaurentPoly(kXY)), NotDivisible);
    CHECK_THROWS_AS(p.divide_exact(LaurentPoly::parse("2*y-2", kXY)), NotDivisible);
}

TEST_CASE("pow handles negative exponents of invertible monomials") {
    CHECK(pz("z^2").pow(-2).str() == "z^-4");
    CHECK(pz("-z").pow(-3).str() == "-z^-3");
    CHECK_THROWS_AS(pz("z+1").pow(-1), NonInvertibleSubstituentForNegativeExponent);
}

TEST_CASE("coefficients are exact big integers") {
    // (x+1)^64 has a central coefficient far beyond 64 bits
    const LaurentPoly p = LaurentPoly::parse("x+1", kXY).pow(64);
    CHECK(p.coefficient_sum() == mpz_class(1) << 64);
    CHECK(p.coefficient(Exponents{32, 0}) == mpz_class("1832624140942590534"));
}
