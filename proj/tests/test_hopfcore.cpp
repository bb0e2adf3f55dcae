#include "hopf/convolution.hpp"

#include <doctest.h>

#include <random>

using namespace hopf;

namespace {

Presentation cyclicGroupAlgebra(long n) {
    return groupAlgebra(GroupData({n}, {"c"}), "K[C" + std::to_string(n) + "]");
}

Vec seededFunctional(std::mt19937_64& eng, int dim) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vec f;
    for (int i = 0; i < dim; ++i) addTo(f, i, Cyc(coeff(eng)));
    return f;
}

} // namespace

TEST_CASE("group algebra K[C9] is a Hopf algebra") {
    Presentation h = cyclicGroupAlgebra(9);
    Report rep = validateStructure(h, Level::Hopf);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
    CHECK(h.verified.hopf);
    CHECK((*h.antipode)[1] == unitVec(8)); // S(c) = c^8
}

TEST_CASE("counit failure carries a witness") {
    // Delta(x) = x (x) x with eps(x) = 0 breaks the counit law at x
    Presentation p;
    p.name = "bad";
    p.basis = {"x"};
    p.initEmpty(1);
    p.comult[0] = unitVec(0);
    p.counit[0] = Cyc(0);
    p.mult[0][0] = unitVec(0);
    p.unit = unitVec(0);
    Report rep = validateStructure(p, Level::Coalgebra);
    CHECK(!rep.ok());
    const CheckRecord* f = rep.firstFailure();
    REQUIRE(f != nullptr);
    CHECK(f->name == "counit laws");
    CHECK(f->witness.find("x") != std::string::npos);
}

TEST_CASE("total integral of a group algebra is the delta at 1") {
    Presentation h = cyclicGroupAlgebra(9);
    IntegralResult lam = totalIntegral(h);
    CHECK(lam.twoSided);
    CHECK(lam.adInvariant);
    CHECK(coeffOf(lam.lambda, 0).isOne()); // Lambda(1) = 1
    for (int k = 1; k < 9; ++k) CHECK(coeffOf(lam.lambda, k).isZero());
}

TEST_CASE("adjoint action of an abelian group algebra is via the counit") {
    Presentation h = cyclicGroupAlgebra(6);
    auto adj = adjointActionTable(h);
    for (int a = 0; a < 6; ++a)
        for (int m = 0; m < 6; ++m) CHECK(adj[a][m] == scaled(unitVec(m), h.counit[a]));
}

TEST_CASE("convolution unit and associativity on seeded functionals") {
    Presentation h = cyclicGroupAlgebra(6);
    CoalgebraView cv(h);
    Vec ue = counitFunctional(cv);
    std::mt19937_64 eng(991);
    for (int trial = 0; trial < 20; ++trial) {
        Vec f = seededFunctional(eng, 6), g = seededFunctional(eng, 6), k = seededFunctional(eng, 6);
        CHECK(convFunctional(cv, f, ue) == f);
        CHECK(convFunctional(cv, ue, f) == f);
        CHECK(convFunctional(cv, convFunctional(cv, f, g), k) ==
              convFunctional(cv, f, convFunctional(cv, g, k)));
    }
}

TEST_CASE("counit functional is its own convolution inverse") {
    Presentation h = cyclicGroupAlgebra(4);
    CoalgebraView cv(h);
    auto inv = convInverseFunctional(cv, counitFunctional(cv));
    REQUIRE(inv.has_value());
    CHECK(*inv == counitFunctional(cv));
}

TEST_CASE("linear-solve inverse on a dim <= 6 coalgebra") {
    Presentation h = cyclicGroupAlgebra(6);
    CoalgebraView cv(h);
    std::mt19937_64 eng(4242);
    std::uniform_int_distribution<int> coeff(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Vec f;
        for (int i = 0; i < 6; ++i) addTo(f, i, Cyc(coeff(eng))); // grouplike values nonzero
        auto inv = convInverseFunctional(cv, f);
        REQUIRE(inv.has_value());
        CHECK(convFunctional(cv, f, *inv) == counitFunctional(cv));
        CHECK(convFunctional(cv, *inv, f) == counitFunctional(cv));
    }
    // a functional vanishing on a grouplike is singular
    Vec bad = counitFunctional(cv);
    bad.erase(2);
    CHECK(!convInverseFunctional(cv, bad).has_value());
}

TEST_CASE("map inverse: geometric series equals the linear solve on a connected domain") {
    // divided-power style connected coalgebra on 1, t, t^2
    Presentation c;
    c.name = "P2";
    c.basis = {"1", "t", "t2"};
    c.initEmpty(3);
    c.unit = unitVec(0);
    c.counit = {Cyc(1), Cyc(0), Cyc(0)};
    c.comult[0] = unitVec(0 * 3 + 0);
    c.comult[1] = unitVec(0 * 3 + 1);
    addTo(c.comult[1], 1 * 3 + 0, Cyc(1));
    c.comult[2] = unitVec(0 * 3 + 2);
    addTo(c.comult[2], 1 * 3 + 1, Cyc(1));
    addTo(c.comult[2], 2 * 3 + 0, Cyc(1));
    // target algebra: K[C4]
    Presentation h = cyclicGroupAlgebra(4);
    CoalgebraView cv(c);
    LinMap f(3, 4);
    f.col[0] = h.unit;
    f.col[1] = unitVec(1);
    addTo(f.col[1], 3, Cyc(2));
    f.col[2] = unitVec(2);

    auto geo = convInverseMap(cv, h, f);
    REQUIRE(geo.has_value());
    InverseOptions noGeo;
    noGeo.geometricCap = 1; // force the solver branch
    auto solved = convInverseMap(cv, h, f, noGeo);
    REQUIRE(solved.has_value());
    CHECK(*geo == *solved);
    CHECK(convMap(cv, h, f, *geo) == unitMap(cv, h));
}

TEST_CASE("functional inverse: geometric series equals the linear solve") {
    // connected three-stage coalgebra as above, functional version
    Presentation c;
    c.basis = {"1", "t", "t2"};
    c.initEmpty(3);
    c.unit = unitVec(0);
    c.counit = {Cyc(1), Cyc(0), Cyc(0)};
    c.comult[0] = unitVec(0);
    c.comult[1] = unitVec(0 * 3 + 1);
    addTo(c.comult[1], 1 * 3 + 0, Cyc(1));
    c.comult[2] = unitVec(0 * 3 + 2);
    addTo(c.comult[2], 1 * 3 + 1, Cyc(1));
    addTo(c.comult[2], 2 * 3 + 0, Cyc(1));
    CoalgebraView cv(c);
    Vec f;
    addTo(f, 0, Cyc(1));
    addTo(f, 1, Cyc(Rat(3, 2)));
    addTo(f, 2, Cyc(-2));
    auto geo = convInverseFunctional(cv, f);
    REQUIRE(geo.has_value());
    InverseOptions noGeo;
    noGeo.geometricCap = 1;
    auto solved = convInverseFunctional(cv, f, noGeo);
    REQUIRE(solved.has_value());
    CHECK(*geo == *solved);
}

TEST_CASE("antipode of the trivial twist is the antipode") {
    Presentation h = cyclicGroupAlgebra(9);
    BilForm eps = counitBilForm(h);
    LinMap s = antipodeOfTwist(h, eps, eps);
    for (int i = 0; i < 9; ++i) CHECK(s.col[i] == (*h.antipode)[i]);
}
