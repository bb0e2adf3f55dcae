#include "hopf/gallery.hpp"

#include <doctest.h>

#include <random>

using namespace hopf;

namespace {

// trivial Yetter-Drinfeld structure on K over K[C_n]
BraidedCoalgebra trivialModule(PresPtr h) {
    BraidedCoalgebra k;
    k.yd.H = h;
    k.yd.labels = {"1"};
    k.yd.action.assign(h->dim(), std::vector<Vec>(1));
    for (int hh = 0; hh < h->dim(); ++hh) k.yd.action[hh][0] = scaled(unitVec(0), h->counit[hh]);
    k.yd.coaction = {Vec{}};
    for (const auto& [i, c] : h->unit) addTo(k.yd.coaction[0], i * 1 + 0, c);
    k.comult = {unitVec(0)};
    k.counit = {Cyc(1)};
    k.unit = unitVec(0);
    return k;
}

std::unique_ptr<QuantumPlaneContext> f3Context() {
    return buildQuantumPlane(dim32Datum(3, Cyc(1), Cyc(1), Cyc(1)));
}

Vec seededUpsilon(std::mt19937_64& eng, int dim2) {
    std::uniform_int_distribution<int> coeff(-2, 2), idx(0, dim2 - 1);
    Vec f;
    for (int t = 0; t < 6; ++t) addTo(f, idx(eng), Cyc(coeff(eng)));
    return f;
}

} // namespace

TEST_CASE("trivial module braids by the flip") {
    auto h = std::make_shared<Presentation>(groupAlgebra(GroupData({4}, {"c"})));
    REQUIRE(validateStructure(*h, Level::Hopf).ok());
    BraidedCoalgebra k = trivialModule(h);
    REQUIRE(validateYD(k.yd).ok());
    LinMap c = braiding(k.yd, k.yd);
    CHECK(c == LinMap::identity(1));

    BraidedCoalgebra kk = braidedTensorCoalgebra(k, k);
    CHECK(kk.dim() == 1);
    CHECK(kk.counit[0].isOne());
    CHECK(kk.comult[0] == unitVec(0));
}

TEST_CASE("braiding of the F3 quantum plane") {
    auto ctx = f3Context();
    REQUIRE(ctx->buildChecks.ok());
    const auto& v = ctx->nichols.R.yd;
    LinMap c = braiding(v, v);
    int x1 = ctx->mono(1, 0), x2 = ctx->mono(0, 1);
    // c(x1 (x) x2) = (g1 . x2) (x) x1 = chi2(g1) x2 (x) x1, with chi2(g1) = -1
    Cyc chi21 = ctx->datum.gens[1].chi.eval(ctx->datum.group, ctx->datum.gens[0].g);
    CHECK(chi21 == Cyc(-1));
    CHECK(c.col[x1 * v.dim() + x2] == scaled(unitVec(x2 * v.dim() + x1), chi21));
}

TEST_CASE("c^2 is the identity on the dim-32 quantum plane") {
    for (int family : {1, 2, 3}) {
        auto ctx = buildQuantumPlane(dim32Datum(family, Cyc(1), Cyc(1), Cyc(1)));
        REQUIRE(ctx->buildChecks.ok());
        LinMap c = braiding(ctx->nichols.R.yd, ctx->nichols.R.yd);
        CHECK(compose(c, c) == LinMap::identity(ctx->nichols.dim() * ctx->nichols.dim()));
    }
}

TEST_CASE("braided tensor coalgebra: counit and validation") {
    auto ctx = f3Context();
    const BraidedCoalgebra& r = ctx->nichols.R;
    BraidedCoalgebra rr = braidedTensorCoalgebra(r, r);
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j)
            CHECK(rr.counit[i * r.dim() + j] == r.counit[i] * r.counit[j]);
    Report rep = validateBraidedCoalgebra(rr);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("left-nested triple tensor matches the displayed formula") {
    auto ctx = buildQuantumPlane(dim81Datum(Cyc(1), Cyc(1), Cyc(1)));
    REQUIRE(ctx->buildChecks.ok());
    const BraidedCoalgebra& r = ctx->nichols.R;
    const Presentation& h = *ctx->Hgrp;
    int d = r.dim(), dh = h.dim();
    BraidedCoalgebra rr = braidedTensorCoalgebra(r, r);
    BraidedCoalgebra rrr = braidedTensorCoalgebra(rr, r);

    // Delta(x (x) y (x) z) = (x^1 (x) x^2_(-2) y^1 (x) x^2_(-1) y^2_(-1) z^1)
    //                        (x) (x^2_(0) (x) y^2_(0) (x) z^2)
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                Vec direct;
                for (const auto& [x12, c1] : r.comult[x])
                    for (const auto& [hx, c2] : r.yd.coaction[x12 % d])
                        for (const auto& [hh12, c3] : h.comult[hx / d])
                            for (const auto& [y12, c4] : r.comult[y])
                                for (const auto& [hy, c5] : r.yd.coaction[y12 % d])
                                    for (const auto& [z12, c6] : r.comult[z]) {
                                        const Vec& legB = r.yd.action[hh12 / dh][y12 / d];
                                        const Vec& hprod = h.mult[hh12 % dh][hy / d];
                                        for (const auto& [b, cb] : legB)
                                            for (const auto& [hp, chp] : hprod) {
                                                const Vec& legC = r.yd.action[hp][z12 / d];
                                                for (const auto& [cc, ccc] : legC) {
                                                    int first = (x12 / d) * d * d + b * d + cc;
                                                    int second =
                                                        (hx % d) * d * d + (hy % d) * d + (z12 % d);
                                                    addTo(direct,
                                                          first * (d * d * d) + second,
                                                          c1 * c2 * c3 * c4 * c5 * c6 * cb * chp * ccc);
                                                }
                                            }
                                    }
                CHECK(direct == rrr.comult[(x * d + y) * d + z]);
            }
}

TEST_CASE("Psi: unit, multiplicativity, inverse, colinearity") {
    auto ctx = f3Context();
    const BraidedCoalgebra& r = ctx->nichols.R;
    const Presentation& h = *ctx->Hgrp;
    BraidedCoalgebra rr = braidedTensorCoalgebra(r, r);
    CoalgebraView rrv = rr.view();
    int d2 = rr.dim();

    // Psi(eps) = u_H eps
    LinMap psiEps = psiMap(rr.yd, counitFunctional(rrv));
    CHECK(psiEps == unitMap(rrv, h));

    std::mt19937_64 eng(77);
    for (int trial = 0; trial < 12; ++trial) {
        Vec alpha = seededUpsilon(eng, d2), beta = seededUpsilon(eng, d2);
        // multiplicative for convolution
        LinMap lhs = psiMap(rr.yd, convFunctional(rrv, alpha, beta));
        LinMap rhs = convMap(rrv, h, psiMap(rr.yd, alpha), psiMap(rr.yd, beta));
        CHECK(lhs == rhs);
        // Psi^{-1} Psi = id
        CHECK(psiInverse(h, psiMap(rr.yd, alpha)) == alpha);
        // H-colinearity: Delta_H Psi(alpha) = (H (x) Psi(alpha)) rho
        LinMap p = psiMap(rr.yd, alpha);
        for (int z = 0; z < d2; ++z) {
            Vec lhsC = h.delta(p.col[z]);
            Vec rhsC;
            for (const auto& [hw, c] : rr.yd.coaction[z])
                for (const auto& [hp, cp] : p.col[hw % d2])
                    addTo(rhsC, (hw / d2) * h.dim() + hp, c * cp);
            CHECK(lhsC == rhsC);
        }
    }
}

TEST_CASE("Psi composed with a comodule morphism") {
    // Psi(alpha) o c = Psi(alpha o c) for the braiding c, a comodule map
    auto ctx = f3Context();
    const BraidedCoalgebra& r = ctx->nichols.R;
    BraidedCoalgebra rr = braidedTensorCoalgebra(r, r);
    LinMap c = braiding(r.yd, r.yd);
    std::mt19937_64 eng(5150);
    for (int trial = 0; trial < 8; ++trial) {
        Vec alpha = seededUpsilon(eng, rr.dim());
        LinMap lhs = compose(psiMap(rr.yd, alpha), c);
        Vec alphaC;
        for (int z = 0; z < rr.dim(); ++z) {
            Cyc v(0);
            for (const auto& [w, cw] : c.col[z]) v += cw * coeffOf(alpha, w);
            addTo(alphaC, z, v);
        }
        CHECK(lhs == psiMap(rr.yd, alphaC));
    }
}

TEST_CASE("Phi: unit, multiplicativity, and the central dim-32 cocycle") {
    auto ctx = f3Context();
    const BraidedCoalgebra& r = ctx->nichols.R;
    const Presentation& h = *ctx->Hgrp;
    BraidedCoalgebra rr = braidedTensorCoalgebra(r, r);
    CoalgebraView rrv = rr.view();
    ModuleView m{r.dim(), &r.yd.action};

    CHECK(phiMap(rrv, m, unitMap(rrv, h)) == LinMap::identity(rr.dim() * r.dim()));

    std::mt19937_64 eng(31337);
    for (int trial = 0; trial < 8; ++trial) {
        LinMap alpha = psiMap(rr.yd, seededUpsilon(eng, rr.dim()));
        LinMap beta = psiMap(rr.yd, seededUpsilon(eng, rr.dim()));
        CHECK(phiMap(rrv, m, convMap(rrv, h, alpha, beta)) ==
              compose(phiMap(rrv, m, alpha), phiMap(rrv, m, beta)));
    }

    // the extracted dim-32 cocycle has central image, so Phi(xi) = id
    LiftingResult lift = buildLifting(ctx->datum);
    Extraction ex = extractPreBialgebra(lift.datum);
    BraidedCoalgebra rrL = braidedTensorCoalgebra(ex.P.R, ex.P.R);
    ModuleView mL{ex.P.dim(), &ex.P.R.yd.action};
    CHECK(phiMap(rrL.view(), mL, ex.P.xiAsMap()) ==
          LinMap::identity(rrL.dim() * ex.P.dim()));
}

TEST_CASE("validate_yd flags a broken structure") {
    auto ctx = f3Context();
    YDStructure bad = ctx->nichols.R.yd;
    // rho(x1) := g1 (x) x2 breaks the counit law of the coaction
    bad.coaction[ctx->mono(1, 0)] =
        unitVec(ctx->datum.gens[0].g * bad.dim() + ctx->mono(0, 1));
    Report rep = validateYD(bad);
    CHECK(!rep.ok());

    // breaking the action associativity is caught too
    YDStructure bad2 = ctx->nichols.R.yd;
    bad2.action[ctx->datum.gens[0].g][ctx->mono(1, 0)] = scaled(unitVec(ctx->mono(1, 0)), Cyc(2));
    CHECK(!validateYD(bad2).ok());
}
