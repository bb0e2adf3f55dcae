#include "hopf/gallery.hpp"

#include <doctest.h>

using namespace hopf;

namespace {

std::unique_ptr<QuantumPlaneContext> f1Context(const Cyc& a1 = Cyc(1), const Cyc& a2 = Cyc(1),
                                               const Cyc& a = Cyc(1)) {
    return buildQuantumPlane(dim32Datum(1, a1, a2, a));
}

} // namespace

TEST_CASE("B(V) with trivial cocycle is a valid pre-bialgebra") {
    auto ctx = f1Context();
    Report rep = validatePreBialgebra(ctx->nichols);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("perturbing xi breaks the Sweedler 1-cocycle condition") {
    auto ctx = f1Context();
    PreBialgebra bad = ctx->nichols;
    int x1 = ctx->mono(1, 0), g1 = ctx->datum.gens[0].g;
    addTo(bad.xi[x1 * bad.dim() + x1], g1, Cyc(1));
    Report rep = validatePreBialgebra(bad);
    CHECK(!rep.ok());
    bool sweedlerFailed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && c.name == "xi is a dual Sweedler 1-cocycle") sweedlerFailed = true;
    CHECK(sweedlerFailed);
}

TEST_CASE("sweedler inverse of the trivial cocycle is trivial") {
    auto ctx = f1Context();
    SweedlerInverseResult sw = sweedlerInverse(ctx->nichols);
    CHECK(sw.checks.ok());
    for (int z = 0; z < ctx->nichols.dim() * ctx->nichols.dim(); ++z)
        CHECK(sw.inverse.col[z] == ctx->nichols.xi[z]);
}

TEST_CASE("smash product unit collapses: (r#1)(1#h) = r#h") {
    auto ctx = f1Context();
    const Presentation& a = ctx->A();
    int dh = ctx->Hgrp->dim();
    for (int r = 0; r < ctx->nichols.dim(); ++r)
        for (int hh = 0; hh < dh; ++hh) {
            Vec got = a.mult[r * dh + ctx->info.unitH][ctx->mono(0, 0) * dh + hh];
            CHECK(got == unitVec(r * dh + hh));
        }
}

TEST_CASE("smash product: (1#h)(s#1) = h1 s # h2") {
    auto ctx = f1Context();
    const Presentation& a = ctx->A();
    const Presentation& h = *ctx->Hgrp;
    int dh = h.dim(), dr = ctx->nichols.dim();
    for (int hh = 0; hh < dh; ++hh)
        for (int s = 0; s < dr; ++s) {
            Vec expect;
            for (const auto& [h12, c] : h.comult[hh]) {
                const Vec& acted = ctx->nichols.R.yd.action[h12 / dh][s];
                for (const auto& [sv, cv] : acted) addTo(expect, sv * dh + (h12 % dh), c * cv);
            }
            CHECK(a.mult[ctx->mono(0, 0) * dh + hh][s * dh + ctx->info.unitH] == expect);
        }
}

TEST_CASE("smash product of the dim-81 plane: (x2#1)(x1#1) = q x1x2 # 1") {
    auto ctx = buildQuantumPlane(dim81Datum(Cyc(1), Cyc(1), Cyc(1)));
    REQUIRE(ctx->buildChecks.ok());
    const Presentation& a = ctx->A();
    int dh = ctx->Hgrp->dim();
    Vec got = a.mult[ctx->biproductIndex(0, 1, ctx->info.unitH)]
                    [ctx->biproductIndex(1, 0, ctx->info.unitH)];
    CHECK(got == scaled(unitVec(ctx->biproductIndex(1, 1, ctx->info.unitH)), ctx->datum.q()));
    (void)dh;
}

TEST_CASE("extraction recovers the pre-bialgebra from its smash product") {
    auto ctx = f1Context();
    Extraction ex = extractPreBialgebra(ctx->smash.datum);
    CHECK(samePreBialgebra(ex.P, ctx->nichols));
    CHECK(static_cast<int>(ex.monomialBasis.size()) == ctx->nichols.dim());
    Report tau = checkTauIdentities(ctx->smash.datum, ex);
    for (const auto& c : tau.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
    Report omega = checkOmegaIsomorphism(ctx->smash.datum, ex);
    for (const auto& c : omega.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("splitting datum axioms reject a broken projection") {
    auto ctx = f1Context();
    SplittingDatum bad = ctx->smash.datum;
    bad.pi.col[ctx->biproductIndex(1, 0, 0)] = unitVec(0); // pi(x1#1) := 1
    CHECK(!validateSplittingDatum(bad).ok());
}

TEST_CASE("trichotomy of the trivial cocycle holds on a connected R") {
    auto ctx = f1Context();
    TrichotomyResult tri;
    Report rep = associativityTrichotomy(ctx->nichols, &tri);
    CHECK(rep.ok());
    CHECK(tri.connected);
    CHECK(tri.associative);
    CHECK(tri.xiActsTrivially);
    CHECK(tri.phiIsIdentity);
    CHECK(tri.agree);
}

TEST_CASE("smash projection formulas") {
    auto ctx = f1Context();
    Report rep = checkSmashProjectionFormulas(ctx->nichols, ctx->smash);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}
