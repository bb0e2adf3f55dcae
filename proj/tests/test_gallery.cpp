#include "hopf/gallery.hpp"

#include <doctest.h>

using namespace hopf;

TEST_CASE("datum invariants") {
    QLSDatum d = dim32Datum(1, Cyc(1), Cyc(1), Cyc(1));
    CHECK(validateQLSDatum(d).ok());
    CHECK(d.q() == Cyc(-1));

    // breaking chi1 chi2 = eps while keeping a nonzero is rejected
    QLSDatum bad = d;
    bad.gens[1].chi = Character{{2}};
    CHECK(!validateQLSDatum(bad).ok());

    QLSDatum d81 = dim81Datum(Cyc(1), Cyc(1), Cyc(1));
    CHECK(validateQLSDatum(d81).ok());
    CHECK(d81.q() == Cyc::rootOfUnity(3));
}

TEST_CASE("Nichols algebra of the dim-81 plane") {
    auto ctx = buildQuantumPlane(dim81Datum(Cyc(1), Cyc(1), Cyc(1)));
    REQUIRE(ctx->buildChecks.ok());
    CHECK(ctx->nichols.dim() == 9); // dim B(V) = r^2
    const BraidedCoalgebra& r = ctx->nichols.R;
    int d = r.dim();
    Cyc q = ctx->datum.q();

    // x_i primitive in the braided sense
    for (int which : {0, 1}) {
        int xi = which == 0 ? ctx->mono(1, 0) : ctx->mono(0, 1);
        Vec expect = unitVec(xi * d + ctx->mono(0, 0));
        addTo(expect, ctx->mono(0, 0) * d + xi, Cyc(1));
        CHECK(r.comult[xi] == expect);
    }

    // quantum binomial: Delta(x1^2) = x1^2 (x) 1 + (2)_q x1 (x) x1 + 1 (x) x1^2
    Vec expect = unitVec(ctx->mono(2, 0) * d + ctx->mono(0, 0));
    addTo(expect, ctx->mono(1, 0) * d + ctx->mono(1, 0), Cyc(1) + q);
    addTo(expect, ctx->mono(0, 0) * d + ctx->mono(2, 0), Cyc(1));
    CHECK(r.comult[ctx->mono(2, 0)] == expect);

    // truncation
    CHECK(ctx->nichols.mult[ctx->mono(2, 0)][ctx->mono(1, 0)].empty());
    // straightening x2 x1 = q x1 x2 inside B(V)
    CHECK(ctx->nichols.mult[ctx->mono(0, 1)][ctx->mono(1, 0)] ==
          scaled(unitVec(ctx->mono(1, 1)), q));
}

TEST_CASE("lifting dimensions") {
    LiftingResult l81 = buildLifting(dim81Datum(Cyc(1), Cyc(1), Cyc(1)));
    CHECK(l81.A->dim() == 81);
    LiftingResult l32 = buildLifting(dim32Datum(1, Cyc(1), Cyc(1), Cyc(1)));
    CHECK(l32.A->dim() == 32);
    Report rep = validateStructure(*l32.A, Level::Hopf);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("trivial lifting is the Radford biproduct") {
    auto ctx = buildQuantumPlane(dim32Datum(3, Cyc(0), Cyc(0), Cyc(0)));
    REQUIRE(ctx->buildChecks.ok());
    LiftingResult lift = buildLifting(ctx->datum);
    REQUIRE(validateStructure(*lift.A, Level::Hopf).ok());
    // with the identity cocycle, "twisted" is the biproduct itself
    Report rep = checkLiftingIsomorphism(lift, ctx->A(), *ctx);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("generator rescaling identifies liftings") {
    // x1 -> 2 x1', x2 -> 3 x2' identifies A(4, 9, 6) with A(1, 1, 1)
    QLSDatum big = dim32Datum(2, Cyc(4), Cyc(9), Cyc(6));
    QLSDatum one = dim32Datum(2, Cyc(1), Cyc(1), Cyc(1));
    LiftingResult lb = buildLifting(big), lo = buildLifting(one);
    long r = lb.r;
    Cyc t(2), s(3);
    LinMap phi(lb.A->dim(), lo.A->dim());
    for (int g = 0; g < lb.dimG; ++g)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j)
                phi.col[lb.indexOf(g, i, j)] =
                    scaled(unitVec(lo.indexOf(g, i, j)), t.pow(i) * s.pow(j));
    for (int x = 0; x < lb.A->dim(); ++x)
        for (int y = 0; y < lb.A->dim(); ++y)
            CHECK(phi.apply(lb.A->mult[x][y]) == lo.A->mul(phi.col[x], phi.col[y]));
    for (int x = 0; x < lb.A->dim(); ++x) {
        Vec lhs;
        int dl = lb.A->dim(), dd = lo.A->dim();
        for (const auto& [jk, c] : lb.A->comult[x])
            for (const auto& [u, cu] : phi.col[jk / dl])
                for (const auto& [v, cv] : phi.col[jk % dl]) addTo(lhs, u * dd + v, c * cu * cv);
        CHECK(lhs == lo.A->delta(phi.col[x]));
    }
}

TEST_CASE("pbw projection of the lifting is a splitting datum") {
    LiftingResult lift = buildLifting(dim32Datum(1, Cyc(1), Cyc(1), Cyc(1)));
    Report rep = validateSplittingDatum(lift.datum);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("seeded H-linear forms are left H-linear") {
    auto ctx = buildQuantumPlane(dim32Datum(1, Cyc(1), Cyc(1), Cyc(1)));
    auto forms = seededHLinearForms(*ctx, 10, 777);
    const Presentation& h = *ctx->Hgrp;
    int d2 = ctx->info.RR.dim();
    for (const auto& f : forms)
        for (int hh = 0; hh < h.dim(); ++hh)
            for (int z = 0; z < d2; ++z) {
                Cyc lhs(0);
                for (const auto& [w, c] : ctx->info.RR.yd.action[hh][z]) lhs += c * coeffOf(f, w);
                CHECK(lhs == h.counit[hh] * coeffOf(f, z));
            }
}
