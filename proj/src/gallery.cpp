#include "hopf/gallery.hpp"

#include <sstream>

namespace hopf {

namespace {

std::string monoLabel(long i, long j) {
    if (i == 0 && j == 0) return "1";
    std::string s;
    if (i > 0) {
        s += "x1";
        if (i > 1) s += "^" + std::to_string(i);
    }
    if (j > 0) {
        s += "x2";
        if (j > 1) s += "^" + std::to_string(j);
    }
    return s;
}

} // namespace

Report validateQLSDatum(const QLSDatum& d) {
    Report rep;
    const GroupData& g = d.group;
    timedCheck(rep, "quantum linear space conditions", [&]() -> std::pair<bool, std::string> {
        for (size_t i = 0; i < d.gens.size(); ++i) {
            Cyc qi = d.gens[i].chi.eval(g, d.gens[i].g);
            if (d.gens[i].r <= 1) return {false, "r must exceed 1"};
            if (rootOrder(qi) != d.gens[i].r)
                return {false, "chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) +
                                   ") is not a primitive root of the stated order"};
            for (size_t j = 0; j < d.gens.size(); ++j) {
                if (i == j) continue;
                Cyc prod = d.gens[i].chi.eval(g, d.gens[j].g) * d.gens[j].chi.eval(g, d.gens[i].g);
                if (!prod.isOne())
                    return {false, "chi_i(g_j) chi_j(g_i) != 1 at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")"};
            }
        }
        return {true, ""};
    });
    timedCheck(rep, "deformation scalar constraints", [&]() -> std::pair<bool, std::string> {
        const Cyc* as[2] = {&d.a1, &d.a2};
        for (int i = 0; i < 2; ++i) {
            if (as[i]->isZero()) continue;
            long r = d.gens[i].r;
            if (g.power(d.gens[i].g, r) == g.identity())
                return {false, "a_i requires g_i^r != 1"};
            if (!d.gens[i].chi.power(g, r).isTrivial(g))
                return {false, "a_i requires chi_i^r = eps"};
        }
        if (!d.a.isZero()) {
            if (g.mul(d.gens[0].g, d.gens[1].g) == g.identity())
                return {false, "a requires g1 g2 != 1"};
            if (!d.gens[0].chi.times(g, d.gens[1].chi).isTrivial(g))
                return {false, "a requires chi1 chi2 = eps"};
        }
        return {true, ""};
    });
    return rep;
}

QLSDatum dim81Datum(const Cyc& a1, const Cyc& a2, const Cyc& a) {
    QLSDatum d;
    d.group = GroupData({9}, {"c"});
    // chi(c) = zeta_9^3, a primitive cube root; x1, x2 both sit over c.
    d.gens.push_back({1, Character{{3}}, 3});
    d.gens.push_back({1, Character{{6}}, 3});
    d.a1 = a1;
    d.a2 = a2;
    d.a = a;
    return d;
}

QLSDatum dim32Datum(int family, const Cyc& a1, const Cyc& a2, const Cyc& a) {
    QLSDatum d;
    if (family == 1 || family == 2) {
        d.group = GroupData({8}, {"g"});
        int g2 = family == 1 ? 5 : 3;
        d.gens.push_back({1, Character{{4}}, 2});  // eta^4, g
        d.gens.push_back({g2, Character{{4}}, 2}); // eta^4, g^5 or g^3
    } else if (family == 3) {
        d.group = GroupData({2, 4}, {"g", "h"});
        // eta(g) = 1, eta(h) = i; chi = eta^2
        int h = d.group.indexOf({0, 1});
        int gh = d.group.indexOf({1, 1});
        d.gens.push_back({h, Character{{0, 2}}, 2});
        d.gens.push_back({gh, Character{{0, 2}}, 2});
    } else {
        throw std::invalid_argument("unknown dim-32 family");
    }
    d.a1 = a1;
    d.a2 = a2;
    d.a = a;
    return d;
}

std::unique_ptr<QuantumPlaneContext> buildQuantumPlane(const QLSDatum& d) {
    auto ctx = std::make_unique<QuantumPlaneContext>();
    ctx->datum = d;
    ctx->buildChecks.merge(validateQLSDatum(d), "datum: ");
    if (!ctx->buildChecks.ok()) return ctx;
    if (d.gens.size() != 2 || d.gens[0].r != d.gens[1].r)
        throw std::invalid_argument("quantum-plane suites need rank 2 with r1 = r2");
    long r = d.gens[0].r;
    ctx->r = r;
    const GroupData& g = d.group;

    auto hg = std::make_shared<Presentation>(groupAlgebra(g, "K[Gamma]"));
    ctx->buildChecks.merge(validateStructure(*hg, Level::Hopf), "K[Gamma]: ");
    ctx->Hgrp = hg;

    const Character &chi1 = d.gens[0].chi, &chi2 = d.gens[1].chi;
    int g1 = d.gens[0].g, g2 = d.gens[1].g;
    Cyc q11 = chi1.eval(g, g1), q22 = chi2.eval(g, g2);
    Cyc cross = chi2.eval(g, g1); // coefficient of the braiding swap x2 x1 -> x1 x2 is chi1(g2)
    Cyc swap12 = chi1.eval(g, g2);

    // B(V): truncated q-polynomial algebra on x1, x2
    PreBialgebra& nb = ctx->nichols;
    int dr = static_cast<int>(r * r);
    nb.R.yd.H = hg;
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) nb.R.yd.labels.push_back(monoLabel(i, j));

    nb.R.yd.action.assign(hg->dim(), std::vector<Vec>(dr));
    for (int hh = 0; hh < hg->dim(); ++hh)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j)
                nb.R.yd.action[hh][ctx->mono(i, j)] =
                    scaled(unitVec(ctx->mono(i, j)),
                           chi1.eval(g, hh).pow(i) * chi2.eval(g, hh).pow(j));

    nb.R.yd.coaction.assign(dr, Vec{});
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            int grp = g.mul(g.power(g1, i), g.power(g2, j));
            nb.R.yd.coaction[ctx->mono(i, j)] = unitVec(grp * dr + ctx->mono(i, j));
        }

    // multiplication with q-straightening and truncation x_i^r = 0
    nb.mult.assign(dr, std::vector<Vec>(dr));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            for (long k = 0; k < r; ++k)
                for (long l = 0; l < r; ++l) {
                    if (i + k >= r || j + l >= r) continue; // truncated
                    nb.mult[ctx->mono(i, j)][ctx->mono(k, l)] =
                        scaled(unitVec(ctx->mono(i + k, j + l)), swap12.pow(j * k));
                }

    // comultiplication by the quantum binomial theorem
    QBinomialTable tab1(q11), tab2(q22);
    nb.R.comult.assign(dr, Vec{});
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            Vec out;
            for (long u = 0; u <= i; ++u)
                for (long v = 0; v <= j; ++v) {
                    Cyc c = tab1.binom(i, u) * tab2.binom(j, v) * cross.pow(u * (j - v));
                    addTo(out, ctx->mono(i - u, j - v) * dr + ctx->mono(u, v), c);
                }
            nb.R.comult[ctx->mono(i, j)] = std::move(out);
        }
    nb.R.counit.assign(dr, Cyc(0));
    nb.R.counit[ctx->mono(0, 0)] = Cyc(1);
    nb.R.unit = unitVec(ctx->mono(0, 0));
    nb.xi = PreBialgebra::trivialXi(nb.R);

    ctx->buildChecks.merge(validatePreBialgebra(nb), "B(V): ");

    ctx->smash = smashProduct(nb, "B(V)#K[Gamma]");
    Presentation& a = *ctx->smash.datum.A;
    ctx->buildChecks.merge(validateStructure(a, Level::Bialgebra), "biproduct: ");
    {
        std::vector<int> degree(a.dim(), 0);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j)
                for (int hh = 0; hh < hg->dim(); ++hh)
                    degree[ctx->mono(i, j) * hg->dim() + hh] = static_cast<int>(i + j);
        auto s = solvePointedAntipode(a, degree);
        if (s) {
            a.antipode = std::move(*s);
            ctx->buildChecks.merge(validateStructure(a, Level::Hopf), "biproduct: ");
        } else {
            ctx->buildChecks.add("biproduct antipode", false, "pointed solve failed");
        }
    }
    ctx->buildChecks.merge(validateSplittingDatum(ctx->smash.datum), "biproduct datum: ");
    ctx->info = makeSmashInfo(ctx->nichols);
    ctx->hsub = HSubContext{ctx->Hgrp, ctx->smash.datum.sigma};
    return ctx;
}

// ---------------------------------------------------------------------------
// Lifting A(a1, a2, a) by exhaustive rewriting to the PBW basis.

namespace {

struct LiftingBuilder {
    const QLSDatum& d;
    const GroupData& g;
    long r;
    Cyc q;          // straightening coefficient chi1(g2)
    int g1, g2;
    int g1r, g2r, g12;
    Character chi1, chi2;

    using Key = std::tuple<int, long, long>; // (group, i, j)
    using Element = std::map<Key, Cyc>;

    std::vector<Element> smemo; // smemo[j] = x2^j x1 in normal order

    explicit LiftingBuilder(const QLSDatum& datum)
        : d(datum), g(datum.group), r(datum.gens[0].r),
          q(datum.gens[0].chi.eval(datum.group, datum.gens[1].g)),
          g1(datum.gens[0].g), g2(datum.gens[1].g),
          g1r(datum.group.power(datum.gens[0].g, datum.gens[0].r)),
          g2r(datum.group.power(datum.gens[1].g, datum.gens[1].r)),
          g12(datum.group.mul(datum.gens[0].g, datum.gens[1].g)),
          chi1(datum.gens[0].chi), chi2(datum.gens[1].chi) {
        buildStraightening();
    }

    static void accum(Element& e, const Key& k, const Cyc& c) {
        if (c.isZero()) return;
        auto [it, ins] = e.emplace(k, c);
        if (!ins) {
            it->second += c;
            if (it->second.isZero()) e.erase(it);
        }
    }

    Element mulX2(const Element& e) const {
        Element out;
        for (const auto& [k, c] : e) {
            auto [grp, i, j] = k;
            if (j + 1 < r) {
                accum(out, {grp, i, j + 1}, c);
            } else {
                // x2^r = a2 (1 - g2^r); x1^i g2^r = chi1(g2^r)^{-i} g2^r x1^i
                accum(out, {grp, i, 0}, c * d.a2);
                accum(out, {g.mul(grp, g2r), i, 0}, -c * d.a2 * chi1.eval(g, g2r).pow(-i));
            }
        }
        return out;
    }

    Element mulX1(const Element& e) const {
        Element out;
        for (const auto& [k, c] : e) {
            auto [grp, i, j] = k;
            if (j == 0) {
                if (i + 1 < r) {
                    accum(out, {grp, i + 1, 0}, c);
                } else {
                    accum(out, {grp, 0, 0}, c * d.a1);
                    accum(out, {g.mul(grp, g1r), 0, 0}, -c * d.a1);
                }
            } else {
                // x1^i (x2^j x1) via the straightening table
                for (const auto& [sk, sc] : smemo[j]) {
                    auto [h, ip, m] = sk;
                    Cyc f = c * sc * chi1.eval(g, h).pow(-i);
                    long ii = i + ip;
                    int grph = g.mul(grp, h);
                    if (ii < r) {
                        accum(out, {grph, ii, m}, f);
                    } else {
                        accum(out, {grph, 0, m}, f * d.a1);
                        accum(out, {g.mul(grph, g1r), 0, m}, -f * d.a1);
                    }
                }
            }
        }
        return out;
    }

    void buildStraightening() {
        smemo.resize(r);
        smemo[0] = Element{{Key{g.identity(), 1, 0}, Cyc(1)}};
        for (long j = 1; j < r; ++j) {
            Element s;
            Element tail = mulX2(smemo[j - 1]);
            for (const auto& [k, c] : tail) accum(s, k, q * c);
            accum(s, {g.identity(), 0, j - 1}, d.a);
            accum(s, {g12, 0, j - 1}, -d.a * chi2.eval(g, g12).pow(-(j - 1)));
            smemo[j] = std::move(s);
        }
    }

    Element mulBasis(const Key& lhs, const Key& rhs) const {
        auto [gl, i, j] = lhs;
        auto [gr, k, l] = rhs;
        Cyc f = chi1.eval(g, gr).pow(-i) * chi2.eval(g, gr).pow(-j);
        Element e{{Key{g.mul(gl, gr), i, j}, f}};
        for (long t = 0; t < k; ++t) e = mulX1(e);
        for (long t = 0; t < l; ++t) e = mulX2(e);
        return e;
    }
};

} // namespace

LiftingResult buildLifting(const QLSDatum& d) {
    LiftingBuilder bld(d);
    const GroupData& g = d.group;
    long r = d.gens[0].r;
    int ng = static_cast<int>(g.order());
    int dim = static_cast<int>(ng * r * r);

    LiftingResult res;
    res.r = r;
    res.dimG = ng;

    auto a = std::make_shared<Presentation>();
    a->name = "A(a1,a2,a)";
    a->fieldOrder = g.fieldOrder();
    a->basis.resize(dim);
    auto idx = [&](int grp, long i, long j) { return static_cast<int>(grp * r * r + i * r + j); };
    for (int grp = 0; grp < ng; ++grp)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) {
                std::string gl = g.label(grp), ml = monoLabel(i, j);
                a->basis[idx(grp, i, j)] = grp == g.identity() ? ml : (ml == "1" ? gl : gl + "*" + ml);
            }
    a->initEmpty(dim);

    for (int grp = 0; grp < ng; ++grp)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j)
                for (int grp2 = 0; grp2 < ng; ++grp2)
                    for (long k = 0; k < r; ++k)
                        for (long l = 0; l < r; ++l) {
                            auto e = bld.mulBasis({grp, i, j}, {grp2, k, l});
                            Vec v;
                            for (const auto& [key, c] : e)
                                addTo(v, idx(std::get<0>(key), std::get<1>(key), std::get<2>(key)), c);
                            a->mult[idx(grp, i, j)][idx(grp2, k, l)] = std::move(v);
                        }
    a->unit = unitVec(idx(g.identity(), 0, 0));

    // comultiplication, multiplicatively from Delta(g) = g (x) g and
    // Delta(x_i) = x_i (x) 1 + g_i (x) x_i
    int e0 = idx(g.identity(), 0, 0);
    Vec dx1, dx2;
    addTo(dx1, idx(g.identity(), 1, 0) * dim + e0, Cyc(1));
    addTo(dx1, idx(d.gens[0].g, 0, 0) * dim + idx(g.identity(), 1, 0), Cyc(1));
    addTo(dx2, idx(g.identity(), 0, 1) * dim + e0, Cyc(1));
    addTo(dx2, idx(d.gens[1].g, 0, 0) * dim + idx(g.identity(), 0, 1), Cyc(1));
    for (int grp = 0; grp < ng; ++grp) {
        Vec dg = unitVec(idx(grp, 0, 0) * dim + idx(grp, 0, 0));
        for (long i = 0; i < r; ++i) {
            Vec cur = dg;
            for (long t = 0; t < i; ++t) cur = a->mulTensorSquare(cur, dx1);
            for (long j = 0; j < r; ++j) {
                a->comult[idx(grp, i, j)] = cur;
                a->counit[idx(grp, i, j)] = (i + j == 0) ? Cyc(1) : Cyc(0);
                if (j + 1 < r) cur = a->mulTensorSquare(cur, dx2);
            }
        }
    }

    // antipode: S(g x1^i x2^j) = S(x2)^j S(x1)^i g^{-1}
    Vec sx1, sx2;
    addTo(sx1, idx(g.mul(g.inverse(d.gens[0].g), g.identity()), 1, 0), Cyc(-1));
    addTo(sx2, idx(g.inverse(d.gens[1].g), 0, 1), Cyc(-1));
    a->antipode.emplace(dim);
    for (int grp = 0; grp < ng; ++grp)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) {
                Vec cur = a->unit;
                for (long t = 0; t < j; ++t) cur = a->mul(cur, sx2);
                for (long t = 0; t < i; ++t) cur = a->mul(cur, sx1);
                (*a->antipode)[idx(grp, i, j)] = a->mul(cur, unitVec(idx(g.inverse(grp), 0, 0)));
            }

    res.A = a;
    res.datum.A = a;
    auto hg = std::make_shared<Presentation>(groupAlgebra(g, "K[Gamma]"));
    {
        Report hrep = validateStructure(*hg, Level::Hopf);
        if (!hrep.ok()) throw std::runtime_error("group algebra failed validation");
    }
    res.datum.H = hg;
    res.datum.sigma = LinMap(ng, dim);
    for (int grp = 0; grp < ng; ++grp) res.datum.sigma.col[grp] = unitVec(idx(grp, 0, 0));
    res.datum.pi = LinMap(dim, ng);
    for (int grp = 0; grp < ng; ++grp)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j)
                res.datum.pi.col[idx(grp, i, j)] = (i + j == 0) ? unitVec(grp) : Vec{};
    return res;
}

// ---------------------------------------------------------------------------
// Cocycles of the quantum-plane families, as upsilon tables on R (x) R.

Vec upsilonEpsilon(const QuantumPlaneContext& ctx) {
    Vec u;
    int dr = ctx.nichols.dim();
    for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dr; ++j)
            addTo(u, i * dr + j, ctx.nichols.R.counit[i] * ctx.nichols.R.counit[j]);
    return u;
}

Vec upsilonGammaI(const QuantumPlaneContext& ctx, int which) {
    Vec u = upsilonEpsilon(ctx);
    const Cyc& ai = which == 1 ? ctx.datum.a1 : ctx.datum.a2;
    int dr = ctx.nichols.dim();
    for (long m = 1; m < ctx.r; ++m) {
        int lhs = which == 1 ? ctx.mono(m, 0) : ctx.mono(0, m);
        int rhs = which == 1 ? ctx.mono(ctx.r - m, 0) : ctx.mono(0, ctx.r - m);
        addTo(u, lhs * dr + rhs, ai);
    }
    return u;
}

Vec upsilonGammaA(const QuantumPlaneContext& ctx) {
    Vec u = upsilonEpsilon(ctx);
    QBinomialTable tab(ctx.datum.q());
    int dr = ctx.nichols.dim();
    for (long m = 1; m < ctx.r; ++m)
        addTo(u, ctx.mono(0, m) * dr + ctx.mono(m, 0), tab.factorial(m) * ctx.datum.a.pow(m));
    return u;
}

Vec upsilonAlphaClosedForm(const QuantumPlaneContext& ctx) {
    const Cyc q = ctx.datum.q();
    const Cyc &a1 = ctx.datum.a1, &a2 = ctx.datum.a2, &a = ctx.datum.a;
    QBinomialTable tab(q);
    long r = ctx.r;
    int dr = ctx.nichols.dim();
    Vec u;
    for (long i = 0; i < r; ++i)
        for (long k = 0; k < r; ++k)
            for (long m = 0; m < r; ++m)
                for (long t = 0; t < r; ++t) {
                    Cyc val(0);
                    bool uEmpty = i == 0 && k == 0, vEmpty = m == 0 && t == 0;
                    if (uEmpty || vEmpty) {
                        val = (uEmpty && vEmpty) ? Cyc(1) : Cyc(0); // (i)
                    } else if (k == 0 && t == 0) {
                        if (i + m == r) val = a1; // (ii) for x1
                    } else if (i == 0 && m == 0) {
                        if (k + t == r) val = a2; // (ii) for x2
                    } else if (i == 0 && t == 0) {
                        if (k == m) val = tab.factorial(k) * a.pow(k); // (v)
                    } else if (i >= 1 && k == 0 && t >= 1) {
                        val = Cyc(0); // (iii)/(iv)
                    } else if (i >= 1 && k >= 1 && m == 0) {
                        val = Cyc(0); // (iv)
                    } else if (i == 0 && k >= 1 && m >= 1 && t >= 1) {
                        if (k + t == r + m) val = tab.binom(k, m) * tab.factorial(m) * a.pow(m) * a2; // (vi)
                    } else if (i >= 1 && k >= 1 && m >= 1 && t == 0) {
                        if (i + m == r + k) val = tab.binom(m, k) * tab.factorial(k) * a.pow(k) * a1; // (vii)
                    } else {
                        // (viii): all four exponents positive
                        if (i + m == k + t && i + m - r >= 0)
                            val = tab.factorial(i + m - r) * tab.binom(k, r - t) * tab.binom(m, r - i) *
                                  q.pow(i * t) * a.pow(i + m - r) * a1 * a2;
                    }
                    addTo(u, ctx.mono(i, k) * dr + ctx.mono(m, t), val);
                }
    return u;
}

Vec upsilonDim32Gamma(const QuantumPlaneContext& ctx, const Cyc& a1, const Cyc& a2, const Cyc& a) {
    if (ctx.r != 2) throw std::invalid_argument("gamma(a1,a2,a) is a quantum-plane r = 2 form");
    Vec u = upsilonEpsilon(ctx);
    int dr = ctx.nichols.dim();
    int x1 = ctx.mono(1, 0), x2 = ctx.mono(0, 1), x12 = ctx.mono(1, 1);
    addTo(u, x1 * dr + x1, a1);
    addTo(u, x2 * dr + x2, a2);
    addTo(u, x2 * dr + x1, a);
    addTo(u, x12 * dr + x12, -(a1 * a2));
    return u;
}

Report checkLiftingIsomorphism(const LiftingResult& lift, const Presentation& twisted,
                               const QuantumPlaneContext& ctx) {
    Report rep;
    const Presentation& l = *lift.A;
    int dh = ctx.Hgrp->dim();
    long r = ctx.r;

    LinMap phi(l.dim(), twisted.dim());
    Vec xg1 = unitVec(ctx.biproductIndex(1, 0, ctx.info.unitH));
    Vec xg2 = unitVec(ctx.biproductIndex(0, 1, ctx.info.unitH));
    for (int grp = 0; grp < lift.dimG; ++grp)
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) {
                Vec cur = unitVec(ctx.mono(0, 0) * dh + grp); // sigma(g)
                for (long t = 0; t < i; ++t) cur = twisted.mul(cur, xg1);
                for (long t = 0; t < j; ++t) cur = twisted.mul(cur, xg2);
                phi.col[lift.indexOf(grp, i, j)] = std::move(cur);
            }

    timedCheck(rep, "generator map is bijective", [&] {
        Matrix m(l.dim(), twisted.dim());
        for (int i = 0; i < l.dim(); ++i)
            for (const auto& [j, c] : phi.col[i]) m[i][j] += c;
        bool ok = l.dim() == twisted.dim() && rank(std::move(m)) == l.dim();
        return std::make_pair(ok, ok ? "" : std::string("rank deficient"));
    });
    timedCheck(rep, "transports multiplication", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < l.dim(); ++i)
            for (int j = 0; j < l.dim(); ++j)
                if (phi.apply(l.mult[i][j]) != twisted.mul(phi.col[i], phi.col[j]))
                    return {false, "(" + l.basis[i] + ", " + l.basis[j] + ")"};
        return {true, ""};
    });
    timedCheck(rep, "transports comultiplication and counit", [&]() -> std::pair<bool, std::string> {
        int dl = l.dim(), dt = twisted.dim();
        for (int i = 0; i < dl; ++i) {
            Vec lhs;
            for (const auto& [jk, c] : l.comult[i])
                for (const auto& [x, cx] : phi.col[jk / dl])
                    for (const auto& [y, cy] : phi.col[jk % dl]) addTo(lhs, x * dt + y, c * cx * cy);
            if (lhs != twisted.delta(phi.col[i])) return {false, l.basis[i]};
            if (twisted.eps(phi.col[i]) != l.counit[i]) return {false, "counit at " + l.basis[i]};
        }
        return {true, ""};
    });
    timedCheck(rep, "transports unit and antipode", [&]() -> std::pair<bool, std::string> {
        if (phi.apply(l.unit) != twisted.unit) return {false, "unit"};
        if (l.antipode && twisted.antipode) {
            for (int i = 0; i < l.dim(); ++i)
                if (phi.apply((*l.antipode)[i]) != twisted.applyS(phi.col[i]))
                    return {false, "antipode at " + l.basis[i]};
        }
        return {true, ""};
    });
    return rep;
}

std::vector<Vec> seededHLinearForms(const QuantumPlaneContext& ctx, int count, uint64_t seed) {
    std::mt19937_64 eng(seed);
    int dr = ctx.nichols.dim();
    const GroupData& g = ctx.datum.group;

    // left H-linearity over a group algebra forces support on pairs whose
    // joint character is trivial
    std::vector<int> allowed;
    for (long i = 0; i < ctx.r; ++i)
        for (long j = 0; j < ctx.r; ++j)
            for (long k = 0; k < ctx.r; ++k)
                for (long l = 0; l < ctx.r; ++l) {
                    Character cu = ctx.datum.gens[0].chi.power(g, i + k).times(
                        g, ctx.datum.gens[1].chi.power(g, j + l));
                    if (cu.isTrivial(g))
                        allowed.push_back(ctx.mono(i, j) * dr + ctx.mono(k, l));
                }

    std::uniform_int_distribution<int> pick(0, static_cast<int>(allowed.size()) - 1);
    std::uniform_int_distribution<int> supportSize(1, 8);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);

    std::vector<Vec> forms;
    forms.reserve(count);
    for (int n = 0; n < count; ++n) {
        Vec f;
        int s = supportSize(eng);
        for (int t = 0; t < s; ++t) {
            int idx = allowed[pick(eng)];
            int p = num(eng);
            if (p == 0) p = 1;
            addTo(f, idx, Cyc(Rat(p, den(eng))));
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

Report omegaRoundtripChecks(const QuantumPlaneContext& ctx, int count, uint64_t seed) {
    Report rep;
    const Presentation& a = ctx.A();
    auto forms = seededHLinearForms(ctx, count, seed);
    int dr = ctx.nichols.dim(), dh = ctx.Hgrp->dim();

    timedCheck(rep, "Omega(Omega'(upsilon)) = upsilon on seeded forms", [&]() -> std::pair<bool, std::string> {
        for (size_t n = 0; n < forms.size(); ++n) {
            BilForm ext = omegaExtend(ctx.info, a, forms[n]);
            if (omegaRestrict(ctx.info, ext) != forms[n])
                return {false, "form #" + std::to_string(n)};
        }
        return {true, ""};
    });

    timedCheck(rep, "Omega'(Omega(gamma)) = gamma on independently extended forms", [&]() -> std::pair<bool, std::string> {
        const GroupData& g = ctx.datum.group;
        for (size_t n = 0; n < forms.size(); ++n) {
            // independent H-bilinear/H-balanced extension:
            // gamma(u#h (x) v#h') = chi_v(h) w(u (x) v)
            BilForm gamma(a.dim());
            for (long i = 0; i < ctx.r; ++i)
                for (long j = 0; j < ctx.r; ++j)
                    for (long k = 0; k < ctx.r; ++k)
                        for (long l = 0; l < ctx.r; ++l) {
                            Cyc w = coeffOf(forms[n], ctx.mono(i, j) * dr + ctx.mono(k, l));
                            if (w.isZero()) continue;
                            Character chiV = ctx.datum.gens[0].chi.power(g, k).times(
                                g, ctx.datum.gens[1].chi.power(g, l));
                            for (int hh = 0; hh < dh; ++hh)
                                for (int hp = 0; hp < dh; ++hp)
                                    gamma.accum(ctx.mono(i, j) * dh + hh, ctx.mono(k, l) * dh + hp,
                                                chiV.eval(g, hh) * w);
                        }
            // exhaustively H-bilinear and H-balanced?
            for (int hh = 0; hh < dh && n < 3; ++hh) // spot-verify the extension on a few forms
                for (int x = 0; x < a.dim(); ++x)
                    for (int y = 0; y < a.dim(); ++y) {
                        Vec lx = a.mul(ctx.hsub.sigma.col[hh], unitVec(x));
                        if (gamma.evalLeft(lx, y) != ctx.Hgrp->counit[hh] * gamma.at(x, y))
                            return {false, "extension not H-bilinear, form #" + std::to_string(n)};
                        Vec ry = a.mul(unitVec(y), ctx.hsub.sigma.col[hh]);
                        if (gamma.evalRight(x, ry) != gamma.at(x, y) * ctx.Hgrp->counit[hh])
                            return {false, "extension not right H-bilinear, form #" + std::to_string(n)};
                        Vec rx = a.mul(unitVec(x), ctx.hsub.sigma.col[hh]);
                        Vec ly = a.mul(ctx.hsub.sigma.col[hh], unitVec(y));
                        if (gamma.evalLeft(rx, y) != gamma.evalRight(x, ly))
                            return {false, "extension not H-balanced, form #" + std::to_string(n)};
                    }
            if (!(omegaExtend(ctx.info, a, omegaRestrict(ctx.info, gamma)) == gamma))
                return {false, "form #" + std::to_string(n)};
        }
        return {true, ""};
    });

    timedCheck(rep, "Omega preserves convolution on seeded pairs", [&]() -> std::pair<bool, std::string> {
        CoalgebraView rrv = ctx.info.RR.view();
        for (size_t n = 0; n + 1 < forms.size(); n += 2) {
            BilForm g1 = omegaExtend(ctx.info, a, forms[n]);
            BilForm g2 = omegaExtend(ctx.info, a, forms[n + 1]);
            Vec lhs = omegaRestrict(ctx.info, convBilForm(a, g1, g2));
            Vec rhs = convFunctional(rrv, forms[n], forms[n + 1]);
            if (lhs != rhs) return {false, "pair #" + std::to_string(n)};
        }
        return {true, ""};
    });
    return rep;
}

Report vanishingConstraintCheck(const QuantumPlaneContext& ctx,
                                const std::vector<std::pair<std::string, const BilForm*>>& forms) {
    Report rep;
    const Cyc q = ctx.datum.q();
    long r = ctx.r;
    int dh = ctx.Hgrp->dim();
    for (const auto& [name, form] : forms) {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < r && ok; ++i)
            for (long j = 0; j < r && ok; ++j)
                for (long k = 0; k < r && ok; ++k)
                    for (long l = 0; l < r; ++l) {
                        if (q.pow(i + k) == q.pow(j + l)) continue;
                        Cyc v = form->at(ctx.mono(i, j) * dh + ctx.info.unitH,
                                         ctx.mono(k, l) * dh + ctx.info.unitH);
                        if (!v.isZero()) {
                            ok = false;
                            wit = monoLabel(i, j) + " (x) " + monoLabel(k, l) + " -> " + v.str();
                            break;
                        }
                    }
        rep.add("vanishing constraint: " + name, ok, wit);
    }
    return rep;
}

} // namespace hopf
