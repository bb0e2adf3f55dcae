#include "hopf/convolution.hpp"
#include "hopf/parallel.hpp"

namespace hopf {

Vec convFunctional(const CoalgebraView& c, const Vec& f, const Vec& g) {
    Vec r;
    for (int i = 0; i < c.dim; ++i) {
        Cyc v(0);
        for (const auto& [jk, w] : (*c.comult)[i]) {
            Cyc fj = coeffOf(f, jk / c.dim);
            if (fj.isZero()) continue;
            Cyc gk = coeffOf(g, jk % c.dim);
            if (gk.isZero()) continue;
            v += w * fj * gk;
        }
        addTo(r, i, v);
    }
    return r;
}

Vec counitFunctional(const CoalgebraView& c) {
    Vec r;
    for (int i = 0; i < c.dim; ++i) addTo(r, i, (*c.counit)[i]);
    return r;
}

LinMap convMap(const CoalgebraView& c, const Presentation& a, const LinMap& f, const LinMap& g) {
    LinMap r(c.dim, a.dim());
    for (int i = 0; i < c.dim; ++i) {
        Vec v;
        for (const auto& [jk, w] : (*c.comult)[i])
            axpy(v, w, a.mul(f.col[jk / c.dim], g.col[jk % c.dim]));
        r.col[i] = std::move(v);
    }
    return r;
}

LinMap unitMap(const CoalgebraView& c, const Presentation& a) {
    LinMap r(c.dim, a.dim());
    for (int i = 0; i < c.dim; ++i) r.col[i] = scaled(a.unit, (*c.counit)[i]);
    return r;
}

bool isConnectedCoaugmented(const CoalgebraView& c) {
    if (!c.unit || c.unit->size() != 1 || !c.unit->begin()->second.isOne()) return false;
    int unitIdx = c.unit->begin()->first;
    for (int i = 0; i < c.dim; ++i) {
        bool grouplike = (*c.counit)[i].isOne() && (*c.comult)[i] == unitVec(i * c.dim + i);
        if (grouplike && i != unitIdx) return false;
    }
    // the coaugmentation itself must be grouplike
    return (*c.comult)[unitIdx] == unitVec(unitIdx * c.dim + unitIdx) && (*c.counit)[unitIdx].isOne();
}

namespace {

Cyc evalFunctional(const Vec& f, const Vec& v) {
    Cyc r(0);
    for (const auto& [i, c] : v) r += c * coeffOf(f, i);
    return r;
}

std::optional<Vec> geometricInverseFunctional(const CoalgebraView& c, const Vec& f, long cap) {
    Vec ue = counitFunctional(c);
    Vec gamma = ue;
    for (const auto& [i, x] : f) addTo(gamma, i, -x);
    Vec acc = ue, p = gamma;
    for (long n = 1; n <= cap; ++n) {
        if (p.empty()) return acc;
        for (const auto& [i, x] : p) addTo(acc, i, x);
        p = convFunctional(c, p, gamma);
    }
    return std::nullopt; // nilpotency not detected within the cap
}

} // namespace

std::optional<Vec> convInverseFunctional(const CoalgebraView& c, const Vec& f,
                                         const InverseOptions& opts) {
    long cap = opts.geometricCap > 0 ? opts.geometricCap : static_cast<long>(c.dim) * c.dim + 2;
    if (c.unit && isConnectedCoaugmented(c) && evalFunctional(f, *c.unit).isOne()) {
        auto inv = geometricInverseFunctional(c, f, cap);
        if (inv) return inv;
    }
    if (c.dim > opts.solveCap) return std::nullopt;
    // rows: basis of C, unknowns g_k: sum_{Delta} w f_j g_k = eps_i
    Matrix m(c.dim, c.dim);
    std::vector<Cyc> rhs(c.dim, Cyc(0));
    for (int i = 0; i < c.dim; ++i) {
        for (const auto& [jk, w] : (*c.comult)[i]) {
            Cyc fj = coeffOf(f, jk / c.dim);
            if (!fj.isZero()) m[i][jk % c.dim] += w * fj;
        }
        rhs[i] = (*c.counit)[i];
    }
    auto sol = solve(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    Vec g;
    for (int k = 0; k < c.dim; ++k) addTo(g, k, (*sol)[k]);
    // one-sided solve; confirm the two-sided identity exactly
    if (convFunctional(c, g, f) != counitFunctional(c)) return std::nullopt;
    if (convFunctional(c, f, g) != counitFunctional(c)) return std::nullopt;
    return g;
}

std::optional<LinMap> convInverseMap(const CoalgebraView& c, const Presentation& a,
                                     const LinMap& f, const InverseOptions& opts) {
    long cap = opts.geometricCap > 0 ? opts.geometricCap : static_cast<long>(c.dim) * c.dim + 2;
    LinMap ue = unitMap(c, a);
    if (c.unit && isConnectedCoaugmented(c)) {
        Vec fAtUnit = f.apply(*c.unit);
        if (fAtUnit == a.unit) {
            LinMap gamma(c.dim, a.dim());
            for (int i = 0; i < c.dim; ++i) {
                gamma.col[i] = ue.col[i];
                axpy(gamma.col[i], Cyc(-1), f.col[i]);
            }
            LinMap acc = ue, p = gamma;
            bool done = false;
            for (long n = 1; n <= cap; ++n) {
                bool zero = true;
                for (const auto& col : p.col)
                    if (!col.empty()) { zero = false; break; }
                if (zero) { done = true; break; }
                for (int i = 0; i < c.dim; ++i)
                    axpy(acc.col[i], Cyc(1), p.col[i]);
                p = convMap(c, a, p, gamma);
            }
            if (done) return acc;
        }
    }
    int unknowns = c.dim * a.dim();
    if (unknowns > opts.solveCap) return std::nullopt;
    int da = a.dim();
    Matrix m(unknowns, unknowns);
    std::vector<Cyc> rhs(unknowns, Cyc(0));
    for (int i = 0; i < c.dim; ++i) {
        for (const auto& [jk, w] : (*c.comult)[i]) {
            const Vec& fj = f.col[jk / c.dim];
            int k = jk % c.dim;
            // contribution w * fj * g_k to row block i
            for (const auto& [x, cx] : fj)
                for (int b = 0; b < da; ++b)
                    for (const auto& [y, cy] : a.mult[x][b])
                        m[i * da + y][k * da + b] += w * cx * cy;
        }
        for (const auto& [y, cy] : scaled(a.unit, (*c.counit)[i])) rhs[i * da + y] = cy;
    }
    auto sol = solve(std::move(m), std::move(rhs));
    if (!sol) return std::nullopt;
    LinMap g(c.dim, da);
    for (int k = 0; k < c.dim; ++k)
        for (int b = 0; b < da; ++b) addTo(g.col[k], b, (*sol)[k * da + b]);
    if (!(convMap(c, a, f, g) == ue) || !(convMap(c, a, g, f) == ue)) return std::nullopt;
    return g;
}

BilForm convBilForm(const Presentation& a, const BilForm& f, const BilForm& g) {
    int d = a.dim();
    BilForm r(d);
    std::vector<std::map<std::pair<int, int>, Cyc>> rows(d);
    parallelFor(d, [&](int x) {
        for (int y = 0; y < d; ++y) {
            Cyc v(0);
            for (const auto& [x12, cx] : a.comult[x]) {
                for (const auto& [y12, cy] : a.comult[y]) {
                    Cyc fe = f.at(x12 / d, y12 / d);
                    if (fe.isZero()) continue;
                    Cyc ge = g.at(x12 % d, y12 % d);
                    if (ge.isZero()) continue;
                    v += cx * cy * fe * ge;
                }
            }
            if (!v.isZero()) rows[x].emplace(std::make_pair(x, y), v);
        }
    });
    for (auto& row : rows) r.entries.merge(row);
    return r;
}

BilForm counitBilForm(const Presentation& a) {
    int d = a.dim();
    BilForm r(d);
    for (int i = 0; i < d; ++i) {
        if (a.counit[i].isZero()) continue;
        for (int j = 0; j < d; ++j) {
            Cyc v = a.counit[i] * a.counit[j];
            if (!v.isZero()) r.set(i, j, v);
        }
    }
    return r;
}

LinMap antipodeOfTwist(const Presentation& a, const BilForm& gamma, const BilForm& gammaInv) {
    if (!a.antipode) throw std::logic_error("antipode of twist needs the base antipode");
    int d = a.dim();
    LinMap s(d, d);
    parallelFor(d, [&](int x) {
        Vec out;
        for (const auto& [t, c] : a.deltaTuples(x, 5)) {
            Cyc v1 = gamma.evalRight(t[0], a.applyS(unitVec(t[1])));
            if (v1.isZero()) continue;
            Cyc v2 = gammaInv.evalLeft(a.applyS(unitVec(t[3])), t[4]);
            if (v2.isZero()) continue;
            axpy(out, c * v1 * v2, (*a.antipode)[t[2]]);
        }
        s.col[x] = std::move(out);
    });
    return s;
}

} // namespace hopf
