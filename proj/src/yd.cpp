#include "hopf/yd.hpp"
#include "hopf/parallel.hpp"

namespace hopf {

Report validateYD(const YDStructure& v) {
    Report rep;
    const Presentation& h = *v.H;
    int dv = v.dim(), dh = h.dim();

    timedCheck(rep, "module unit law", [&]() -> std::pair<bool, std::string> {
        for (int m = 0; m < dv; ++m)
            if (v.act(h.unit, unitVec(m)) != unitVec(m))
                return {false, v.labels[m]};
        return {true, ""};
    });
    timedCheck(rep, "module associativity", [&]() -> std::pair<bool, std::string> {
        for (int a = 0; a < dh; ++a)
            for (int b = 0; b < dh; ++b)
                for (int m = 0; m < dv; ++m) {
                    Vec lhs = v.act(h.mult[a][b], unitVec(m));
                    Vec rhs = v.actBasisH(a, v.action[b][m]);
                    if (lhs != rhs)
                        return {false, "(" + h.basis[a] + ", " + h.basis[b] + ", " + v.labels[m] + ")"};
                }
        return {true, ""};
    });
    timedCheck(rep, "comodule counit law", [&]() -> std::pair<bool, std::string> {
        for (int m = 0; m < dv; ++m) {
            Vec r;
            for (const auto& [hw, c] : v.coaction[m]) addTo(r, hw % dv, c * h.counit[hw / dv]);
            if (r != unitVec(m)) return {false, v.labels[m]};
        }
        return {true, ""};
    });
    timedCheck(rep, "comodule coassociativity", [&]() -> std::pair<bool, std::string> {
        for (int m = 0; m < dv; ++m) {
            // (Delta_H (x) id) rho vs (id (x) rho) rho, keyed (h1, h2, w)
            std::map<std::tuple<int, int, int>, Cyc> lhs, rhs;
            for (const auto& [hw, c] : v.coaction[m]) {
                int hh = hw / dv, w = hw % dv;
                for (const auto& [h12, c2] : h.comult[hh]) {
                    auto key = std::make_tuple(h12 / dh, h12 % dh, w);
                    auto [it, ins] = lhs.emplace(key, c * c2);
                    if (!ins) { it->second += c * c2; if (it->second.isZero()) lhs.erase(it); }
                }
                for (const auto& [hw2, c2] : v.coaction[w]) {
                    auto key = std::make_tuple(hh, hw2 / dv, hw2 % dv);
                    auto [it, ins] = rhs.emplace(key, c * c2);
                    if (!ins) { it->second += c * c2; if (it->second.isZero()) rhs.erase(it); }
                }
            }
            if (lhs != rhs) return {false, v.labels[m]};
        }
        return {true, ""};
    });
    timedCheck(rep, "yetter-drinfeld compatibility", [&]() -> std::pair<bool, std::string> {
        if (!h.antipode) return {false, "H has no antipode"};
        for (int hh = 0; hh < dh; ++hh)
            for (int m = 0; m < dv; ++m) {
                // rho(h.v)
                Vec lhs;
                for (const auto& [w, c] : v.action[hh][m]) axpy(lhs, c, v.coaction[w]);
                // h1 v(-1) S(h3) (x) h2 . v0
                Vec rhs;
                for (const auto& [t, c] : h.deltaTuples(hh, 3))
                    for (const auto& [hw, c2] : v.coaction[m]) {
                        Vec hpart = h.mul(h.mulBasisVec(t[0], unitVec(hw / dv)), (*h.antipode)[t[2]]);
                        const Vec& vpart = v.action[t[1]][hw % dv];
                        for (const auto& [x, cx] : hpart)
                            for (const auto& [y, cy] : vpart)
                                addTo(rhs, x * dv + y, c * c2 * cx * cy);
                    }
                if (lhs != rhs) return {false, "(" + h.basis[hh] + ", " + v.labels[m] + ")"};
            }
        return {true, ""};
    });
    return rep;
}

LinMap braiding(const YDStructure& v, const YDStructure& w) {
    int dv = v.dim(), dw = w.dim();
    LinMap c(dv * dw, dw * dv);
    for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dw; ++b) {
            Vec out;
            for (const auto& [hv, cc] : v.coaction[a]) {
                const Vec& moved = w.action[hv / dv][b];
                int v0 = hv % dv;
                for (const auto& [b2, c2] : moved) addTo(out, b2 * dv + v0, cc * c2);
            }
            c.col[a * dw + b] = std::move(out);
        }
    return c;
}

Report validateBraidedCoalgebra(const BraidedCoalgebra& bc) {
    Report rep = validateYD(bc.yd);
    const Presentation& h = *bc.yd.H;
    int d = bc.dim(), dh = h.dim();

    timedCheck(rep, "coassociativity", [&]() -> std::pair<bool, std::string> {
        CoalgebraView cv = bc.view();
        for (int i = 0; i < d; ++i) {
            auto left = deltaTuples(cv, i, 3);
            std::map<std::vector<int>, Cyc> right;
            for (const auto& [jk, c] : bc.comult[i])
                for (const auto& [lm, c2] : bc.comult[jk % d]) {
                    std::vector<int> t{jk / d, lm / d, lm % d};
                    Cyc cc = c * c2;
                    auto [it, ins] = right.emplace(std::move(t), cc);
                    if (!ins) { it->second += cc; if (it->second.isZero()) right.erase(it); }
                }
            if (left != right) return {false, bc.yd.labels[i]};
        }
        return {true, ""};
    });
    timedCheck(rep, "counit laws", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < d; ++i) {
            Vec left, right;
            for (const auto& [jk, c] : bc.comult[i]) {
                addTo(left, jk % d, c * bc.counit[jk / d]);
                addTo(right, jk / d, c * bc.counit[jk % d]);
            }
            if (left != unitVec(i) || right != unitVec(i)) return {false, bc.yd.labels[i]};
        }
        return {true, ""};
    });
    timedCheck(rep, "comultiplication is H-linear", [&]() -> std::pair<bool, std::string> {
        for (int hh = 0; hh < dh; ++hh)
            for (int i = 0; i < d; ++i) {
                Vec lhs = bc.delta(bc.yd.action[hh][i]);
                Vec rhs; // h1 . x^(1) (x) h2 . x^(2)
                for (const auto& [h12, c] : h.comult[hh])
                    for (const auto& [jk, c2] : bc.comult[i]) {
                        const Vec& l = bc.yd.action[h12 / dh][jk / d];
                        const Vec& r = bc.yd.action[h12 % dh][jk % d];
                        for (const auto& [x, cx] : l)
                            for (const auto& [y, cy] : r) addTo(rhs, x * d + y, c * c2 * cx * cy);
                    }
                if (lhs != rhs) return {false, "(" + h.basis[hh] + ", " + bc.yd.labels[i] + ")"};
            }
        return {true, ""};
    });
    timedCheck(rep, "comultiplication is H-colinear", [&]() -> std::pair<bool, std::string> {
        for (int i = 0; i < d; ++i) {
            // rho_{C (x) C} Delta vs (H (x) Delta) rho, keyed (h, j, k)
            std::map<std::tuple<int, int, int>, Cyc> lhs, rhs;
            for (const auto& [jk, c] : bc.comult[i])
                for (const auto& [ha, c2] : bc.yd.coaction[jk / d])
                    for (const auto& [hb, c3] : bc.yd.coaction[jk % d]) {
                        int hm = 0;
                        Vec hv = h.mult[ha / d][hb / d];
                        (void)hm;
                        for (const auto& [hx, cx] : hv) {
                            auto key = std::make_tuple(hx, ha % d, hb % d);
                            Cyc cc = c * c2 * c3 * cx;
                            auto [it, ins] = lhs.emplace(key, cc);
                            if (!ins) { it->second += cc; if (it->second.isZero()) lhs.erase(it); }
                        }
                    }
            for (const auto& [hw, c] : bc.yd.coaction[i])
                for (const auto& [jk, c2] : bc.comult[hw % d]) {
                    auto key = std::make_tuple(hw / d, jk / d, jk % d);
                    Cyc cc = c * c2;
                    auto [it, ins] = rhs.emplace(key, cc);
                    if (!ins) { it->second += cc; if (it->second.isZero()) rhs.erase(it); }
                }
            if (lhs != rhs) return {false, bc.yd.labels[i]};
        }
        return {true, ""};
    });
    timedCheck(rep, "counit is H-linear", [&]() -> std::pair<bool, std::string> {
        for (int hh = 0; hh < dh; ++hh)
            for (int i = 0; i < d; ++i)
                if (bc.eps(bc.yd.action[hh][i]) != h.counit[hh] * bc.counit[i])
                    return {false, "(" + h.basis[hh] + ", " + bc.yd.labels[i] + ")"};
        return {true, ""};
    });
    timedCheck(rep, "coaugmentation", [&]() -> std::pair<bool, std::string> {
        if (!bc.eps(bc.unit).isOne()) return {false, "eps(1) != 1"};
        Vec du = bc.delta(bc.unit);
        Vec uu = tensorVec(bc.unit, bc.unit, d);
        if (du != uu) return {false, "1 not grouplike"};
        for (int hh = 0; hh < dh; ++hh)
            if (bc.yd.act(unitVec(hh), bc.unit) != scaled(bc.unit, h.counit[hh]))
                return {false, "h.1 != eps(h)1 at " + h.basis[hh]};
        Vec rho;
        for (const auto& [i, c] : bc.unit) axpy(rho, c, bc.yd.coaction[i]);
        Vec expect;
        for (const auto& [hu, cu] : h.unit)
            for (const auto& [i, c] : bc.unit) addTo(expect, hu * d + i, cu * c);
        if (rho != expect) return {false, "rho(1) != 1 (x) 1"};
        return {true, ""};
    });
    return rep;
}

BraidedCoalgebra braidedTensorCoalgebra(const BraidedCoalgebra& c, const BraidedCoalgebra& d) {
    if (c.yd.H != d.yd.H && !samePresentation(*c.yd.H, *d.yd.H))
        throw std::invalid_argument("braided tensor product needs a shared H");
    const Presentation& h = *c.yd.H;
    int dc = c.dim(), dd = d.dim(), dh = h.dim(), dt = dc * dd;

    BraidedCoalgebra t;
    t.yd.H = c.yd.H;
    t.yd.labels.reserve(dt);
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dd; ++j)
            t.yd.labels.push_back(c.yd.labels[i] + " (x) " + d.yd.labels[j]);

    t.yd.action.assign(dh, std::vector<Vec>(dt));
    for (int hh = 0; hh < dh; ++hh)
        for (int i = 0; i < dc; ++i)
            for (int j = 0; j < dd; ++j) {
                Vec out;
                for (const auto& [h12, cc] : h.comult[hh]) {
                    const Vec& l = c.yd.action[h12 / dh][i];
                    const Vec& r = d.yd.action[h12 % dh][j];
                    for (const auto& [x, cx] : l)
                        for (const auto& [y, cy] : r) addTo(out, x * dd + y, cc * cx * cy);
                }
                t.yd.action[hh][i * dd + j] = std::move(out);
            }

    t.yd.coaction.assign(dt, Vec{});
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dd; ++j) {
            Vec out;
            for (const auto& [ha, ca] : c.yd.coaction[i])
                for (const auto& [hb, cb] : d.yd.coaction[j]) {
                    const Vec& hv = h.mult[ha / dc][hb / dd];
                    int idx = (ha % dc) * dd + (hb % dd);
                    for (const auto& [hx, cx] : hv) addTo(out, hx * dt + idx, ca * cb * cx);
                }
            t.yd.coaction[i * dd + j] = std::move(out);
        }

    t.comult.assign(dt, Vec{});
    for (int x = 0; x < dc; ++x)
        for (int y = 0; y < dd; ++y) {
            Vec out;
            for (const auto& [x12, c1] : c.comult[x])
                for (const auto& [hx2, c2] : c.yd.coaction[x12 % dc]) // rho(x^(2))
                    for (const auto& [y12, c3] : d.comult[y]) {
                        const Vec& moved = d.yd.action[hx2 / dc][y12 / dd]; // x^(2)_(-1) y^(1)
                        int leftC = x12 / dc, rightC = hx2 % dc, rightD = y12 % dd;
                        for (const auto& [ym, cm] : moved) {
                            int first = leftC * dd + ym;
                            int second = rightC * dd + rightD;
                            addTo(out, first * dt + second, c1 * c2 * c3 * cm);
                        }
                    }
            t.comult[x * dd + y] = std::move(out);
        }

    t.counit.assign(dt, Cyc(0));
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dd; ++j) t.counit[i * dd + j] = c.counit[i] * d.counit[j];

    t.unit = tensorVec(c.unit, d.unit, dd);
    return t;
}

std::map<std::vector<int>, Cyc> deltaTuples(const CoalgebraView& c, int i, int legs) {
    std::map<std::vector<int>, Cyc> cur;
    cur.emplace(std::vector<int>{i}, Cyc(1));
    for (int step = 1; step < legs; ++step) {
        std::map<std::vector<int>, Cyc> next;
        for (const auto& [tuple, cc] : cur)
            for (const auto& [jk, c2] : (*c.comult)[tuple[0]]) {
                std::vector<int> t;
                t.reserve(tuple.size() + 1);
                t.push_back(jk / c.dim);
                t.push_back(jk % c.dim);
                t.insert(t.end(), tuple.begin() + 1, tuple.end());
                Cyc v = cc * c2;
                auto [it, ins] = next.emplace(std::move(t), v);
                if (!ins) { it->second += v; if (it->second.isZero()) next.erase(it); }
            }
        cur = std::move(next);
    }
    return cur;
}

LinMap psiMap(const YDStructure& v, const Vec& alpha) {
    int dv = v.dim();
    LinMap s(dv, v.dimH());
    for (int m = 0; m < dv; ++m) {
        Vec out;
        for (const auto& [hw, c] : v.coaction[m]) {
            Cyc a = coeffOf(alpha, hw % dv);
            if (!a.isZero()) addTo(out, hw / dv, c * a);
        }
        s.col[m] = std::move(out);
    }
    return s;
}

Vec psiInverse(const Presentation& h, const LinMap& sigma) {
    Vec alpha;
    for (int i = 0; i < sigma.dom; ++i) addTo(alpha, i, h.eps(sigma.col[i]));
    return alpha;
}

LinMap phiMap(const CoalgebraView& c, const ModuleView& m, const LinMap& alpha) {
    int dc = c.dim, dm = m.dim;
    LinMap e(dc * dm, dc * dm);
    for (int x = 0; x < dc; ++x)
        for (int mm = 0; mm < dm; ++mm) {
            Vec out;
            for (const auto& [jk, cc] : (*c.comult)[x]) {
                const Vec& a = alpha.col[jk % dc];
                for (const auto& [hh, ch] : a) {
                    const Vec& acted = (*m.action)[hh][mm];
                    for (const auto& [y, cy] : acted) addTo(out, (jk / dc) * dm + y, cc * ch * cy);
                }
            }
            e.col[x * dm + mm] = std::move(out);
        }
    return e;
}

} // namespace hopf
