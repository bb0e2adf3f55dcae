#include "hopf/presentation.hpp"
#include "hopf/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

long rootOrder(const Cyc& c) {
    Cyc acc = c;
    long cap = 2 * c.order() + 2;
    for (long k = 1; k <= cap; ++k) {
        if (acc.isOne()) return k;
        acc *= c;
    }
    throw std::invalid_argument("not a root of unity: " + c.str());
}

Level parseLevel(const std::string& s) {
    if (s == "coalgebra") return Level::Coalgebra;
    if (s == "algebra") return Level::Algebra;
    if (s == "bialgebra") return Level::Bialgebra;
    if (s == "hopf") return Level::Hopf;
    throw std::invalid_argument("unknown level: " + s);
}

std::string levelName(Level l) {
    switch (l) {
        case Level::Coalgebra: return "coalgebra";
        case Level::Algebra: return "algebra";
        case Level::Bialgebra: return "bialgebra";
        case Level::Hopf: return "hopf";
    }
    return "?";
}

std::string vecToString(const Vec& v, const std::vector<std::string>& labels) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")*" << (i < static_cast<int>(labels.size()) ? labels[i] : "#" + std::to_string(i));
    }
    return os.str();
}

Vec Presentation::mulTensorSquare(const Vec& u, const Vec& v) const {
    int d = dim();
    Vec r;
    for (const auto& [p, x] : u)
        for (const auto& [q, y] : v) {
            const Vec& left = mult[p / d][q / d];
            const Vec& right = mult[p % d][q % d];
            Cyc c = x * y;
            for (const auto& [a, ca] : left)
                for (const auto& [b, cb] : right) addTo(r, a * d + b, c * ca * cb);
        }
    return r;
}

std::map<std::vector<int>, Cyc> Presentation::deltaTuples(int i, int legs) const {
    int d = dim();
    std::map<std::vector<int>, Cyc> cur;
    cur.emplace(std::vector<int>{i}, Cyc(1));
    for (int step = 1; step < legs; ++step) {
        std::map<std::vector<int>, Cyc> next;
        for (const auto& [tuple, c] : cur) {
            for (const auto& [jk, c2] : comult[tuple[0]]) {
                std::vector<int> t;
                t.reserve(tuple.size() + 1);
                t.push_back(jk / d);
                t.push_back(jk % d);
                t.insert(t.end(), tuple.begin() + 1, tuple.end());
                Cyc cc = c * c2;
                auto [it, inserted] = next.emplace(std::move(t), cc);
                if (!inserted) {
                    it->second += cc;
                    if (it->second.isZero()) next.erase(it);
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Deterministic merge of per-index witnesses: lowest index wins.
struct WitnessCollector {
    std::vector<std::string> slots;
    explicit WitnessCollector(int n) : slots(n) {}
    std::string first() const {
        for (const auto& s : slots)
            if (!s.empty()) return s;
        return "";
    }
    bool ok() const { return first().empty(); }
};

} // namespace

std::vector<int> grouplikeBasisElements(const Presentation& p) {
    std::vector<int> g;
    int d = p.dim();
    for (int i = 0; i < d; ++i) {
        if (!p.counit[i].isOne()) continue;
        if (p.comult[i] == unitVec(i * d + i)) g.push_back(i);
    }
    return g;
}

Report validateStructure(Presentation& p, Level level) {
    Report rep;
    int d = p.dim();

    bool wantCoalgebra = true;
    bool wantAlgebra = level != Level::Coalgebra;
    bool wantBi = level == Level::Bialgebra || level == Level::Hopf;
    bool wantHopf = level == Level::Hopf;
    if (level == Level::Algebra) wantCoalgebra = false;

    if (wantCoalgebra) {
        timedCheck(rep, "coassociativity", [&] {
            WitnessCollector w(d);
            parallelFor(d, [&](int i) {
                auto leftNested = p.deltaTuples(i, 3); // (Delta (x) id) Delta
                std::map<std::vector<int>, Cyc> rightNested;
                for (const auto& [jk, c] : p.comult[i])
                    for (const auto& [lm, c2] : p.comult[jk % d]) {
                        std::vector<int> t{jk / d, lm / d, lm % d};
                        Cyc cc = c * c2;
                        auto [it, ins] = rightNested.emplace(std::move(t), cc);
                        if (!ins) {
                            it->second += cc;
                            if (it->second.isZero()) rightNested.erase(it);
                        }
                    }
                if (leftNested != rightNested) w.slots[i] = p.basis[i];
            });
            return std::make_pair(w.ok(), w.ok() ? "" : "basis element " + w.first());
        });
        timedCheck(rep, "counit laws", [&] {
            WitnessCollector w(d);
            parallelFor(d, [&](int i) {
                Vec left, right;
                for (const auto& [jk, c] : p.comult[i]) {
                    addTo(left, jk % d, c * p.counit[jk / d]);
                    addTo(right, jk / d, c * p.counit[jk % d]);
                }
                if (left != unitVec(i) || right != unitVec(i)) w.slots[i] = p.basis[i];
            });
            return std::make_pair(w.ok(), w.ok() ? "" : "basis element " + w.first());
        });
    }

    if (wantAlgebra) {
        timedCheck(rep, "associativity", [&] {
            WitnessCollector w(d);
            parallelFor(d, [&](int i) {
                // dense scratch accumulators, reused across the inner loops
                std::vector<Cyc> acc(d);
                std::vector<int> touched;
                touched.reserve(d);
                for (int j = 0; j < d && w.slots[i].empty(); ++j)
                    for (int k = 0; k < d; ++k) {
                        for (const auto& [t, c] : p.mult[i][j])
                            for (const auto& [u, cc] : p.mult[t][k]) {
                                Cyc prod = c * cc;
                                if (prod.isZero()) continue;
                                if (acc[u].isZero() &&
                                    std::find(touched.begin(), touched.end(), u) == touched.end())
                                    touched.push_back(u);
                                acc[u] += prod;
                            }
                        for (const auto& [t, c] : p.mult[j][k])
                            for (const auto& [u, cc] : p.mult[i][t]) {
                                Cyc prod = c * cc;
                                if (prod.isZero()) continue;
                                if (acc[u].isZero() &&
                                    std::find(touched.begin(), touched.end(), u) == touched.end())
                                    touched.push_back(u);
                                acc[u] -= prod;
                            }
                        bool zero = true;
                        for (int t : touched)
                            if (!acc[t].isZero()) { zero = false; break; }
                        for (int t : touched) acc[t] = Cyc(0);
                        touched.clear();
                        if (!zero) {
                            w.slots[i] = "(" + p.basis[i] + ", " + p.basis[j] + ", " + p.basis[k] + ")";
                            break;
                        }
                    }
            });
            return std::make_pair(w.ok(), w.ok() ? "" : "triple " + w.first());
        });
        timedCheck(rep, "unit laws", [&] {
            for (int i = 0; i < d; ++i) {
                if (p.mul(p.unit, unitVec(i)) != unitVec(i) || p.mul(unitVec(i), p.unit) != unitVec(i))
                    return std::make_pair(false, "basis element " + p.basis[i]);
            }
            return std::make_pair(true, std::string());
        });
    }

    if (wantBi) {
        timedCheck(rep, "comultiplication is an algebra map", [&] {
            WitnessCollector w(d);
            parallelFor(d, [&](int i) {
                for (int j = 0; j < d; ++j) {
                    if (p.delta(p.mult[i][j]) != p.mulTensorSquare(p.comult[i], p.comult[j])) {
                        w.slots[i] = "(" + p.basis[i] + ", " + p.basis[j] + ")";
                        break;
                    }
                }
            });
            return std::make_pair(w.ok(), w.ok() ? "" : "pair " + w.first());
        });
        timedCheck(rep, "counit is an algebra map", [&] {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (p.eps(p.mult[i][j]) != p.counit[i] * p.counit[j])
                        return std::make_pair(false, "pair (" + p.basis[i] + ", " + p.basis[j] + ")");
            return std::make_pair(true, std::string());
        });
        timedCheck(rep, "unit is grouplike", [&] {
            int dd = d;
            Vec du = p.delta(p.unit);
            Vec uu = tensorVec(p.unit, p.unit, dd);
            bool ok = du == uu && p.eps(p.unit).isOne();
            return std::make_pair(ok, ok ? "" : "unit");
        });
    }

    if (wantHopf) {
        timedCheck(rep, "antipode identities", [&] {
            if (!p.antipode) return std::make_pair(false, std::string("antipode data missing"));
            WitnessCollector w(d);
            parallelFor(d, [&](int i) {
                Vec lhs, rhs;
                for (const auto& [jk, c] : p.comult[i]) {
                    axpy(lhs, c, p.mul((*p.antipode)[jk / d], unitVec(jk % d)));
                    axpy(rhs, c, p.mul(unitVec(jk / d), (*p.antipode)[jk % d]));
                }
                Vec expect = scaled(p.unit, p.counit[i]);
                if (lhs != expect || rhs != expect) w.slots[i] = p.basis[i];
            });
            return std::make_pair(w.ok(), w.ok() ? "" : "basis element " + w.first());
        });
    }

    if (rep.ok()) {
        if (wantCoalgebra) p.verified.coalgebra = true;
        if (wantAlgebra) p.verified.algebra = true;
        if (wantBi) p.verified.bialgebra = true;
        if (wantHopf) p.verified.hopf = true;
    }
    return rep;
}

Presentation groupAlgebra(const GroupData& g, const std::string& name) {
    Presentation p;
    p.name = name.empty() ? "K[G]" : name;
    p.fieldOrder = g.fieldOrder();
    int n = static_cast<int>(g.order());
    p.basis.reserve(n);
    for (int i = 0; i < n; ++i) p.basis.push_back(g.label(i));
    p.initEmpty(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) p.mult[i][j] = unitVec(g.mul(i, j));
        p.comult[i] = unitVec(i * n + i);
        p.counit[i] = Cyc(1);
    }
    p.unit = unitVec(g.identity());
    p.antipode.emplace(n);
    for (int i = 0; i < n; ++i) (*p.antipode)[i] = unitVec(g.inverse(i));
    return p;
}

IntegralResult totalIntegral(const Presentation& h) {
    int d = h.dim();
    // (id (x) lambda) Delta(x) = lambda(x) 1 : rows (x, j), unknowns lambda_k.
    Matrix m(d * d, d);
    for (int x = 0; x < d; ++x) {
        for (const auto& [jk, c] : h.comult[x]) m[x * d + jk / d][jk % d] += c;
        for (const auto& [j, u] : h.unit) m[x * d + j][x] -= u;
    }
    auto ker = kernelBasis(std::move(m));
    if (ker.size() != 1) throw std::runtime_error("left integral space is not 1-dimensional");
    Vec lambda;
    for (int k = 0; k < d; ++k) addTo(lambda, k, ker[0][k]);
    Cyc atUnit(0);
    for (const auto& [i, c] : h.unit) atUnit += c * coeffOf(lambda, i);
    if (atUnit.isZero()) throw std::runtime_error("integral vanishes on 1; cannot normalize");
    lambda = scaled(lambda, atUnit.inv());

    IntegralResult r;
    r.lambda = lambda;
    // right integral: (lambda (x) id) Delta(x) = lambda(x) 1
    r.twoSided = true;
    for (int x = 0; x < d && r.twoSided; ++x) {
        Vec got;
        for (const auto& [jk, c] : h.comult[x]) addTo(got, jk % d, c * coeffOf(lambda, jk / d));
        if (got != scaled(h.unit, coeffOf(lambda, x))) r.twoSided = false;
    }
    // ad-invariance: lambda(h_(1) m S(h_(2))) = eps(h) lambda(m), both sides.
    r.adInvariant = true;
    auto adj = adjointActionTable(h);
    for (int hh = 0; hh < d && r.adInvariant; ++hh)
        for (int mm = 0; mm < d; ++mm) {
            Cyc lhs(0);
            for (const auto& [i, c] : adj[hh][mm]) lhs += c * coeffOf(lambda, i);
            if (lhs != h.counit[hh] * coeffOf(lambda, mm)) { r.adInvariant = false; break; }
        }
    return r;
}

std::vector<std::vector<Vec>> adjointActionTable(const Presentation& h) {
    if (!h.antipode) throw std::logic_error("adjoint action needs an antipode");
    int d = h.dim();
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
    for (int x = 0; x < d; ++x)
        for (int m = 0; m < d; ++m) {
            Vec r;
            for (const auto& [jk, c] : h.comult[x])
                axpy(r, c, h.mulBasisVec(jk / d, h.mul(unitVec(m), (*h.antipode)[jk % d])));
            table[x][m] = std::move(r);
        }
    return table;
}

std::optional<std::vector<Vec>> solvePointedAntipode(const Presentation& p,
                                                     const std::vector<int>& degree) {
    int d = p.dim();
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] < degree[b]; });

    std::vector<Vec> s(d);
    std::vector<bool> known(d, false);
    // Basis inverse of a grouplike, if one exists in the basis.
    auto basisInverse = [&](int g) -> int {
        for (int j = 0; j < d; ++j)
            if (p.mult[g][j] == p.unit && p.mult[j][g] == p.unit) return j;
        return -1;
    };

    for (int x : order) {
        Vec rhs = scaled(p.unit, p.counit[x]);
        Vec diag; // sum of Delta(x) terms x (x) k, all k of degree 0
        bool solvable = true;
        for (const auto& [jk, c] : p.comult[x]) {
            int j = jk / d, k = jk % d;
            if (j == x) {
                if (degree[k] != 0) { solvable = false; break; }
                addTo(diag, k, c);
            } else {
                if (!known[j]) { solvable = false; break; }
                axpy(rhs, -c, p.mulVecBasis(s[j], k));
            }
        }
        if (!solvable || diag.size() != 1) return std::nullopt;
        auto [g, cg] = *diag.begin();
        int ginv = basisInverse(g);
        if (ginv < 0) return std::nullopt;
        s[x] = scaled(p.mulVecBasis(rhs, ginv), cg.inv());
        known[x] = true;
    }
    return s;
}

bool samePresentation(const Presentation& a, const Presentation& b) {
    return a.basis.size() == b.basis.size() && a.mult == b.mult && a.unit == b.unit &&
           a.comult == b.comult && a.counit == b.counit;
}

} // namespace hopf
