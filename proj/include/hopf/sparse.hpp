#pragma once

#include "hopf/cyclotomic.hpp"

#include <map>
#include <vector>

namespace hopf {

// Basis-indexed sparse vector; zero coefficients are never stored, so the
// map itself is the canonical form and operator== is exact equality.
using Vec = std::map<int, Cyc>;

inline void addTo(Vec& v, int idx, const Cyc& c) {
    if (c.isZero()) return;
    auto [it, inserted] = v.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) v.erase(it);
    }
}

inline void axpy(Vec& v, const Cyc& c, const Vec& w) {
    if (c.isZero()) return;
    for (const auto& [i, x] : w) addTo(v, i, c * x);
}

inline Vec scaled(const Vec& v, const Cyc& c) {
    Vec r;
    axpy(r, c, v);
    return r;
}

inline Vec unitVec(int idx) {
    Vec v;
    v.emplace(idx, Cyc(1));
    return v;
}

inline Cyc coeffOf(const Vec& v, int idx) {
    auto it = v.find(idx);
    return it == v.end() ? Cyc(0) : it->second;
}

inline Vec tensorVec(const Vec& a, const Vec& b, int dimB) {
    Vec r;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            addTo(r, i * dimB + j, x * y);
    return r;
}

std::string vecToString(const Vec& v, const std::vector<std::string>& labels);

// Sparse linear map between basis-indexed spaces; col[i] is the image of
// the i-th domain basis vector.
struct LinMap {
    int dom = 0, cod = 0;
    std::vector<Vec> col;

    LinMap() = default;
    LinMap(int d, int c) : dom(d), cod(c), col(d) {}

    static LinMap identity(int n) {
        LinMap f(n, n);
        for (int i = 0; i < n; ++i) f.col[i] = unitVec(i);
        return f;
    }

    Vec apply(const Vec& v) const {
        Vec r;
        for (const auto& [i, c] : v) axpy(r, c, col[i]);
        return r;
    }

    Cyc entry(int i, int j) const { return coeffOf(col[i], j); } // <e_j, f(e_i)>

    bool operator==(const LinMap& o) const { return dom == o.dom && cod == o.cod && col == o.col; }
};

inline LinMap compose(const LinMap& g, const LinMap& f) { // g after f
    if (f.cod != g.dom) throw std::invalid_argument("composition dimensions do not match");
    LinMap r(f.dom, g.cod);
    for (int i = 0; i < f.dom; ++i) r.col[i] = g.apply(f.col[i]);
    return r;
}

// Scalar-valued map on a tensor square, stored sparsely on basis pairs.
struct BilForm {
    int dim = 0;
    std::map<std::pair<int, int>, Cyc> entries;

    BilForm() = default;
    explicit BilForm(int d) : dim(d) {}

    void set(int i, int j, const Cyc& c) {
        if (c.isZero()) entries.erase({i, j});
        else entries[{i, j}] = c;
    }
    void accum(int i, int j, const Cyc& c) {
        if (c.isZero()) return;
        auto [it, inserted] = entries.emplace(std::make_pair(i, j), c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) entries.erase(it);
        }
    }
    Cyc at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Cyc(0) : it->second;
    }
    Cyc eval(const Vec& a, const Vec& b) const {
        Cyc r(0);
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b) {
                Cyc e = at(i, j);
                if (!e.isZero()) r += x * y * e;
            }
        return r;
    }
    // Evaluation against one sparse slot with the other basis-indexed.
    Cyc evalLeft(const Vec& a, int j) const {
        Cyc r(0);
        for (const auto& [i, x] : a) {
            Cyc e = at(i, j);
            if (!e.isZero()) r += x * e;
        }
        return r;
    }
    Cyc evalRight(int i, const Vec& b) const {
        Cyc r(0);
        for (const auto& [j, y] : b) {
            Cyc e = at(i, j);
            if (!e.isZero()) r += y * e;
        }
        return r;
    }
    bool operator==(const BilForm& o) const { return dim == o.dim && entries == o.entries; }
};

} // namespace hopf
