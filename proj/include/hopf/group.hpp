#pragma once

#include "hopf/cyclotomic.hpp"

#include <string>
#include <vector>

namespace hopf {

// Finite abelian group as a product of cyclic factors; elements are
// exponent tuples encoded in mixed radix, identity at index 0.
struct GroupData {
    std::vector<long> factors;
    std::vector<std::string> genNames;

    GroupData() = default;
    GroupData(std::vector<long> f, std::vector<std::string> names)
        : factors(std::move(f)), genNames(std::move(names)) {}

    long order() const {
        long n = 1;
        for (long f : factors) n *= f;
        return n;
    }

    std::vector<long> tuple(int idx) const {
        std::vector<long> t(factors.size());
        for (size_t i = factors.size(); i-- > 0;) {
            t[i] = idx % factors[i];
            idx = static_cast<int>(idx / factors[i]);
        }
        return t;
    }

    int indexOf(const std::vector<long>& t) const {
        long idx = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            long e = ((t[i] % factors[i]) + factors[i]) % factors[i];
            idx = idx * factors[i] + e;
        }
        return static_cast<int>(idx);
    }

    int mul(int a, int b) const {
        auto ta = tuple(a), tb = tuple(b);
        for (size_t i = 0; i < ta.size(); ++i) ta[i] += tb[i];
        return indexOf(ta);
    }

    int identity() const { return 0; }

    int inverse(int a) const {
        auto t = tuple(a);
        for (long& e : t) e = -e;
        return indexOf(t);
    }

    int power(int a, long e) const {
        auto t = tuple(a);
        for (long& x : t) x *= e;
        return indexOf(t);
    }

    long elementOrder(int a) const {
        long o = 1;
        int x = a;
        while (x != 0) { x = mul(x, a); ++o; }
        return o;
    }

    long fieldOrder() const {
        long n = 1;
        for (long f : factors) n = lcmLong(n, f);
        return n;
    }

    std::string label(int idx) const {
        auto t = tuple(idx);
        std::string s;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0) continue;
            s += genNames[i];
            if (t[i] > 1) s += "^" + std::to_string(t[i]);
        }
        return s.empty() ? "1" : s;
    }
};

// Character of a finite abelian group, chi(gen_i) = zeta_{n_i}^{exps[i]};
// values are roots of unity of order dividing each element's order.
struct Character {
    std::vector<long> exps;

    Cyc eval(const GroupData& G, int elemIdx) const {
        long N = G.fieldOrder();
        auto t = G.tuple(elemIdx);
        long e = 0;
        for (size_t i = 0; i < t.size(); ++i)
            e = (e + t[i] * exps[i] % N * (N / G.factors[i])) % N;
        return Cyc::rootOfUnity(N, e);
    }

    Character times(const GroupData& G, const Character& o) const {
        Character r;
        for (size_t i = 0; i < exps.size(); ++i)
            r.exps.push_back((exps[i] + o.exps[i]) % G.factors[i]);
        return r;
    }

    Character inverse(const GroupData& G) const {
        Character r;
        for (size_t i = 0; i < exps.size(); ++i)
            r.exps.push_back(((-exps[i]) % G.factors[i] + G.factors[i]) % G.factors[i]);
        return r;
    }

    Character power(const GroupData& G, long n) const {
        Character r;
        for (size_t i = 0; i < exps.size(); ++i)
            r.exps.push_back(((exps[i] * n) % G.factors[i] + G.factors[i]) % G.factors[i]);
        return r;
    }

    bool isTrivial(const GroupData& G) const {
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] % G.factors[i] != 0) return false;
        return true;
    }
};

// Multiplicative order of a root of unity.
long rootOrder(const Cyc& c);

} // namespace hopf
