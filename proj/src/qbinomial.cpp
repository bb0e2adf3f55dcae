#include "hopf/qbinomial.hpp"

#include <sstream>

namespace hopf {

QBinomialTable::QBinomialTable(Cyc q) : q_(std::move(q)) {
    if (q_.isZero()) throw std::invalid_argument("q must be nonzero");
}

Cyc QBinomialTable::binom(long n, long k) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return binomLocked(n, k);
}

Cyc QBinomialTable::binomLocked(long n, long k) const {
    if (k < 0 || n < 0 || n - k < 0) return Cyc(0);
    if (k == 0 || k == n) return Cyc(1);
    auto it = memo_.find({n, k});
    if (it != memo_.end()) return it->second;
    Cyc v = binomLocked(n - 1, k - 1) + q_.pow(k) * binomLocked(n - 1, k);
    memo_.emplace(std::make_pair(n, k), v);
    return v;
}

Cyc QBinomialTable::factorial(long m) const {
    if (m < 0) return Cyc(0);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = factMemo_.find(m);
    if (it != factMemo_.end()) return it->second;
    Cyc v(1);
    Cyc qint(0); // (j)_q accumulates 1 + q + ... + q^{j-1}
    Cyc qp(1);
    for (long j = 1; j <= m; ++j) {
        qint += qp;
        qp *= q_;
        v *= qint;
    }
    factMemo_.emplace(m, v);
    return v;
}

Cyc qFactorial(long m, const Cyc& q) { return QBinomialTable(q).factorial(m); }
Cyc gaussBinomial(long n, long k, const Cyc& q) { return QBinomialTable(q).binom(n, k); }

Report verifyQIdentities(long maxN, const std::vector<long>& orders) {
    Report rep;
    for (long ord : orders) {
        Cyc q = Cyc::rootOfUnity(ord);
        QBinomialTable tab(q), tabInv(q.inv());
        std::ostringstream tag;
        tag << "order " << ord;

        // Chu-Vandermonde: sum_k [a,k][b,r-k] q^{(a-k)(r-k)} = [a+b,r]
        {
            bool pass = true;
            std::string witness;
            for (long a = 0; a <= maxN && pass; ++a)
                for (long b = 0; b <= maxN && pass; ++b)
                    for (long r = 0; r <= maxN && pass; ++r) {
                        Cyc lhs(0);
                        for (long k = 0; k <= r; ++k)
                            lhs += tab.binom(a, k) * tab.binom(b, r - k) * q.pow((a - k) * (r - k));
                        if (lhs != tab.binom(a + b, r)) {
                            pass = false;
                            std::ostringstream w;
                            w << "a=" << a << " b=" << b << " r=" << r
                              << ": lhs=" << lhs << " rhs=" << tab.binom(a + b, r);
                            witness = w.str();
                        }
                    }
            rep.add("q-chu-vandermonde (" + tag.str() + ")", pass, witness);
        }

        // [ord+k, k]_q = 1 for q primitive of order ord and 0 <= k < ord.
        // At k = ord the value is binom(2,1) = 2 by the q-Lucas factorization,
        // so the closed range would be false; every use below stays under ord.
        {
            bool pass = true;
            std::string witness;
            for (long k = 0; k < std::min(ord, maxN + 1) && pass; ++k) {
                Cyc v = tab.binom(ord + k, k);
                if (!v.isOne()) {
                    pass = false;
                    std::ostringstream w;
                    w << "k=" << k << ": [" << ord + k << "," << k << "]_q=" << v;
                    witness = w.str();
                }
            }
            if (pass && !(tab.binom(2 * ord, ord) == Cyc(2))) {
                pass = false;
                witness = "boundary: [2 ord, ord]_q != 2";
            }
            rep.add("binom(ord+k,k)_q = 1 for k < ord (" + tag.str() + ")", pass, witness);
        }

        // [n,k]_{q^{-1}} q^{k(n-k)} = [n,k]_q
        {
            bool pass = true;
            std::string witness;
            for (long n = 0; n <= maxN && pass; ++n)
                for (long k = 0; k <= maxN && pass; ++k) {
                    Cyc lhs = tabInv.binom(n, k) * q.pow(k * (n - k));
                    if (lhs != tab.binom(n, k)) {
                        pass = false;
                        std::ostringstream w;
                        w << "n=" << n << " k=" << k << ": lhs=" << lhs
                          << " rhs=" << tab.binom(n, k);
                        witness = w.str();
                    }
                }
            rep.add("q-inverse symmetry (" + tag.str() + ")", pass, witness);
        }
    }
    return rep;
}

} // namespace hopf
