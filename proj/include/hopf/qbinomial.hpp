#pragma once

#include "hopf/cyclotomic.hpp"
#include "hopf/report.hpp"

#include <map>
#include <mutex>

namespace hopf {

// Gaussian binomials at a fixed q, memoized through the q-Pascal recurrence
//   [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q,
// never through division of q-factorials (q-integers vanish at roots of
// unity). Out-of-range arguments give 0.
class QBinomialTable {
public:
    explicit QBinomialTable(Cyc q);

    const Cyc& q() const { return q_; }
    Cyc binom(long n, long k) const;
    Cyc factorial(long m) const; // (m)!_q = prod_{j=1..m} (1 + q + ... + q^{j-1})

private:
    Cyc q_;
    mutable std::map<std::pair<long, long>, Cyc> memo_;
    mutable std::map<long, Cyc> factMemo_;
    mutable std::mutex mutex_;

    Cyc binomLocked(long n, long k) const;
};

Cyc qFactorial(long m, const Cyc& q);
Cyc gaussBinomial(long n, long k, const Cyc& q);

// Exhaustively checks the three q-identities the quantum-plane computations
// rest on, for all parameters up to maxN and q primitive of each listed
// order: the q-Chu-Vandermonde sum, [ord+k, k]_q = 1 for k <= ord, and
// [n,k]_{q^{-1}} q^{k(n-k)} = [n,k]_q. The first counterexample is reported.
Report verifyQIdentities(long maxN, const std::vector<long>& orders);

} // namespace hopf
