#pragma once

#include "hopf/rational.hpp"

#include <vector>
#include <string>
#include <iosfwd>

namespace hopf {

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, z, ..., z^{phi(n)-1} modulo the n-th cyclotomic polynomial.
// Coefficients are exact rationals; every value is kept reduced, so
// equality is coefficient-wise after coercion to a common order.
class Cyc {
public:
    Cyc() : order_(1), coeffs_(1) {}
    Cyc(long v) : order_(1), coeffs_(1, Rat(v)) {}
    Cyc(const Rat& v) : order_(1), coeffs_(1, v) {}

    // zeta_n^k, stored at the smallest order n/gcd(k,n).
    static Cyc rootOfUnity(long n, long k = 1);
    // Value from an unreduced coefficient vector over Q(zeta_n).
    static Cyc fromCoeffs(long n, std::vector<Rat> raw);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool isZero() const;
    bool isOne() const;
    bool isRational() const;
    Rat rationalValue() const; // requires isRational()

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }

    Cyc inv() const;              // throws on zero
    Cyc pow(long e) const;        // negative e inverts
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Same value re-expressed in Q(zeta_m); m must be a multiple of order().
    Cyc coerced(long m) const;

    std::string str() const; // human-readable, e.g. "1 + 2*z9^3"

    friend std::ostream& operator<<(std::ostream& os, const Cyc& c);

private:
    long order_;
    std::vector<Rat> coeffs_; // size phi(order_)
};

long eulerPhi(long n);
// Coefficients of the n-th cyclotomic polynomial, low degree first, monic.
const std::vector<Rat>& cyclotomicPolynomial(long n);

} // namespace hopf
