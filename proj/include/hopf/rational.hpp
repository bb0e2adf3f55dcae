#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hopf {

using Rat = mpq_class;

inline bool isZero(const Rat& r) { return sgn(r) == 0; }

// Parses "p" or "p/q" into a canonical exact rational.
inline Rat parseRat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string ratToString(const Rat& r) {
    return r.get_str();
}

inline long lcmLong(long a, long b) {
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(b));
    return a / g.get_si() * b;
}

} // namespace hopf
