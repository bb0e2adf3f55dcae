#include "hopf/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopf {

long eulerPhi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rat>; // low degree first

void polyTrim(Poly& p) {
    while (!p.empty() && isZero(p.back())) p.pop_back();
}

// Remainder of a modulo the monic polynomial m, in place.
void polyModMonic(Poly& a, const Poly& m) {
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rat lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (!isZero(lead))
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] -= lead * m[i];
        a.pop_back();
        polyTrim(a);
        if (a.size() <= dm) break;
    }
}

// Exact quotient a / b for monic b dividing a.
Poly polyDivMonicExact(Poly a, const Poly& b) {
    polyTrim(a);
    const size_t db = b.size() - 1;
    if (a.empty()) return {};
    Poly q(a.size() - db, Rat(0));
    for (size_t i = a.size(); i-- > db;) {
        Rat c = a[i];
        if (isZero(c)) continue;
        size_t shift = i - db;
        q[shift] = c;
        for (size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    }
    polyTrim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::map<long, Poly> g_cycloCache;
std::mutex g_cycloMutex;

Poly computeCyclotomic(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, Rat(0));
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = polyDivMonicExact(std::move(num), cyclotomicPolynomial(d));
    }
    return num;
}

} // namespace

const std::vector<Rat>& cyclotomicPolynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(g_cycloMutex);
        auto it = g_cycloCache.find(n);
        if (it != g_cycloCache.end()) return it->second;
    }
    Poly p = n == 1 ? Poly{Rat(-1), Rat(1)} : computeCyclotomic(n);
    std::lock_guard<std::mutex> lock(g_cycloMutex);
    return g_cycloCache.emplace(n, std::move(p)).first->second;
}

Cyc Cyc::fromCoeffs(long n, std::vector<Rat> raw) {
    const Poly& phi = cyclotomicPolynomial(n);
    polyTrim(raw);
    polyModMonic(raw, phi);
    Cyc c;
    c.order_ = n;
    c.coeffs_.assign(phi.size() - 1, Rat(0));
    for (size_t i = 0; i < raw.size(); ++i) c.coeffs_[i] = raw[i];
    if (c.coeffs_.empty()) c.coeffs_.assign(1, Rat(0)); // n = 1 edge: phi has degree 1
    return c;
}

Cyc Cyc::rootOfUnity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root-of-unity order must be positive");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    long m = n / g;
    k /= g;
    std::vector<Rat> raw(static_cast<size_t>(k) + 1, Rat(0));
    raw[k] = Rat(1);
    return fromCoeffs(m, std::move(raw));
}

bool Cyc::isZero() const {
    for (const Rat& c : coeffs_)
        if (!hopf::isZero(c)) return false;
    return true;
}

bool Cyc::isOne() const {
    if (hopf::isZero(coeffs_[0] - 1)) {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!hopf::isZero(coeffs_[i])) return false;
        return true;
    }
    return false;
}

bool Cyc::isRational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!hopf::isZero(coeffs_[i])) return false;
    return true;
}

Rat Cyc::rationalValue() const {
    if (!isRational()) throw std::logic_error("value is not rational");
    return coeffs_[0];
}

Cyc Cyc::coerced(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("coercion target must be a multiple of the order");
    long step = m / order_;
    std::vector<Rat> raw(static_cast<size_t>(coeffs_.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return fromCoeffs(m, std::move(raw));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (order_ == o.order_) {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    long m = lcmLong(order_, o.order_);
    *this = coerced(m);
    Cyc b = o.coerced(m);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
    if (isZero()) return *this;
    if (o.isZero()) { *this = Cyc(); return *this; }
    if (o.order_ == 1) { // scaling by a rational
        const Rat& c = o.coeffs_[0];
        for (Rat& x : coeffs_) x *= c;
        return *this;
    }
    if (order_ == 1) {
        Rat c = coeffs_[0];
        *this = o;
        for (Rat& x : coeffs_) x *= c;
        return *this;
    }
    if (order_ != o.order_) {
        long m = lcmLong(order_, o.order_);
        Cyc a = coerced(m);
        a *= o.coerced(m);
        *this = std::move(a);
        return *this;
    }
    std::vector<Rat> raw(2 * coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (hopf::isZero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (hopf::isZero(o.coeffs_[j])) continue;
            raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    *this = fromCoeffs(order_, std::move(raw));
    return *this;
}

Cyc Cyc::inv() const {
    if (isZero()) throw std::domain_error("inversion of zero");
    if (isRational()) return Cyc(Rat(1) / coeffs_[0]);
    // Extended Euclid in Q[x]: u * this + v * Phi = gcd = const.
    Poly r0 = cyclotomicPolynomial(order_);
    Poly r1(coeffs_.begin(), coeffs_.end());
    polyTrim(r1);
    Poly s0{}, s1{Rat(1)}; // coefficients of `this`
    while (true) {
        // r0 = q * r1 + r2
        Poly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
        Poly r2 = r0;
        Rat leadInv = Rat(1) / r1.back();
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat c = r2.back() * leadInv;
            size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) r2[shift + j] -= c * r1[j];
            polyTrim(r2);
        }
        // s2 = s0 - q * s1
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (hopf::isZero(q[i])) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        polyTrim(s2);
        if (r2.empty()) {
            // r1 is the gcd; it must be a nonzero constant since Phi_n is
            // squarefree and `this` is nonzero of smaller degree.
            if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
            Rat ginv = Rat(1) / r1[0];
            for (Rat& c : s1) c *= ginv;
            return fromCoeffs(order_, std::move(s1));
        }
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc base = *this, acc = Cyc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyc::operator==(const Cyc& o) const {
    if (order_ == o.order_) return coeffs_ == o.coeffs_;
    long m = lcmLong(order_, o.order_);
    return coerced(m).coeffs_ == o.coerced(m).coeffs_;
}

std::string Cyc::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (hopf::isZero(coeffs_[i])) continue;
        Rat c = coeffs_[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << ratToString(c);
        } else {
            if (c != 1) os << ratToString(c) << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

} // namespace hopf
