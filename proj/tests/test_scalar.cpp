#include "hopf/group.hpp"
#include "hopf/qbinomial.hpp"

#include <doctest.h>

#include <random>

using namespace hopf;

TEST_CASE("primitive cube root satisfies its minimal polynomial") {
    Cyc z = Cyc::rootOfUnity(3);
    CHECK((z + z * z + Cyc(1)).isZero());
    CHECK(z.pow(3).isOne());
}

TEST_CASE("inverse of zeta_4 is zeta_4^3") {
    Cyc i = Cyc::rootOfUnity(4);
    CHECK(i.inv() == Cyc::rootOfUnity(4, 3));
    CHECK((i.inv() * i).isOne());
}

TEST_CASE("(1+q)^2 at q = zeta_3 reduces to zeta_3") {
    // hand oracle: 1 + 2q + q^2, and q^2 = -1 - q mod  q^2 + q + 1, so the
    // reduced coefficient vector is (0, 1)
    Cyc q = Cyc::rootOfUnity(3);
    Cyc v = (Cyc(1) + q) * (Cyc(1) + q);
    CHECK(v == Cyc::fromCoeffs(3, {Rat(0), Rat(1)}));
    CHECK(v == q);
}

TEST_CASE("coercion identifies zeta_3 with zeta_9^3") {
    CHECK(Cyc::rootOfUnity(3) == Cyc::rootOfUnity(9, 3));
    CHECK(Cyc::rootOfUnity(3).coerced(9).order() == 9);
    CHECK(Cyc::rootOfUnity(12, 4) == Cyc::rootOfUnity(3));
}

TEST_CASE("inversion of zero is rejected") {
    CHECK_THROWS_AS(Cyc(0).inv(), std::domain_error);
}

TEST_CASE("field axioms on seeded random triples") {
    std::mt19937_64 eng(20240817);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> ord(1, 12);
    auto randomCyc = [&]() {
        long n = ord(eng);
        std::vector<Rat> c(eulerPhi(n));
        for (auto& x : c) x = Rat(coeff(eng));
        return Cyc::fromCoeffs(n, std::move(c));
    };
    for (int trial = 0; trial < 60; ++trial) {
        Cyc a = randomCyc(), b = randomCyc(), c = randomCyc();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.isZero()) {
            CHECK((a * a.inv()).isOne());
            CHECK(a.pow(-2) == (a * a).inv());
        }
    }
}

TEST_CASE("q-factorial and small binomials") {
    Cyc q = Cyc::rootOfUnity(3);
    QBinomialTable tab(q);
    CHECK(tab.factorial(0).isOne());
    CHECK(tab.factorial(2) == Cyc(1) + q); // (2)!_q = (1)(1+q)
    CHECK(tab.binom(5, 0).isOne());
    CHECK(tab.binom(4, 4).isOne());
    CHECK(tab.binom(4, 5).isZero());
    CHECK(tab.binom(-1, 0).isZero());
    CHECK(gaussBinomial(2, 1, q) == Cyc(1) + q);
}

TEST_CASE("binom(3,1) at a primitive square root of unity is 1") {
    Cyc q = Cyc::rootOfUnity(2);
    CHECK(gaussBinomial(3, 1, q).isOne()); // r = 2, k = 1 instance of binom(r+k,k)_q = 1
}

TEST_CASE("symmetry and the q-Pascal recurrence") {
    for (long ord : {2L, 3L, 4L, 8L}) {
        QBinomialTable tab(Cyc::rootOfUnity(ord));
        const Cyc& q = tab.q();
        for (long n = 0; n <= 7; ++n)
            for (long k = 0; k <= n; ++k) {
                CHECK(tab.binom(n, k) == tab.binom(n, n - k));
                if (n > 0)
                    CHECK(tab.binom(n, k) == tab.binom(n - 1, k - 1) + q.pow(k) * tab.binom(n - 1, k));
            }
    }
}

TEST_CASE("chu-vandermonde by brute-force summation at a = b = r = 2, q = zeta_3") {
    Cyc q = Cyc::rootOfUnity(3);
    QBinomialTable tab(q);
    Cyc lhs(0);
    for (long k = 0; k <= 2; ++k)
        lhs += tab.binom(2, k) * tab.binom(2, 2 - k) * q.pow((2 - k) * (2 - k));
    CHECK(lhs == tab.binom(4, 2));
}

TEST_CASE("q-identity suite over the acceptance orders") {
    Report rep = verifyQIdentities(8, {2, 3, 4, 8});
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("degenerate parameters of the identities") {
    // a = b = r = 0: both sides are 1
    Cyc q = Cyc::rootOfUnity(4);
    QBinomialTable tab(q);
    Cyc lhs(0);
    for (long k = 0; k <= 0; ++k) lhs += tab.binom(0, k) * tab.binom(0, -k) * q.pow(0);
    CHECK(lhs.isOne());
    CHECK(tab.binom(0, 0).isOne());
}

TEST_CASE("root order detection") {
    CHECK(rootOrder(Cyc(1)) == 1);
    CHECK(rootOrder(Cyc(-1)) == 2);
    CHECK(rootOrder(Cyc::rootOfUnity(9, 3)) == 3);
    CHECK_THROWS(rootOrder(Cyc(2)));
}
