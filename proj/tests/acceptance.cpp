// Acceptance suite: one verdict per criterion, all tolerances exact.
// Criteria are evaluated from the gallery suite reports by exact check-name
// selection, so a renamed or missing check fails loudly rather than
// silently passing.

#include "hopf/gallery.hpp"

#include <chrono>
#include <iostream>

using namespace hopf;

namespace {

int g_failures = 0;

struct Selection {
    bool pass = true;
    std::vector<std::string> missing;
    std::vector<const CheckRecord*> failed;
    int matched = 0;
};

Selection selectByNames(const Report& rep, const std::vector<std::string>& names) {
    Selection s;
    for (const auto& n : names) {
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.name == n) {
                found = true;
                ++s.matched;
                if (!c.pass) {
                    s.pass = false;
                    s.failed.push_back(&c);
                }
            }
        if (!found) {
            s.pass = false;
            s.missing.push_back(n);
        }
    }
    return s;
}

Selection selectByPrefixes(const Report& rep, const std::vector<std::string>& prefixes) {
    Selection s;
    for (const auto& p : prefixes) {
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.name.rfind(p, 0) == 0) {
                found = true;
                ++s.matched;
                if (!c.pass) {
                    s.pass = false;
                    s.failed.push_back(&c);
                }
            }
        if (!found) {
            s.pass = false;
            s.missing.push_back(p + "*");
        }
    }
    return s;
}

void verdict(int criterion, const std::string& label, const Selection& s, double seconds = -1.0) {
    std::cout << "CRITERION " << criterion << ": " << (s.pass ? "PASS" : "FAIL") << "  " << label;
    std::cout << "  [" << s.matched << " checks";
    if (seconds >= 0) std::cout << ", " << seconds << "s";
    std::cout << "]\n";
    for (const auto& m : s.missing) std::cout << "    missing check: " << m << "\n";
    for (const auto* f : s.failed)
        std::cout << "    failed: " << f->name << (f->witness.empty() ? "" : "  [" + f->witness + "]")
                  << "\n";
    if (!s.pass) ++g_failures;
}

Selection merge(std::initializer_list<Selection> parts) {
    Selection out;
    for (const auto& p : parts) {
        out.pass = out.pass && p.pass;
        out.matched += p.matched;
        out.missing.insert(out.missing.end(), p.missing.begin(), p.missing.end());
        out.failed.insert(out.failed.end(), p.failed.begin(), p.failed.end());
    }
    return out;
}

double secondsSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic; every tolerance is equality)\n";

    // ----- criterion 1: the q-identity suite
    {
        auto t0 = std::chrono::steady_clock::now();
        Report rep = verifyQIdentities(8, {2, 3, 4, 6, 8, 9, 12});
        Selection s = selectByPrefixes(rep, {"q-chu-vandermonde", "binom(ord+k,k)_q = 1 for k < ord",
                                             "q-inverse symmetry"});
        s.pass = s.pass && rep.ok();
        verdict(1, "q-identities for 0 <= a,b,r,n,k <= 8, orders {2,3,4,6,8,9,12}", s,
                secondsSince(t0));
    }

    SuiteOptions opts; // a1 = a2 = a = 1, seed 12345, 100 forms

    auto t81 = std::chrono::steady_clock::now();
    Report dim81 = suiteDim81(opts);
    double dim81Seconds = secondsSince(t81);

    auto t32 = std::chrono::steady_clock::now();
    Report f1 = suiteDim32(1, opts);
    Report f2 = suiteDim32(2, opts);
    Report f3 = suiteDim32(3, opts);
    double dim32Seconds = secondsSince(t32);

    auto tq = std::chrono::steady_clock::now();
    Report qlp = suiteQlpDemo(opts);
    double qlpSeconds = secondsSince(tq);

    // ----- criterion 2: dim-81 cocycle suite
    {
        Selection s = selectByNames(
            dim81,
            {"gamma1 in Z2_H(A,K)", "gamma2 in Z2_H(A,K)",
             "gamma1, gamma2 H-bilinear and H-balanced", "gamma2 in Z2_H(A^{gamma1},K)",
             "beta = gamma2 * gamma1 in Z2_H(A,K)", "gamma1 * gamma2 = gamma2 * gamma1",
             "gamma_a in Z2_H(A^{gamma1*gamma2},K)", "alpha = gamma_a * gamma1 * gamma2 in Z2_H(A,K)",
             "reference alpha values", "alpha(x2^m (x) x1^n) = d_{n,m} (m)!_q a^m",
             "alpha closed form (i)-(viii) matches the convolution product", "(alpha - eps)^3 = 0",
             "eta = ln(alpha) matches the reference eta table verbatim",
             "eta matches the reference table away from the two inconsistent entries",
             "exp(reference eta table) = alpha", "exp(corrected eta table) = alpha",
             "exp(log(alpha)) = alpha"});
        verdict(2, "dim-81: gamma1, gamma2, gamma_a, alpha certified; reference values; eta; exp/log",
                s, dim81Seconds);
    }

    // ----- criterion 3: A^alpha equals the PBW lifting
    {
        Selection s = merge({selectByPrefixes(dim81, {"A^alpha vs lifting: ", "lifting: "}),
                             selectByNames(dim81, {"x_i^n ._alpha x_i^m = a_i (1 - g_i^r) for n+m = r",
                                                   "x2 ._alpha x1 = q x1 ._alpha x2 + a (1 - g1 g2)"})});
        verdict(3, "dim-81: structure constants of A^alpha equal the independent PBW lifting", s);
    }

    // ----- criterion 4: dim-32 families
    {
        std::vector<std::string> names = {
            "dimension 32",
            "gamma(a1,a2,a) in Z2_H(A,K)",
            "gamma H-bilinear and H-balanced",
            "dropping gamma(x1x2 (x) x1x2) = -a1a2 breaks the triple (x1, x2, x1x2)",
            "certified gamma satisfies the same triple",
            "gamma^{-1} = gamma(-a1,-a2,-a)",
            "xi table matches: xi(x_i (x) x_i) = a_i(1-g_i^2), xi(x2 (x) x1) = a(1-g1g2), "
            "xi(x1x2 (x) x1x2) = -a1a2(1-g1^2)(1-g2^2)",
            "xi^{-1} = -xi on R_i (x) R_j for i+j < 4, xi^{-1} = xi on x1x2 (x) x1x2",
            "coaction of R (x) R is trivial exactly on the predicted pairs",
            "lambda-xi equivalence (proved direction)",
            "lambda-xi-inverse equivalence (proved direction)",
        };
        std::vector<std::string> prefixes = {"A^gamma vs lifting: ", "lifting: ",
                                             "extracted (R,xi): ", "xi^{-1}: ",
                                             "integral identity: ", "braided commutation: "};
        Selection s1 = merge({selectByNames(f1, names), selectByPrefixes(f1, prefixes),
                              selectByNames(f1, {"Lambda . xi = gamma_R"})});
        std::vector<std::string> names23 = names;
        Selection s2 = merge(
            {selectByNames(f2, names23), selectByPrefixes(f2, prefixes),
             selectByNames(f2, {"Lambda . xi = gamma_R except Lambda.xi(x1x2 (x) x1x2) = 2 "
                                "gamma_R(x1x2 (x) x1x2)"})});
        Selection s3 = merge(
            {selectByNames(f3, names23), selectByPrefixes(f3, prefixes),
             selectByNames(f3, {"Lambda . xi = gamma_R except Lambda.xi(x1x2 (x) x1x2) = 2 "
                                "gamma_R(x1x2 (x) x1x2)"})});
        verdict(4, "dim-32 F1-F3: cocycle, lifting, xi tables, integrals, braided commutation",
                merge({s1, s2, s3}), dim32Seconds);
    }

    // ----- criterion 5: associativity trichotomy
    {
        Selection s = merge(
            {selectByNames(dim81, {"B(V) trichotomy: all three verdicts hold"}),
             selectByPrefixes(dim81, {"trichotomy B(V): "}),
             selectByNames(f1, {"B(V) trichotomy: all three verdicts hold",
                                "extracted R is associative with xi acting trivially"}),
             selectByNames(f2, {"B(V) trichotomy: all three verdicts hold",
                                "extracted R is associative with xi acting trivially"}),
             selectByNames(f3, {"B(V) trichotomy: all three verdicts hold",
                                "extracted R is associative with xi acting trivially"}),
             selectByNames(qlp, {"associativity defect on (x2, x1, x1) is a (q^2 - 1) x1",
                                 "a != 0: all three verdicts fail",
                                 "a = 0 control: all three verdicts hold",
                                 "trichotomy: verdicts agree",
                                 "x2 .R x1 = q x1x2", "pi(x1^n x2^m) = 0 for n != m"})});
        verdict(5, "trichotomy agreement on connected gallery objects; qlp witness a(q^2-1)x1",
                merge({s}), qlpSeconds);
    }

    // ----- criterion 6: the omega correspondence and the headline equality
    {
        Selection s = merge(
            {selectByPrefixes(dim81, {"omega: "}), selectByPrefixes(f1, {"omega: "}),
             selectByPrefixes(f2, {"omega: "}), selectByPrefixes(f3, {"omega: "}),
             selectByNames(dim81, {"alpha_R: (R#H)^gamma = R^{gamma_R} #_{xi_{gamma_R}} H",
                                   "alpha_R in Z2_H(R,K)",
                                   "alpha_R: Omega(gamma^{-1}) is the convolution inverse of Omega(gamma)",
                                   "lifting extraction equals (R^{alpha_R}, xi_{alpha_R})"}),
             selectByNames(f1, {"gamma_R: (R#H)^gamma = R^{gamma_R} #_{xi_{gamma_R}} H", "gamma_R in Z2_H(R,K)"}),
             selectByNames(f2, {"gamma_R: (R#H)^gamma = R^{gamma_R} #_{xi_{gamma_R}} H"}),
             selectByNames(f3, {"gamma_R: (R#H)^gamma = R^{gamma_R} #_{xi_{gamma_R}} H"})});
        verdict(6, "Omega/Omega' inverse bijections on 100 seeded forms; (R#H)^gamma = R^{g_R}#H", s);
    }

    // ----- criterion 7: roundtrips
    {
        Selection s = merge(
            {selectByNames(dim81, {"extract(smash(B(V),H)) = (B(V), trivial xi)"}),
             selectByPrefixes(dim81, {"biproduct omega: ", "lifting omega: ", "biproduct tau: ",
                                      "lifting tau: ", "gamma1: ", "gamma2: ", "beta: ",
                                      "gamma_a: ", "alpha: "}),
             selectByNames(f1, {"extract(smash(B(V),H)) = (B(V), trivial xi)"}),
             selectByPrefixes(f1, {"biproduct omega: ", "lifting omega: ", "gamma: "}),
             selectByPrefixes(f2, {"gamma: "}), selectByPrefixes(f3, {"gamma: "})});
        verdict(7, "extract/smash roundtrips via omega; twist then untwist recovers the base", s);
    }

    // ----- criterion 8: the vanishing constraint
    {
        Selection s = merge(
            {selectByPrefixes(dim81, {"vanishing constraint: "}),
             selectByPrefixes(f1, {"vanishing constraint: "}),
             selectByPrefixes(f2, {"vanishing constraint: "}),
             selectByPrefixes(f3, {"vanishing constraint: "})});
        verdict(8, "certified forms vanish when q^{i+k} != q^{j+l}", s);
    }

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
    return g_failures == 0 ? 0 : 1;
}
