#pragma once

#include "hopf/presentation.hpp"

namespace hopf {

// A coalgebra to convolve over: either a Presentation or a braided tensor
// coalgebra exposes one of these. Functionals C -> K are sparse Vec's of
// coefficients; maps C -> A are LinMap's.
struct CoalgebraView {
    int dim = 0;
    const std::vector<Vec>* comult = nullptr;
    const std::vector<Cyc>* counit = nullptr;
    const Vec* unit = nullptr; // coaugmentation, when present
    const std::vector<std::string>* labels = nullptr;

    CoalgebraView() = default;
    explicit CoalgebraView(const Presentation& p)
        : dim(p.dim()), comult(&p.comult), counit(&p.counit), unit(&p.unit), labels(&p.basis) {}

    std::string label(int i) const {
        return labels ? (*labels)[i] : "#" + std::to_string(i);
    }
};

// (f * g)(x) = f(x_(1)) g(x_(2)) for functionals on C.
Vec convFunctional(const CoalgebraView& c, const Vec& f, const Vec& g);
Vec counitFunctional(const CoalgebraView& c);

// Convolution of maps C -> A through Delta_C and m_A.
LinMap convMap(const CoalgebraView& c, const Presentation& a, const LinMap& f, const LinMap& g);
LinMap unitMap(const CoalgebraView& c, const Presentation& a); // u_A eps_C

// True when the span of grouplike-style detection says the coalgebra is
// connected-coaugmented: exactly one grouplike basis element, equal to the
// coaugmentation. (Our gallery coalgebras are pointed with monomial bases,
// so the coradical is the span of grouplike basis elements.)
bool isConnectedCoaugmented(const CoalgebraView& c);

struct InverseOptions {
    long geometricCap = -1; // -1: dim^2 convolution powers
    int solveCap = 4096;    // max unknown count for the linear-system route
};

// Convolution inverse of a functional: geometric series
// sum (u eps - f)^n when the domain is connected-coaugmented and f(1) = 1,
// exact linear solve in the dual algebra otherwise. Empty optional when f
// is not invertible or no route applies.
std::optional<Vec> convInverseFunctional(const CoalgebraView& c, const Vec& f,
                                         const InverseOptions& opts = {});

// Same strategy for maps C -> A.
std::optional<LinMap> convInverseMap(const CoalgebraView& c, const Presentation& a,
                                     const LinMap& f, const InverseOptions& opts = {});

// BilForm convolution on A (x) A with the ordinary flip tensor coalgebra.
BilForm convBilForm(const Presentation& a, const BilForm& f, const BilForm& g);
BilForm counitBilForm(const Presentation& a); // eps (x) eps

// S^gamma(x) = gamma(x_(1) (x) S(x_(2))) S(x_(3)) gamma^{-1}(S(x_(4)) (x) x_(5)).
LinMap antipodeOfTwist(const Presentation& a, const BilForm& gamma, const BilForm& gammaInv);

} // namespace hopf
