#pragma once

#include "hopf/convolution.hpp"

namespace hopf {

// Left action H (x) V -> V and left coaction V -> H (x) V on a basis-indexed
// space. Coaction terms are encoded as h*dimV + v.
struct YDStructure {
    PresPtr H;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> action; // [h][v] -> Vec over the space
    std::vector<Vec> coaction;            // [v] -> Vec over dimH*dimV

    int dim() const { return static_cast<int>(labels.size()); }
    int dimH() const { return H->dim(); }

    Vec actBasisH(int h, const Vec& v) const {
        Vec r;
        for (const auto& [i, c] : v) axpy(r, c, action[h][i]);
        return r;
    }
    Vec act(const Vec& hvec, const Vec& v) const {
        Vec r;
        for (const auto& [h, c] : hvec) axpy(r, c, actBasisH(h, v));
        return r;
    }
};

// Module, comodule, and Yetter-Drinfeld compatibility axioms, exhaustively.
Report validateYD(const YDStructure& v);

// c_{V,W}(v (x) w) = v_(-1) w (x) v_(0), as a map V(x)W -> W(x)V.
LinMap braiding(const YDStructure& v, const YDStructure& w);

// Coalgebra in the Yetter-Drinfeld category, coaugmented by `unit`.
struct BraidedCoalgebra {
    YDStructure yd;
    std::vector<Vec> comult; // over dim^2
    std::vector<Cyc> counit;
    Vec unit;

    int dim() const { return yd.dim(); }

    CoalgebraView view() const {
        CoalgebraView c;
        c.dim = dim();
        c.comult = &comult;
        c.counit = &counit;
        c.unit = &unit;
        c.labels = &yd.labels;
        return c;
    }

    Vec delta(const Vec& a) const {
        Vec r;
        for (const auto& [i, c] : a) axpy(r, c, comult[i]);
        return r;
    }
    Cyc eps(const Vec& a) const {
        Cyc r(0);
        for (const auto& [i, c] : a) r += c * counit[i];
        return r;
    }
};

// Delta and eps are checked to be morphisms in the category (H-linear and
// H-colinear), plus coassociativity, counit laws and the coaugmentation
// conditions h.1 = eps(h)1 and rho(1) = 1 (x) 1.
Report validateBraidedCoalgebra(const BraidedCoalgebra& c);

// C (x) D with the codiagonal Yetter-Drinfeld structure and
// Delta(x (x) y) = (x^(1) (x) x^(2)_(-1) y^(1)) (x) (x^(2)_(0) (x) y^(2)).
BraidedCoalgebra braidedTensorCoalgebra(const BraidedCoalgebra& c, const BraidedCoalgebra& d);

// Iterated comultiplication tuples for a braided coalgebra, left-nested.
std::map<std::vector<int>, Cyc> deltaTuples(const CoalgebraView& c, int i, int legs);

// Psi(alpha) = (H (x) alpha) rho : an algebra isomorphism from functionals
// onto the H-colinear maps into H. Psi^{-1}(sigma) = eps_H sigma.
LinMap psiMap(const YDStructure& v, const Vec& alpha);
Vec psiInverse(const Presentation& h, const LinMap& sigma);

struct ModuleView {
    int dim = 0;
    const std::vector<std::vector<Vec>>* action = nullptr; // [h][m]
};

// Phi(alpha)(x (x) m) = x_(1) (x) alpha(x_(2)) m, an endomorphism of C (x) M.
LinMap phiMap(const CoalgebraView& c, const ModuleView& m, const LinMap& alpha);

} // namespace hopf
