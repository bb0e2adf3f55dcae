#pragma once

#include "hopf/group.hpp"
#include "hopf/matrix.hpp"
#include "hopf/report.hpp"
#include "hopf/sparse.hpp"

#include <memory>
#include <optional>

namespace hopf {

enum class Level { Coalgebra, Algebra, Bialgebra, Hopf };

Level parseLevel(const std::string& s);
std::string levelName(Level l);

// Finite-dimensional (co/bi/Hopf) algebra given by labeled basis and sparse
// structure constants over Q(zeta_{field_order}). Tensor legs are encoded
// as flat indices j*dim+k.
struct Presentation {
    std::string name;
    long fieldOrder = 1;
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> mult; // [i][j] -> product vector
    Vec unit;
    std::vector<Vec> comult;            // [i] -> vector over dim*dim
    std::vector<Cyc> counit;
    std::optional<std::vector<Vec>> antipode;

    struct Flags {
        bool coalgebra = false, algebra = false, bialgebra = false, hopf = false;
    } verified;

    int dim() const { return static_cast<int>(basis.size()); }

    void initEmpty(int d) {
        mult.assign(d, std::vector<Vec>(d));
        comult.assign(d, Vec{});
        counit.assign(d, Cyc(0));
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec r;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b) axpy(r, x * y, mult[i][j]);
        return r;
    }

    Vec mulBasisVec(int i, const Vec& b) const {
        Vec r;
        for (const auto& [j, y] : b) axpy(r, y, mult[i][j]);
        return r;
    }

    Vec mulVecBasis(const Vec& a, int j) const {
        Vec r;
        for (const auto& [i, x] : a) axpy(r, x, mult[i][j]);
        return r;
    }

    Vec delta(const Vec& a) const {
        Vec r;
        for (const auto& [i, x] : a) axpy(r, x, comult[i]);
        return r;
    }

    Cyc eps(const Vec& a) const {
        Cyc r(0);
        for (const auto& [i, x] : a) r += x * counit[i];
        return r;
    }

    Vec applyS(const Vec& a) const {
        if (!antipode) throw std::logic_error("presentation has no antipode");
        Vec r;
        for (const auto& [i, x] : a) axpy(r, x, (*antipode)[i]);
        return r;
    }

    // Product in the tensor-square algebra, (a (x) b)(c (x) d) = ac (x) bd.
    Vec mulTensorSquare(const Vec& u, const Vec& v) const;

    // Iterated comultiplication of e_i with `legs` tensor legs, left-nested.
    std::map<std::vector<int>, Cyc> deltaTuples(int i, int legs) const;

    std::string labelOfPair(int p) const {
        return basis[p / dim()] + " (x) " + basis[p % dim()];
    }
};

using PresPtr = std::shared_ptr<Presentation>;

// Exhaustive axiom validation over all basis tuples; on success the
// corresponding flags (and those of weaker levels) are set.
Report validateStructure(Presentation& p, Level level);

// Indices of basis elements g with Delta(g) = g (x) g and eps(g) = 1.
std::vector<int> grouplikeBasisElements(const Presentation& p);

// Group Hopf algebra K[G]: Delta(g) = g (x) g, S(g) = g^{-1}.
Presentation groupAlgebra(const GroupData& g, const std::string& name = "");

// Two-sided integral with lambda(1) = 1, found by exact linear solve; also
// reports ad-invariance. Fails when the integral space is not 1-dimensional
// or lambda(1) = 0.
struct IntegralResult {
    Vec lambda; // functional coefficients
    bool twoSided = false;
    bool adInvariant = false;
};
IntegralResult totalIntegral(const Presentation& h);

// Adjoint action h . m = h_(1) m S(h_(2)) as a dense table of sparse vectors.
std::vector<std::vector<Vec>> adjointActionTable(const Presentation& h);

// Antipode for pointed graded presentations, solved degree by degree from
// m(S (x) id)Delta = u eps. `degree` orders the basis by coradical degree.
std::optional<std::vector<Vec>> solvePointedAntipode(const Presentation& p,
                                                     const std::vector<int>& degree);

bool samePresentation(const Presentation& a, const Presentation& b);

} // namespace hopf
