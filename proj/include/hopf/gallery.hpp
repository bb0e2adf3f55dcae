#pragma once

#include "hopf/qbinomial.hpp"
#include "hopf/twist.hpp"

#include <random>

namespace hopf {

// Quantum linear space datum (rank 2 throughout the suites): generators
// x_i in V^{chi_i}_{g_i}, chi_i(g_i) a primitive r_i-th root of unity, plus
// the deformation scalars. `a` is the coefficient in the straightening
// x2 x1 = chi1(g2) x1 x2 + a (1 - g1 g2).
struct QLSDatum {
    GroupData group;
    struct Gen {
        int g = 0;      // group element index
        Character chi;
        long r = 2;
    };
    std::vector<Gen> gens;
    Cyc a1, a2, a;

    Cyc q() const { return gens[0].chi.eval(group, gens[0].g); }
};

Report validateQLSDatum(const QLSDatum& d);

QLSDatum dim81Datum(const Cyc& a1, const Cyc& a2, const Cyc& a);
QLSDatum dim32Datum(int family, const Cyc& a1, const Cyc& a2, const Cyc& a);

// B(V) # K[Gamma] for a quantum plane, with everything the twist machinery
// needs: the Nichols pre-bialgebra (trivial cocycle), the smash datum, the
// omega context and the H-subalgebra context.
struct QuantumPlaneContext {
    QLSDatum datum;
    long r = 2;
    PresPtr Hgrp;
    PreBialgebra nichols;
    SmashResult smash;
    SmashInfo info;
    HSubContext hsub;
    Report buildChecks;

    QuantumPlaneContext() = default;
    QuantumPlaneContext(const QuantumPlaneContext&) = delete;
    QuantumPlaneContext& operator=(const QuantumPlaneContext&) = delete;

    int mono(long i, long j) const { return static_cast<int>(i * r + j); }
    int biproductIndex(long i, long j, int g) const {
        return mono(i, j) * Hgrp->dim() + g;
    }
    const Presentation& A() const { return *smash.datum.A; }
};

std::unique_ptr<QuantumPlaneContext> buildQuantumPlane(const QLSDatum& d);

// Lifting A(a1, a2, a) on the PBW basis {g x1^i x2^j}, built by exhaustive
// rewriting of words to normal order, together with the splitting datum
// given by pi(g x1^i x2^j) = delta_{0,i+j} g.
struct LiftingResult {
    PresPtr A;
    SplittingDatum datum;
    long r = 2;
    int dimG = 0;

    int indexOf(int g, long i, long j) const {
        return static_cast<int>(g * r * r + i * r + j);
    }
};

LiftingResult buildLifting(const QLSDatum& d);

// The explicit cocycles of the quantum-plane families, as functionals on
// R (x) R (extend to A (x) A through omegaExtend).
Vec upsilonEpsilon(const QuantumPlaneContext& ctx);       // eps (x) eps
Vec upsilonGammaI(const QuantumPlaneContext& ctx, int i); // gamma_1 or gamma_2
Vec upsilonGammaA(const QuantumPlaneContext& ctx);        // gamma_a
Vec upsilonAlphaClosedForm(const QuantumPlaneContext& ctx);
Vec upsilonDim32Gamma(const QuantumPlaneContext& ctx, const Cyc& a1, const Cyc& a2, const Cyc& a);

// phi maps lifting generators to the corresponding twisted-biproduct
// elements and transports all structure constants; exact.
Report checkLiftingIsomorphism(const LiftingResult& lift, const Presentation& twisted,
                               const QuantumPlaneContext& ctx);

// Seeded sparse left H-linear functionals on R (x) R (support <= 8).
std::vector<Vec> seededHLinearForms(const QuantumPlaneContext& ctx, int count, uint64_t seed);

// Omega / Omega' are inverse convolution-preserving bijections on the
// seeded forms; the H-bilinear side is built by an independent extension.
Report omegaRoundtripChecks(const QuantumPlaneContext& ctx, int count, uint64_t seed);

// Certified forms vanish on x1^i x2^j (x) x1^k x2^l with q^{i+k} != q^{j+l}.
Report vanishingConstraintCheck(const QuantumPlaneContext& ctx,
                                const std::vector<std::pair<std::string, const BilForm*>>& forms);

struct SuiteOptions {
    Cyc a1 = Cyc(1), a2 = Cyc(1), a = Cyc(1);
    uint64_t seed = 12345;
    int roundtripForms = 100;
    std::string dumpDir; // empty: no dump
};

Report suiteQIdentities();
Report suiteDim81(const SuiteOptions& opts);
Report suiteDim32(int family, const SuiteOptions& opts);
Report suiteQlpDemo(const SuiteOptions& opts);

} // namespace hopf
