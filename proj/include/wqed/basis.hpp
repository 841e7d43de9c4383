#pragma once

#include "wqed/amplitudes.hpp"
#include "wqed/momentum.hpp"
#include "wqed/params.hpp"

namespace wqed {

// Two-photon relative-motion basis in the interacting channel:
//  - SymFree / AntisymFree: free symmetric (cos) and antisymmetric
//    (sgn * sin) combinations of plane waves, labels (k, p);
//  - Continuum: interacting scattering channel, a fixed mixture of the two
//    free states weighted by 2*delta and i*gamma;
//  - Bound: two-photon bound channel, labelled by total energy only, with
//    exponential relative-coordinate localization exp(-gamma |x| / 2).
enum class BasisKind { SymFree, AntisymFree, Continuum, Bound };

struct BasisState {
    BasisKind kind;
    MomentumPair labels;          // valid except for Bound
    double bound_energy = 0.0;    // valid for Bound
    bool degenerate = false;      // Continuum with k == p is the zero state
    TwoPhotonAmplitude amplitude;
};

BasisState sym_free_state(MomentumPair pr);
BasisState antisym_free_state(MomentumPair pr);
BasisState continuum_state(MomentumPair pr, const ImpurityParams& par);
BasisState bound_channel_state(double energy, const ImpurityParams& par);

// Distributional overlap <bra|ket>, reported as coefficients instead of
// evaluated delta functions. Every term multiplies delta(E_bra - E_ket):
//   direct   -> delta(delta_bra - delta_ket)
//   exchange -> delta(delta_bra + delta_ket)
//   pv_part  -> principal-value kernel evaluated at the given labels
//   smooth   -> plain density (bound-continuum pairs, or the lone
//               delta(E) coefficient of bound-bound)
// pv_singular flags label collisions where the kernel value is undefined.
// Pairs without a closed-form decomposition are rejected.
struct OverlapDecomposition {
    complexd direct{};
    complexd exchange{};
    complexd pv_part{};
    complexd smooth{};
    bool pv_singular = false;
};

OverlapDecomposition overlap(const BasisState& bra, const BasisState& ket,
                             const ImpurityParams& par);

// Weight of the bound channel inside the resolution of identity between two
// free symmetric states: the scattering channels alone miss exactly
//   8 gamma^3 / pi / ((4 d1^2 + gamma^2)(4 d2^2 + gamma^2))
// per unit delta(E1 - E2).
double completeness_residual(const MomentumPair& a, const MomentumPair& b,
                             const ImpurityParams& par);

}  // namespace wqed
