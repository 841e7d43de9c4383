#pragma once

#include "wqed/amplitudes.hpp"
#include "wqed/basis.hpp"
#include "wqed/momentum.hpp"
#include "wqed/params.hpp"

namespace wqed {

// Exact interacting two-photon eigenstate of the even channel, constructed
// by the Bethe ansatz. The photon-photon amplitude g is piecewise over the
// six wedges cut by the coordinate axes and the exchange diagonal; the
// photon-emitter amplitude e lives on the two boundary axes. Plane waves
// carry the 1/(2 pi sqrt 2) normalization, so the incoming read-off equals
// the continuum basis state with the same labels exactly.
struct BetheState {
    MomentumPair labels;
    // Wedge coefficients: quadrant III (both photons left of the emitter),
    // II (straddling), I (both right). B multiplies e^{i(k x1 + p x2)} for
    // x1 <= x2, A the exchanged exponential.
    complexd A3{}, B3{};
    complexd A2{}, B2{};
    complexd A1{}, B1{};
    TwoPhotonAmplitude g;
    ExcitationAmplitude e;
    TwoPhotonAmplitude in_readoff;   // quadrant-III form extended everywhere
    TwoPhotonAmplitude out_readoff;  // quadrant-I form, equals t_k t_p * in
};

BetheState build_bethe_state(MomentumPair pr, const ImpurityParams& par);

// Interacting eigenstate attached to the two-photon bound channel: the
// relative coordinate is exponentially confined in every quadrant and only
// a center-of-mass plane wave survives. Quadrant III carries unit envelope
// exp(i E xc - gamma |x| / 2).
struct BoundState {
    double energy = 0.0;
    complexd transmission{};  // eigenvalue t_E of the scattering operator
    TwoPhotonAmplitude g;
    ExcitationAmplitude e;
    TwoPhotonAmplitude in_readoff;
    TwoPhotonAmplitude out_readoff;
};

BoundState build_bound_state(double energy, const ImpurityParams& par);

// Eigenvalue of the scattering operator on an interacting channel:
// t_k * t_p for a continuum state, t_E for the bound channel. Free states
// are not eigenchannels and are rejected.
complexd channel_eigenvalue(const BasisState& channel,
                            const ImpurityParams& par);

}  // namespace wqed
