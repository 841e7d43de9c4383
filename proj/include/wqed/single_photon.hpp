#pragma once

#include "wqed/amplitudes.hpp"
#include "wqed/params.hpp"

namespace wqed {

// One-photon transmission amplitude of the even (interacting) channel,
//   t_k = (k - omega - i gamma/2) / (k - omega + i gamma/2).
// Unit modulus for all real k; t = -1 on resonance.
complexd one_mode_transmission(double k, const ImpurityParams& par);

// Emitter excitation amplitude carried by the one-photon eigenstate,
// plane-wave normalization 1/sqrt(2 pi). Lorentzian peak at k = omega.
complexd excitation_amplitude(double k, const ImpurityParams& par);

// Physical-basis coefficients for a right-moving probe photon.
// transmission = (t_k + 1)/2, reflection = (t_k - 1)/2; the moduli squared
// add to one (flux conservation).
struct TwoModeCoefficients {
    complexd transmission;
    complexd reflection;
};

TwoModeCoefficients two_mode_coefficients(double k, const ImpurityParams& par);

// Even-channel scattering eigenstate in position space: incoming plane wave
// for x < 0, transmitted t_k wave for x > 0, two-sided average at x = 0.
complexd eigenstate_wavefunction(double k, double x, const ImpurityParams& par);

// Reference check: reflection/transmission off a static delta barrier of
// strength v0, r = -i v0 / (2k + i v0), t = 2k / (2k + i v0).
// Satisfies 1 + r = t (wavefunction continuity at the scatterer), as do the
// emitter coefficients above. The contrast is the momentum dependence:
// |r| falls off like v0 / 2k with no structure, while the emitter reflects
// perfectly at k = omega and transparently far away.
struct BarrierCoefficients {
    complexd reflection;
    complexd transmission;
};

BarrierCoefficients delta_barrier(double k, double v0);

}  // namespace wqed
