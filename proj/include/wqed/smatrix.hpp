#pragma once

#include "wqed/amplitudes.hpp"
#include "wqed/momentum.hpp"
#include "wqed/params.hpp"

namespace wqed {

// Momentum-space matrix element between delta-normalized states, kept as
// coefficients. direct/exchange multiply the momentum-conserving delta
// pairs; correlated is the smooth background density multiplying
// delta(E_in - E_out) alone. Never evaluated as a number.
struct SMatrixElement {
    complexd direct{};
    complexd exchange{};
    complexd correlated{};
};

// Background fluorescence kernel: the energy-redistributing part of
// two-photon scattering,
//   B = (16 i gamma^2 / pi) (E - 2 omega + i gamma)
//       / ((4 d_in^2 - z^2)(4 d_out^2 - z^2)),  z = E - 2 omega + i gamma.
// Symmetric under d_in <-> d_out and even in each argument.
complexd fluorescence_background(double energy, double d_in, double d_out,
                                 const ImpurityParams& par);

// Even-channel two-photon S-matrix element.
SMatrixElement even_channel_element(const MomentumPair& in,
                                    const MomentumPair& out,
                                    const ImpurityParams& par);

// Relative-coordinate envelope of the even-channel out state (the plane
// center-of-mass factor e^{i E xc} removed): a transmitted free wave plus
// the bound-channel term resummed in closed form,
//   (sqrt2/2pi) [ t_k t_p cos(d x)
//                 - 4 gamma^2/(4 d^2 - z^2) e^{i(E - 2 omega)|x|/2 - gamma|x|/2} ].
complexd out_state_relative_envelope(double energy, double delta, double x,
                                     const ImpurityParams& par);

}  // namespace wqed
