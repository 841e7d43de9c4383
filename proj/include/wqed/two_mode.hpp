#pragma once

#include "wqed/momentum.hpp"
#include "wqed/params.hpp"
#include "wqed/smatrix.hpp"

namespace wqed {

// Outgoing two-photon sectors for a right-moving incident pair: both
// transmitted (RR), both reflected (LL), one of each (RL). Left movers are
// labelled by negative momenta.
enum class Sector { RR, LL, RL };

// Position-space out-state amplitudes for an incident right-moving pair
// with total energy E and relative momentum delta. xc and x are the
// center-of-mass and relative coordinates of the outgoing pair; in the
// mixed sector the roles of oscillation and localization swap between
// xc and x.
complexd t2_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par);
complexd r2_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par);
complexd rt_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par);

// Momentum-space distribution in a given sector: coefficients of the
// momentum-conserving delta pairs plus the shared correlated background
// (one quarter of the even-channel kernel in every sector).
SMatrixElement momentum_distribution(Sector sector, const MomentumPair& in,
                                     const MomentumPair& out,
                                     const ImpurityParams& par);

}  // namespace wqed
