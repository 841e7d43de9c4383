#pragma once

#include <cmath>
#include <stdexcept>

namespace wqed {

// Two-level emitter side-coupled to a single 1D photonic band.
// Units: hbar = 1 and unit group velocity, so momentum and energy coincide.
// The decay rate into the guided mode is gamma = coupling^2.
struct ImpurityParams {
    double omega = 0.0;     // transition energy
    double gamma = 1.0;     // guided-mode decay rate
    double coupling = 1.0;  // sqrt(gamma)
};

inline ImpurityParams make_params(double omega, double gamma) {
    if (!std::isfinite(omega) || !std::isfinite(gamma))
        throw std::invalid_argument("impurity parameters must be finite");
    if (gamma <= 0.0)
        throw std::invalid_argument("gamma must be positive");
    return ImpurityParams{omega, gamma, std::sqrt(gamma)};
}

}  // namespace wqed
