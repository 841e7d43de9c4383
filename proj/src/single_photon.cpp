#include "wqed/single_photon.hpp"

#include <numbers>

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double INV_SQRT_2PI = 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

complexd one_mode_transmission(double k, const ImpurityParams& par) {
    const double d = k - par.omega;
    return (d - 0.5 * I * par.gamma) / (d + 0.5 * I * par.gamma);
}

complexd excitation_amplitude(double k, const ImpurityParams& par) {
    const double d = k - par.omega;
    return INV_SQRT_2PI * par.coupling / (d + 0.5 * I * par.gamma);
}

TwoModeCoefficients two_mode_coefficients(double k, const ImpurityParams& par) {
    const complexd t = one_mode_transmission(k, par);
    return {0.5 * (t + 1.0), 0.5 * (t - 1.0)};
}

complexd eigenstate_wavefunction(double k, double x, const ImpurityParams& par) {
    const complexd wave = INV_SQRT_2PI * std::exp(I * k * x);
    if (x < 0.0) return wave;
    const complexd t = one_mode_transmission(k, par);
    if (x > 0.0) return t * wave;
    return 0.5 * (1.0 + t) * wave;  // jump-point average
}

BarrierCoefficients delta_barrier(double k, double v0) {
    if (k == 0.0 && v0 == 0.0)
        throw std::invalid_argument("delta_barrier: k and v0 both zero");
    const complexd den = 2.0 * k + I * v0;
    return {-I * v0 / den, 2.0 * k / den};
}

}  // namespace wqed
