#include "wqed/smatrix.hpp"

#include <cmath>
#include <numbers>

#include "wqed/single_photon.hpp"

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double PI = std::numbers::pi;
}

complexd fluorescence_background(double energy, double d_in, double d_out,
                                 const ImpurityParams& par) {
    const double g = par.gamma;
    const complexd z = complexd(energy - 2.0 * par.omega, g);
    const complexd z2 = z * z;
    return (16.0 * I * g * g / PI) * z /
           ((4.0 * d_in * d_in - z2) * (4.0 * d_out * d_out - z2));
}

SMatrixElement even_channel_element(const MomentumPair& in,
                                    const MomentumPair& out,
                                    const ImpurityParams& par) {
    const complexd tt = one_mode_transmission(in.k, par) *
                        one_mode_transmission(in.p, par);
    SMatrixElement el;
    el.direct = tt;
    el.exchange = tt;
    el.correlated =
        fluorescence_background(in.energy(), in.delta(), out.delta(), par);
    return el;
}

complexd out_state_relative_envelope(double energy, double delta, double x,
                                     const ImpurityParams& par) {
    const double g = par.gamma;
    const double dE = energy - 2.0 * par.omega;
    const complexd z = complexd(dE, g);
    const MomentumPair pr = pair_from_energy(energy, delta);
    const complexd tt = one_mode_transmission(pr.k, par) *
                        one_mode_transmission(pr.p, par);
    const double ax = std::abs(x);
    const complexd bound =
        4.0 * g * g / (4.0 * delta * delta - z * z) *
        std::exp(complexd(-0.5 * g * ax, 0.5 * dE * ax));
    return std::sqrt(2.0) / (2.0 * PI) *
           (tt * std::cos(delta * x) - bound);
}

}  // namespace wqed
