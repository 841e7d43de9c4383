#include "wqed/two_mode.hpp"

#include <cmath>
#include <numbers>

#include "wqed/single_photon.hpp"

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double PI = std::numbers::pi;

complexd bound_piece(double dE, double g, double delta, double u) {
    // exp(i dE |u| / 2 - gamma |u| / 2) / (4 delta^2 - z^2), z = dE + i gamma
    const complexd z = complexd(dE, g);
    const double au = std::abs(u);
    return std::exp(complexd(-0.5 * g * au, 0.5 * dE * au)) /
           (4.0 * delta * delta - z * z);
}

}  // namespace

complexd t2_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par) {
    const double g = par.gamma;
    const double dE = energy - 2.0 * par.omega;
    const MomentumPair pr = pair_from_energy(energy, delta);
    const complexd tbar = two_mode_coefficients(pr.k, par).transmission *
                          two_mode_coefficients(pr.p, par).transmission;
    return std::sqrt(2.0) / (2.0 * PI) * std::exp(I * energy * xc) *
           (tbar * std::cos(delta * x) -
            g * g * bound_piece(dE, g, delta, x));
}

complexd r2_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par) {
    const double g = par.gamma;
    const double dE = energy - 2.0 * par.omega;
    const MomentumPair pr = pair_from_energy(energy, delta);
    const complexd rbar = two_mode_coefficients(pr.k, par).reflection *
                          two_mode_coefficients(pr.p, par).reflection;
    return std::sqrt(2.0) / (2.0 * PI) * std::exp(-I * energy * xc) *
           (rbar * std::cos(delta * x) -
            g * g * bound_piece(dE, g, delta, x));
}

complexd rt_amplitude(double energy, double delta, double xc, double x,
                      const ImpurityParams& par) {
    const double g = par.gamma;
    const double dE = energy - 2.0 * par.omega;
    const MomentumPair pr = pair_from_energy(energy, delta);
    const TwoModeCoefficients ck = two_mode_coefficients(pr.k, par);
    const TwoModeCoefficients cp = two_mode_coefficients(pr.p, par);
    // localization now sits in the center-of-mass coordinate
    return 1.0 / (2.0 * PI) * std::exp(I * 0.5 * energy * x) *
           (ck.transmission * cp.reflection * std::exp(2.0 * I * delta * xc) +
            ck.reflection * cp.transmission * std::exp(-2.0 * I * delta * xc) -
            2.0 * g * g * bound_piece(dE, g, delta, 2.0 * xc));
}

SMatrixElement momentum_distribution(Sector sector, const MomentumPair& in,
                                     const MomentumPair& out,
                                     const ImpurityParams& par) {
    const TwoModeCoefficients ck = two_mode_coefficients(in.k, par);
    const TwoModeCoefficients cp = two_mode_coefficients(in.p, par);
    SMatrixElement el;
    el.correlated = 0.25 * fluorescence_background(in.energy(), in.delta(),
                                                   out.delta(), par);
    switch (sector) {
        case Sector::RR:
            el.direct = ck.transmission * cp.transmission;
            el.exchange = el.direct;
            break;
        case Sector::LL:
            el.direct = ck.reflection * cp.reflection;
            el.exchange = el.direct;
            break;
        case Sector::RL:
            el.direct = ck.transmission * cp.reflection;
            el.exchange = ck.reflection * cp.transmission;
            break;
    }
    return el;
}

}  // namespace wqed
