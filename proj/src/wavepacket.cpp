#include "wqed/wavepacket.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double PI = std::numbers::pi;
const double SQRT2_OVER_2PI = std::sqrt(2.0) / (2.0 * PI);

double weight_norm(double sigma) {
    return std::pow(2.0 * PI * sigma * sigma, -0.25);
}
}  // namespace

WavepacketSpec default_wavepacket(const ImpurityParams& par, double e0,
                                  double d0) {
    return {0.05 * par.gamma, e0, d0, 40.0 / par.gamma};
}

SmearedState::SmearedState(BasisKind kind, const WavepacketSpec& wp,
                           const ImpurityParams& par,
                           const QuadratureSpec& quad)
    : wp_(wp), kind_(kind) {
    if (!(wp.sigma > 0.0) || !(wp.box_halfwidth > 0.0))
        throw std::invalid_argument("SmearedState: sigma and box must be positive");
    const double sigma = wp.sigma;
    const double norm = weight_norm(sigma);
    // Gaussian transform in closed form: the weight integrated against
    // e^{i m u} gives norm * 2 sigma sqrt(pi) * e^{i m0 u - sigma^2 u^2}.
    const double amp = norm * 2.0 * sigma * std::sqrt(PI);

    const double e0 = wp.center_energy;
    center_ = [amp, sigma, e0](double xc) {
        return amp * std::exp(complexd(-sigma * sigma * xc * xc, e0 * xc));
    };

    const double d0 = wp.center_delta;
    const double g = par.gamma;
    switch (kind) {
        case BasisKind::SymFree:
            relative_ = [amp, sigma, d0](double x) {
                return SQRT2_OVER_2PI * amp *
                       std::exp(-sigma * sigma * x * x) * std::cos(d0 * x);
            };
            break;
        case BasisKind::AntisymFree:
            relative_ = [amp, sigma, d0](double x) {
                return SQRT2_OVER_2PI * amp * I * signum(x) *
                       std::exp(-sigma * sigma * x * x) * std::sin(d0 * x);
            };
            break;
        case BasisKind::Continuum:
            // the 1/sqrt(4 delta^2 + gamma^2) weight spoils the closed form
            relative_ = [sigma, d0, g, norm, quad](double x) {
                auto f = [&](double d) -> complexd {
                    const double u = d - d0;
                    const double w =
                        norm * std::exp(-u * u / (4.0 * sigma * sigma));
                    return w *
                           (2.0 * d * std::cos(d * x) -
                            g * signum(x) * std::sin(d * x)) /
                           std::sqrt(4.0 * d * d + g * g);
                };
                const double win = 12.0 * sigma;
                return SQRT2_OVER_2PI *
                       integrate(f, d0 - win, d0 + win, quad);
            };
            break;
        case BasisKind::Bound:
            relative_ = [g](double x) {
                return std::sqrt(g / (4.0 * PI)) *
                       std::exp(-0.5 * g * std::abs(x));
            };
            break;
    }
}

complexd smeared_overlap(const SmearedState& a, const SmearedState& b,
                         const QuadratureSpec& quad) {
    const double L = std::min(a.spec().box_halfwidth, b.spec().box_halfwidth);
    const double sig = std::min(a.spec().sigma, b.spec().sigma);
    if (sig * L < 2.0)
        std::cerr << "smeared_overlap: box holds fewer than four envelope "
                     "widths; truncation error may dominate\n";
    auto fc = [&](double xc) {
        return std::conj(a.center_profile(xc)) * b.center_profile(xc);
    };
    auto fx = [&](double x) {
        return std::conj(a.relative_profile(x)) * b.relative_profile(x);
    };
    return integrate(fc, -L, L, quad) * integrate(fx, -L, L, quad);
}

double wavepacket_label_overlap(double c1, double c2, double sigma) {
    const double d = c1 - c2;
    return std::exp(-d * d / (8.0 * sigma * sigma));
}

}  // namespace wqed
