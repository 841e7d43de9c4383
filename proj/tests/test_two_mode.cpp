#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wqed/single_photon.hpp"
#include "wqed/two_mode.hpp"
#include "wqed/verification.hpp"

using namespace wqed;

namespace {
const double PI = std::numbers::pi;
const double S2_2PI = std::sqrt(2.0) / (2.0 * PI);

double unit(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }
}  // namespace

TEST_CASE("reflected pair is dark at contact for every energy and detuning") {
    const ImpurityParams par = make_params(0.3, 1.6);
    std::mt19937_64 eng(41);
    for (int i = 0; i < 300; ++i) {
        const double E = 2.0 * par.omega + 6.0 * par.gamma * (unit(eng) - 0.5);
        const double d = 4.0 * par.gamma * (unit(eng) - 0.5);
        const double xc = 8.0 * (unit(eng) - 0.5);
        CHECK(std::abs(r2_amplitude(E, d, xc, 0.0, par)) < 1e-14);
    }
}

TEST_CASE("degenerate transmitted pair keeps full contact amplitude") {
    const ImpurityParams par = make_params(-0.2, 0.8);
    std::mt19937_64 eng(42);
    for (int i = 0; i < 300; ++i) {
        const double E = 2.0 * par.omega + 6.0 * par.gamma * (unit(eng) - 0.5);
        const double xc = 8.0 * (unit(eng) - 0.5);
        CHECK(std::abs(std::abs(t2_amplitude(E, 0.0, xc, 0.0, par)) - S2_2PI) <
              1e-13);
    }
}

TEST_CASE("doubly resonant closed forms across the position grid") {
    const ImpurityParams par = make_params(0.5, 1.0);
    const double E = 2.0 * par.omega;
    constexpr complexd I{0.0, 1.0};
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const double xc = -5.0 + 0.5 * i;
            const double x = -5.0 + 0.5 * j;
            const complexd t2 = t2_amplitude(E, 0.0, xc, x, par);
            const complexd r2 = r2_amplitude(E, 0.0, xc, x, par);
            const complexd rt = rt_amplitude(E, 0.0, xc, x, par);

            const complexd t2_want =
                -S2_2PI * std::exp(I * E * xc) * std::exp(-0.5 * std::abs(x));
            const complexd r2_want = S2_2PI * std::exp(-I * E * xc) *
                                     (1.0 - std::exp(-0.5 * std::abs(x)));
            const complexd rt_want = -(1.0 / PI) *
                                     std::exp(I * par.omega * x) *
                                     std::exp(-std::abs(xc));
            CHECK(std::abs(t2 - t2_want) < 1e-14);
            CHECK(std::abs(r2 - r2_want) < 1e-14);
            CHECK(std::abs(rt - rt_want) < 1e-14);
        }
}

TEST_CASE("contact interference crossover at half the linewidth") {
    // at zero pair detuning the contact amplitude is (4 d^2 - g^2)/(4 d^2 + g^2)
    const ImpurityParams par = make_params(0.0, 1.0);
    for (int j = 0; j <= 10; ++j) {
        const double d = 0.1 * j;
        const double a =
            std::abs(t2_amplitude(0.0, d, 0.45, 0.0, par)) / S2_2PI;
        const double want = std::abs(4.0 * d * d - 1.0) / (4.0 * d * d + 1.0);
        CHECK(std::abs(a - want) < 1e-13);
    }
    // perfect destructive interference between free and bound pieces
    CHECK(std::abs(t2_amplitude(0.0, 0.5, -1.2, 0.0, par)) < 1e-15);
}

TEST_CASE("mixed sector swaps oscillation and localization roles") {
    const ImpurityParams par = make_params(0.0, 1.0);
    const double E = -0.7;  // detuned pair
    // even center-of-mass profile at zero relative momentum
    for (double xc : {0.3, 1.7, 4.0})
        CHECK(std::abs(rt_amplitude(E, 0.0, xc, 0.0, par) -
                       rt_amplitude(E, 0.0, -xc, 0.0, par)) < 1e-15);
    // center-of-mass localization decays over 1/gamma
    CHECK(std::abs(rt_amplitude(0.0, 0.0, 9.0, 0.0, par)) <
          1e-3 * std::abs(rt_amplitude(0.0, 0.0, 0.0, 0.0, par)));
}

TEST_CASE("modulus invariances: detuning reversal and exchange parity") {
    const ImpurityParams par = make_params(0.4, 1.1);
    std::mt19937_64 eng(43);
    for (int i = 0; i < 200; ++i) {
        const double E = 2.0 * par.omega + 5.0 * (unit(eng) - 0.5);
        const double d = 3.0 * (unit(eng) - 0.5);
        const double xc = 6.0 * (unit(eng) - 0.5);
        const double x = 6.0 * (unit(eng) - 0.5);
        const double Em = 4.0 * par.omega - E;  // dE -> -dE

        CHECK(std::abs(t2_amplitude(E, d, xc, -x, par) -
                       t2_amplitude(E, d, xc, x, par)) < 1e-15);
        CHECK(std::abs(r2_amplitude(E, -d, xc, x, par) -
                       r2_amplitude(E, d, xc, x, par)) < 1e-15);
        // swapping the pair relabels the mixed-sector terms without moving them
        CHECK(std::abs(rt_amplitude(E, -d, xc, x, par) -
                       rt_amplitude(E, d, xc, x, par)) < 1e-15);

        CHECK(std::abs(std::abs(t2_amplitude(Em, d, xc, x, par)) -
                       std::abs(t2_amplitude(E, d, xc, x, par))) < 1e-15);
        CHECK(std::abs(std::abs(rt_amplitude(Em, d, xc, x, par)) -
                       std::abs(rt_amplitude(E, d, xc, x, par))) < 1e-15);
    }
}

TEST_CASE("channel assembly reproduces the closed-form sector amplitudes") {
    const ImpurityParams par = make_params(0.2, 1.4);
    for (auto [E, d] : {std::pair{2.0 * 0.2 + 1.1, 0.6},
                        {2.0 * 0.2 - 1.8, -1.25}}) {
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) {
                const double x1 = -3.0 + 0.5 * i + 0.03;
                const double x2 = -3.0 + 0.5 * j - 0.02;
                const double xc = 0.5 * (x1 + x2), x = x1 - x2;
                CHECK(std::abs(assembled_t2(E, d, x1, x2, par) -
                               t2_amplitude(E, d, xc, x, par)) < 1e-13);
                CHECK(std::abs(assembled_r2(E, d, x1, x2, par) -
                               r2_amplitude(E, d, xc, x, par)) < 1e-13);
                CHECK(std::abs(assembled_rt(E, d, x1, x2, par) -
                               rt_amplitude(E, d, xc, x, par)) < 1e-13);
            }
    }
}

TEST_CASE("momentum sectors: transmitted, reflected and mixed coefficients") {
    const ImpurityParams par = make_params(0.0, 1.0);
    const MomentumPair in = pair_from_energy(0.9, 0.35);
    const MomentumPair out = pair_from_energy(0.9, -0.6);
    const TwoModeCoefficients ck = two_mode_coefficients(in.k, par);
    const TwoModeCoefficients cp = two_mode_coefficients(in.p, par);

    const SMatrixElement rr = momentum_distribution(Sector::RR, in, out, par);
    const SMatrixElement ll = momentum_distribution(Sector::LL, in, out, par);
    const SMatrixElement rl = momentum_distribution(Sector::RL, in, out, par);

    CHECK(std::abs(rr.direct - ck.transmission * cp.transmission) < 1e-15);
    CHECK(std::abs(rr.exchange - rr.direct) == 0.0);
    CHECK(std::abs(ll.direct - ck.reflection * cp.reflection) < 1e-15);
    CHECK(std::abs(ll.exchange - ll.direct) == 0.0);
    CHECK(std::abs(rl.direct - ck.transmission * cp.reflection) < 1e-15);
    CHECK(std::abs(rl.exchange - ck.reflection * cp.transmission) < 1e-15);

    // every sector shares one quarter of the even-channel background
    const complexd quarter =
        0.25 * fluorescence_background(in.energy(), in.delta(), out.delta(),
                                       par);
    CHECK(std::abs(rr.correlated - quarter) == 0.0);
    CHECK(std::abs(ll.correlated - quarter) == 0.0);
    CHECK(std::abs(rl.correlated - quarter) == 0.0);

    // unitarity anchor: the four sector weights add up to one
    const double total = std::norm(rr.direct) + std::norm(ll.direct) +
                         std::norm(rl.direct) + std::norm(rl.exchange);
    CHECK(std::abs(total - 1.0) < 1e-13);
}
