#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqed/basis.hpp"
#include "wqed/verification.hpp"
#include "wqed/wavepacket.hpp"

using namespace wqed;

namespace {
const double PI = std::numbers::pi;
const double S2_2PI = std::sqrt(2.0) / (2.0 * PI);

bool near(complexd a, complexd b, double tol = 1e-14) {
    return std::abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("basis amplitudes take their defining position-space forms") {
    const ImpurityParams par = make_params(0.0, 1.3);
    const MomentumPair pr = pair_from_energy(1.1, 0.7);
    const double xc = 0.4, x = -1.6;
    const complexd phase = std::exp(complexd(0.0, 1.1 * xc));

    CHECK(near(sym_free_state(pr).amplitude(xc, x),
               S2_2PI * phase * std::cos(0.7 * x)));
    CHECK(near(antisym_free_state(pr).amplitude(xc, x),
               S2_2PI * complexd(0.0, 1.0) * signum(x) * phase *
                   std::sin(0.7 * x)));

    const double mix = std::sqrt(4.0 * 0.7 * 0.7 + 1.3 * 1.3);
    CHECK(near(continuum_state(pr, par).amplitude(xc, x),
               S2_2PI * phase *
                   (2.0 * 0.7 * std::cos(0.7 * x) -
                    1.3 * signum(x) * std::sin(0.7 * x)) /
                   mix));

    CHECK(near(bound_channel_state(1.1, par).amplitude(xc, x),
               std::sqrt(1.3 / (4.0 * PI)) * phase *
                   std::exp(-0.5 * 1.3 * std::abs(x))));

    // antisymmetric and sign-weighted pieces vanish on the exchange axis
    CHECK(near(antisym_free_state(pr).amplitude(xc, 0.0), 0.0));
}

TEST_CASE("degenerate continuum labels produce the explicit zero state") {
    const ImpurityParams par = make_params(0.0, 1.0);
    const BasisState z = continuum_state({0.8, 0.8}, par);
    CHECK(z.degenerate);
    CHECK(near(z.amplitude(1.0, 2.0), 0.0));
    CHECK(near(z.amplitude(-3.0, 0.0), 0.0));
}

TEST_CASE("distributional overlaps: free-free table") {
    const ImpurityParams par = make_params(0.0, 1.0);
    const BasisState s1 = sym_free_state(pair_from_energy(2.0, 0.9));
    const BasisState s2 = sym_free_state(pair_from_energy(2.0, 0.4));
    const BasisState a1 = antisym_free_state(pair_from_energy(2.0, 0.9));
    const BasisState a2 = antisym_free_state(pair_from_energy(2.0, 0.4));

    const OverlapDecomposition ss = overlap(s1, s2, par);
    CHECK(near(ss.direct, 1.0));
    CHECK(near(ss.exchange, 1.0));
    CHECK(near(ss.pv_part, 0.0));
    CHECK(near(ss.smooth, 0.0));

    const OverlapDecomposition aa = overlap(a1, a2, par);
    CHECK(near(aa.direct, 1.0));
    CHECK(near(aa.exchange, -1.0));

    // mixed symmetric-antisymmetric pair leaves only the principal-value
    // kernel (i/pi) 2 d2 / (d2^2 - d1^2)
    const OverlapDecomposition sa = overlap(s1, a2, par);
    CHECK(near(sa.direct, 0.0));
    CHECK(near(sa.exchange, 0.0));
    const complexd kernel =
        complexd(0.0, 1.0 / PI) * 2.0 * 0.4 / (0.4 * 0.4 - 0.9 * 0.9);
    CHECK(near(sa.pv_part, kernel));

    const OverlapDecomposition as = overlap(a2, s1, par);
    CHECK(near(as.pv_part, std::conj(kernel)));

    // label collision has no principal-value evaluation
    CHECK(overlap(s1, a1, par).pv_singular);
    const BasisState a1m = antisym_free_state(pair_from_energy(2.0, -0.9));
    CHECK(overlap(s1, a1m, par).pv_singular);
}

TEST_CASE("distributional overlaps: interacting-channel rows") {
    const double g = 1.4;
    const ImpurityParams par = make_params(0.0, g);
    const double dw = 0.8, d1 = 0.3;
    const BasisState w = continuum_state(pair_from_energy(1.0, dw), par);
    const BasisState s = sym_free_state(pair_from_energy(1.0, d1));

    const OverlapDecomposition ws = overlap(w, s, par);
    const double wmix = 2.0 * dw / std::sqrt(4.0 * dw * dw + g * g);
    CHECK(near(ws.direct, wmix));
    CHECK(near(ws.exchange, wmix));
    CHECK(near(ws.pv_part, -wmix * (g / PI) / (dw * dw - d1 * d1)));

    const OverlapDecomposition sw = overlap(s, w, par);
    CHECK(near(sw.pv_part, std::conj(ws.pv_part)));

    const BasisState w2 = continuum_state(pair_from_energy(1.0, 0.2), par);
    const OverlapDecomposition ww = overlap(w, w2, par);
    CHECK(near(ww.direct, 1.0));
    CHECK(near(ww.exchange, -1.0));
    CHECK(near(ww.pv_part, 0.0));

    const BasisState b = bound_channel_state(1.0, par);
    const OverlapDecomposition bs = overlap(b, s, par);
    CHECK(near(bs.smooth,
               std::sqrt(g / (2.0 * PI)) * 4.0 * g / (4.0 * d1 * d1 + g * g)));
    CHECK(near(overlap(b, b, par).smooth, 1.0));

    // collision of the mixture label with the free label (mirrored pair has
    // the identical delta, bit for bit)
    const BasisState sd = sym_free_state(pair_from_energy(1.0, -dw));
    CHECK(overlap(w, sd, par).pv_singular);

    CHECK_THROWS_AS(overlap(b, antisym_free_state(pair_from_energy(1.0, 0.5)),
                            par),
                    std::invalid_argument);
    CHECK_THROWS_AS(overlap(w, antisym_free_state(pair_from_energy(1.0, 0.5)),
                            par),
                    std::invalid_argument);
}

TEST_CASE("bound-channel completeness weight: closed form and quadrature") {
    const ImpurityParams par = make_params(0.0, 1.0);

    // peak value 8/(pi gamma) at degenerate labels
    const double peak =
        completeness_residual(pair_from_energy(1.0, 0.0),
                              pair_from_energy(1.0, 0.0), par);
    CHECK(peak == doctest::Approx(8.0 / PI).epsilon(1e-12));

    for (double gg : {0.6, 2.2}) {
        const ImpurityParams pg = make_params(0.1, gg);
        const double v =
            completeness_residual(pair_from_energy(0.5, 0.4),
                                  pair_from_energy(0.5, -0.9), pg);
        const double want = 8.0 * gg * gg * gg / PI /
                            ((4.0 * 0.16 + gg * gg) * (4.0 * 0.81 + gg * gg));
        CHECK(v == doctest::Approx(want).epsilon(1e-13));
    }

    // independent excision-quadrature route through the channel projections
    for (auto [d1, d2] : {std::pair{0.45, 1.1}, {0.55, 0.9}, {1.3, 0.2}}) {
        const double closed =
            completeness_residual(pair_from_energy(0.0, d1),
                                  pair_from_energy(0.0, d2), par);
        const double quad = completeness_residual_quadrature(d1, d2, par);
        CHECK(std::abs(quad / closed - 1.0) < 1e-8);
    }
}

TEST_CASE("gaussian label machinery: weight overlap and state profiles") {
    CHECK(wavepacket_label_overlap(0.7, 0.7, 0.05) == 1.0);
    CHECK(wavepacket_label_overlap(0.9, 0.5, 0.1) ==
          doctest::Approx(std::exp(-0.16 / 0.08)).epsilon(1e-14));

    const ImpurityParams par = make_params(0.0, 1.0);
    const WavepacketSpec wp = default_wavepacket(par, 1.2, 0.4);
    CHECK(wp.sigma == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(wp.box_halfwidth == doctest::Approx(40.0).epsilon(1e-14));

    // center-of-mass profile: gaussian envelope around the label energy
    const SmearedState s(BasisKind::SymFree, wp, par);
    const double env = std::abs(s.center_profile(6.0)) /
                       std::abs(s.center_profile(0.0));
    CHECK(env == doctest::Approx(std::exp(-0.0025 * 36.0)).epsilon(1e-10));

    // bound kind localizes the relative coordinate exponentially
    const SmearedState b(BasisKind::Bound, wp, par);
    const double ratio = std::abs(b.relative_profile(3.0)) /
                         std::abs(b.relative_profile(1.0));
    CHECK(ratio == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("smeared inner products reproduce the coefficient predictions") {
    const ImpurityParams par = make_params(0.0, 1.0);
    auto wide = [&](double e0, double d0) {
        WavepacketSpec w = default_wavepacket(par, e0, d0);
        w.box_halfwidth = 80.0;
        return w;
    };

    // symmetric pair with offset energies: overlap shrinks by the label factor
    const WavepacketSpec w1 = wide(1.0, 0.8);
    const WavepacketSpec w2 = wide(1.2, 0.8);
    const SmearedState s1(BasisKind::SymFree, w1, par);
    const SmearedState s2(BasisKind::SymFree, w2, par);
    const complexd q12 = smeared_overlap(s1, s2);
    const complexd q11 = smeared_overlap(s1, s1);
    const complexd q22 = smeared_overlap(s2, s2);
    const complexd p12 = smeared_overlap_prediction(BasisKind::SymFree, w1,
                                                    BasisKind::SymFree, w2, par);
    const complexd p11 = smeared_overlap_prediction(BasisKind::SymFree, w1,
                                                    BasisKind::SymFree, w1, par);
    const complexd p22 = smeared_overlap_prediction(BasisKind::SymFree, w2,
                                                    BasisKind::SymFree, w2, par);
    const complexd qn = q12 / std::sqrt(q11.real() * q22.real());
    const complexd pn = p12 / std::sqrt(p11.real() * p22.real());
    CHECK(std::abs(qn - pn) < 1e-6);
    CHECK(std::abs(pn - std::exp(-2.0)) < 1e-10);  // exp(-(0.2)^2 / 8 sigma^2)

    // conjugate symmetry of the box inner product
    CHECK(std::abs(q12 - std::conj(smeared_overlap(s2, s1))) < 1e-12);

    // mixed symmetric-antisymmetric pair against the principal-value route
    const WavepacketSpec wa = wide(1.0, 0.3);
    const SmearedState a(BasisKind::AntisymFree, wa, par);
    const complexd qsa = smeared_overlap(s1, a);
    const complexd psa = smeared_overlap_prediction(
        BasisKind::SymFree, w1, BasisKind::AntisymFree, wa, par);
    CHECK(std::abs(qsa - psa) < 1e-6);
    // no delta backs this overlap, so it scales with the area under each
    // Gaussian weight; the sharp kernel times those areas sets the magnitude
    const double area = std::pow(2.0 * PI * 0.05 * 0.05, -0.25) * 2.0 * 0.05 *
                        std::sqrt(PI);
    const complexd sharp = complexd(0.0, 1.0 / PI) * 2.0 * 0.3 /
                           (0.3 * 0.3 - 0.8 * 0.8) * area * area;
    CHECK(std::abs(psa - sharp) < 0.1 * std::abs(sharp));
}
