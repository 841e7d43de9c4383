#include "wqed/bethe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wqed/single_photon.hpp"

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double PREF = 1.0 / (2.0 * std::numbers::pi * std::sqrt(2.0));

// Plane-wave pair c_B e^{i(k x1 + p x2)} + c_A e^{i(p x1 + k x2)} for
// ordered coordinates x1 <= x2.
complexd wedge(double k, double p, complexd cB, complexd cA, double x1,
               double x2) {
    return PREF * (cB * std::exp(I * (k * x1 + p * x2)) +
                   cA * std::exp(I * (p * x1 + k * x2)));
}

}  // namespace

BetheState build_bethe_state(MomentumPair pr, const ImpurityParams& par) {
    const double k = pr.k;
    const double p = pr.p;
    const double g = par.gamma;
    const double V = par.coupling;

    BetheState st;
    st.labels = pr;

    // Contact condition fixes the coefficient ratio in quadrant III;
    // the normalization makes |A3| = |B3| = 1.
    const double n3 = std::sqrt((k - p) * (k - p) + g * g);
    st.A3 = (complexd(k - p, 0.0) + I * g) / n3;
    st.B3 = (complexd(k - p, 0.0) - I * g) / n3;

    const complexd tk = one_mode_transmission(k, par);
    const complexd tp = one_mode_transmission(p, par);
    st.B2 = tp * st.B3;
    st.A2 = tk * st.A3;
    st.B1 = tk * tp * st.B3;
    st.A1 = tk * tp * st.A3;

    const complexd A3 = st.A3, B3 = st.B3;
    const complexd A2 = st.A2, B2 = st.B2;
    const complexd A1 = st.A1, B1 = st.B1;

    // Wedge value for ordered coordinates; boundary points average the
    // adjacent wedges.
    auto ordered = [=](double x1, double x2) -> complexd {
        if (x2 < 0.0) return wedge(k, p, B3, A3, x1, x2);
        if (x2 == 0.0) {
            if (x1 < 0.0)
                return 0.5 * (wedge(k, p, B3, A3, x1, x2) +
                              wedge(k, p, B2, A2, x1, x2));
            // corner x1 = x2 = 0: average of the four quadrant limits
            return 0.25 * (wedge(k, p, B3, A3, 0.0, 0.0) +
                           2.0 * wedge(k, p, B2, A2, 0.0, 0.0) +
                           wedge(k, p, B1, A1, 0.0, 0.0));
        }
        if (x1 < 0.0) return wedge(k, p, B2, A2, x1, x2);
        if (x1 == 0.0)
            return 0.5 * (wedge(k, p, B2, A2, x1, x2) +
                          wedge(k, p, B1, A1, x1, x2));
        return wedge(k, p, B1, A1, x1, x2);
    };

    st.g = TwoPhotonAmplitude(
        [ordered](double xc, double x) {
            const double x1 = xc + 0.5 * x;
            const double x2 = xc - 0.5 * x;
            return (x1 <= x2) ? ordered(x1, x2) : ordered(x2, x1);
        },
        "bethe_g");

    const complexd kden = complexd(k - par.omega, 0.5 * g);
    const complexd pden = complexd(p - par.omega, 0.5 * g);
    st.e = ExcitationAmplitude(
        [=](double x) -> complexd {
            const complexd below =
                PREF * std::sqrt(2.0) * V *
                (B3 * std::exp(I * k * x) / pden + A3 * std::exp(I * p * x) / kden);
            if (x < 0.0) return below;
            const complexd above =
                PREF * std::sqrt(2.0) * V *
                (tp * B3 * std::exp(I * p * x) / kden +
                 tk * A3 * std::exp(I * k * x) / pden);
            if (x > 0.0) return above;
            return 0.5 * (below + above);
        },
        "bethe_e");

    st.in_readoff = TwoPhotonAmplitude(
        [=](double xc, double x) {
            const double x1 = xc + 0.5 * x;
            const double x2 = xc - 0.5 * x;
            return (x1 <= x2) ? wedge(k, p, B3, A3, x1, x2)
                              : wedge(k, p, B3, A3, x2, x1);
        },
        "bethe_in");
    st.out_readoff = TwoPhotonAmplitude(
        [=](double xc, double x) {
            const double x1 = xc + 0.5 * x;
            const double x2 = xc - 0.5 * x;
            return (x1 <= x2) ? wedge(k, p, B1, A1, x1, x2)
                              : wedge(k, p, B1, A1, x2, x1);
        },
        "bethe_out");
    return st;
}

BoundState build_bound_state(double energy, const ImpurityParams& par) {
    const double g = par.gamma;
    const double V = par.coupling;
    const complexd dE = complexd(energy - 2.0 * par.omega, 0.0);

    BoundState st;
    st.energy = energy;
    const complexd straddle = dE / (dE + 2.0 * I * g);  // quadrant II factor
    st.transmission = (dE - 2.0 * I * g) / (dE + 2.0 * I * g);
    const complexd tE = st.transmission;

    auto envelope = [energy, g](double xc, double x) {
        return std::exp(I * energy * xc - 0.5 * g * std::abs(x));
    };
    auto quadrant_factor = [straddle, tE](double s1, double s2) -> complexd {
        if (s1 < 0.0 && s2 < 0.0) return 1.0;
        if (s1 > 0.0 && s2 > 0.0) return tE;
        return straddle;
    };

    st.g = TwoPhotonAmplitude(
        [=](double xc, double x) {
            const double s1 = signum(xc + 0.5 * x);
            const double s2 = signum(xc - 0.5 * x);
            // averages of the adjacent quadrant factors on the axes
            complexd c{};
            int n = 0;
            for (double a : {s1 == 0.0 ? -1.0 : s1, s1 == 0.0 ? 1.0 : s1})
                for (double b : {s2 == 0.0 ? -1.0 : s2, s2 == 0.0 ? 1.0 : s2}) {
                    c += quadrant_factor(a, b);
                    ++n;
                }
            return (c / static_cast<double>(n)) * envelope(xc, x);
        },
        "bound_g");

    const complexd epref = 2.0 * std::sqrt(2.0) * V / (dE + 2.0 * I * g);
    st.e = ExcitationAmplitude(
        [=](double x) {
            return epref *
                   std::exp(I * 0.5 * energy * x - 0.5 * g * std::abs(x));
        },
        "bound_e");

    st.in_readoff = TwoPhotonAmplitude(envelope, "bound_in");
    st.out_readoff = TwoPhotonAmplitude(
        [=](double xc, double x) { return tE * envelope(xc, x); }, "bound_out");
    return st;
}

complexd channel_eigenvalue(const BasisState& channel,
                            const ImpurityParams& par) {
    switch (channel.kind) {
        case BasisKind::Continuum:
            return one_mode_transmission(channel.labels.k, par) *
                   one_mode_transmission(channel.labels.p, par);
        case BasisKind::Bound: {
            const complexd dE =
                complexd(channel.bound_energy - 2.0 * par.omega, 0.0);
            return (dE - 2.0 * I * par.gamma) / (dE + 2.0 * I * par.gamma);
        }
        default:
            throw std::invalid_argument(
                "channel_eigenvalue: free states are not eigenchannels");
    }
}

}  // namespace wqed
