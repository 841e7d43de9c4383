#include "wqed/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wqed {

namespace {
constexpr complexd I{0.0, 1.0};
const double PI = std::numbers::pi;
const double SQRT2_OVER_2PI = std::sqrt(2.0) / (2.0 * PI);
}

BasisState sym_free_state(MomentumPair pr) {
    const double E = pr.energy();
    const double d = pr.delta();
    TwoPhotonAmplitude amp(
        [E, d](double xc, double x) {
            return SQRT2_OVER_2PI * std::exp(I * E * xc) * std::cos(d * x);
        },
        "sym_free");
    return {BasisKind::SymFree, pr, 0.0, false, amp};
}

BasisState antisym_free_state(MomentumPair pr) {
    const double E = pr.energy();
    const double d = pr.delta();
    TwoPhotonAmplitude amp(
        [E, d](double xc, double x) {
            return SQRT2_OVER_2PI * I * signum(x) * std::exp(I * E * xc) *
                   std::sin(d * x);
        },
        "antisym_free");
    return {BasisKind::AntisymFree, pr, 0.0, false, amp};
}

BasisState continuum_state(MomentumPair pr, const ImpurityParams& par) {
    const double E = pr.energy();
    const double d = pr.delta();
    const double g = par.gamma;
    if (pr.degenerate()) {
        // The 2*delta and gamma*sgn*sin weights both vanish: explicit zero.
        TwoPhotonAmplitude amp([](double, double) { return complexd{}; },
                               "continuum_zero");
        return {BasisKind::Continuum, pr, 0.0, true, amp};
    }
    const double norm = std::sqrt(4.0 * d * d + g * g);
    TwoPhotonAmplitude amp(
        [E, d, g, norm](double xc, double x) {
            return SQRT2_OVER_2PI * std::exp(I * E * xc) *
                   (2.0 * d * std::cos(d * x) -
                    g * signum(x) * std::sin(d * x)) /
                   norm;
        },
        "continuum");
    return {BasisKind::Continuum, pr, 0.0, false, amp};
}

BasisState bound_channel_state(double energy, const ImpurityParams& par) {
    const double g = par.gamma;
    const double norm = std::sqrt(g / (4.0 * PI));
    TwoPhotonAmplitude amp(
        [energy, g, norm](double xc, double x) {
            return norm * std::exp(I * energy * xc - 0.5 * g * std::abs(x));
        },
        "bound_channel");
    BasisState st{BasisKind::Bound, {}, energy, false, amp};
    return st;
}

namespace {

OverlapDecomposition conjugated(OverlapDecomposition d) {
    d.direct = std::conj(d.direct);
    d.exchange = std::conj(d.exchange);
    d.pv_part = std::conj(d.pv_part);
    d.smooth = std::conj(d.smooth);
    return d;
}

}  // namespace

OverlapDecomposition overlap(const BasisState& bra, const BasisState& ket,
                             const ImpurityParams& par) {
    using K = BasisKind;
    const K b = bra.kind;
    const K t = ket.kind;
    const double g = par.gamma;

    if (b == K::SymFree && t == K::SymFree) return {1.0, 1.0, {}, {}, false};
    if (b == K::AntisymFree && t == K::AntisymFree)
        return {1.0, -1.0, {}, {}, false};

    if (b == K::SymFree && t == K::AntisymFree) {
        const double d1 = bra.labels.delta();
        const double d2 = ket.labels.delta();
        OverlapDecomposition out;
        if (d1 * d1 == d2 * d2) {
            out.pv_singular = true;
            return out;
        }
        out.pv_part = (I / PI) * 2.0 * d2 / (d2 * d2 - d1 * d1);
        return out;
    }
    if (b == K::AntisymFree && t == K::SymFree)
        return conjugated(overlap(ket, bra, par));

    if (b == K::Continuum && t == K::SymFree) {
        const double d = bra.labels.delta();
        const double d1 = ket.labels.delta();
        const double w = 2.0 * d / std::sqrt(4.0 * d * d + g * g);
        OverlapDecomposition out;
        out.direct = w;
        out.exchange = w;
        if (d * d == d1 * d1) {
            out.pv_singular = true;
            return out;
        }
        out.pv_part = -w * (g / PI) / (d * d - d1 * d1);
        return out;
    }
    if (b == K::SymFree && t == K::Continuum)
        return conjugated(overlap(ket, bra, par));

    if (b == K::Continuum && t == K::Continuum) {
        // Principal-value cross terms cancel pairwise; only the (anti)
        // symmetric delta pair survives.
        return {1.0, -1.0, {}, {}, false};
    }

    if (b == K::Bound && t == K::SymFree) {
        const double d1 = ket.labels.delta();
        OverlapDecomposition out;
        out.smooth =
            std::sqrt(g / (2.0 * PI)) * 4.0 * g / (4.0 * d1 * d1 + g * g);
        return out;
    }
    if (b == K::SymFree && t == K::Bound)
        return conjugated(overlap(ket, bra, par));

    if (b == K::Bound && t == K::Bound) {
        OverlapDecomposition out;
        out.smooth = 1.0;
        return out;
    }

    throw std::invalid_argument("overlap: unsupported basis pair");
}

double completeness_residual(const MomentumPair& a, const MomentumPair& b,
                             const ImpurityParams& par) {
    const double g = par.gamma;
    const double d1 = a.delta();
    const double d2 = b.delta();
    return 8.0 * g * g * g / PI /
           ((4.0 * d1 * d1 + g * g) * (4.0 * d2 * d2 + g * g));
}

}  // namespace wqed
