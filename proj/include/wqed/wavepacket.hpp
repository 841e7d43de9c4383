#pragma once

#include <functional>

#include "wqed/basis.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

// Gaussian smearing of momentum labels. Delta-normalized basis states are
// integrated against L2-normalized Gaussian weights
//   (2 pi sigma^2)^{-1/4} exp(-(m - m0)^2 / (4 sigma^2))
// in each label, turning distributional overlaps into finite integrals over
// a position-space box |xc|, |x| <= box_halfwidth.
struct WavepacketSpec {
    double sigma = 0.05;
    double center_energy = 0.0;
    double center_delta = 0.0;
    double box_halfwidth = 40.0;
};

// sigma = gamma/20 and box 40/gamma: the Gaussian position envelope has
// width 1/(2 sigma) = 10/gamma, so the default box holds four envelope
// widths.
WavepacketSpec default_wavepacket(const ImpurityParams& par, double e0,
                                  double d0);

// Basis state of the given kind integrated against the Gaussian weights
// centred on the wavepacket labels. All four kinds factorize into a
// center-of-mass profile times a relative profile; the bound kind smears
// in energy only. The free relative profiles come out in closed form; the
// continuum mixture is integrated numerically per evaluation.
class SmearedState {
public:
    SmearedState(BasisKind kind, const WavepacketSpec& wp,
                 const ImpurityParams& par, const QuadratureSpec& quad = {});

    complexd operator()(double xc, double x) const {
        return center_(xc) * relative_(x);
    }
    complexd center_profile(double xc) const { return center_(xc); }
    complexd relative_profile(double x) const { return relative_(x); }
    const WavepacketSpec& spec() const { return wp_; }
    BasisKind kind() const { return kind_; }

private:
    WavepacketSpec wp_;
    BasisKind kind_;
    std::function<complexd(double)> center_;
    std::function<complexd(double)> relative_;
};

// Box-truncated inner product integral(conj(a) * b) over the square
// |xc|, |x| <= L. The profiles factorize, so the double integral is the
// product of two one-dimensional quadratures. Warns (and proceeds) when
// the box holds fewer than four Gaussian envelope widths.
complexd smeared_overlap(const SmearedState& a, const SmearedState& b,
                         const QuadratureSpec& quad = {});

// Overlap of two unit-norm Gaussian label weights with common sigma:
// exp(-(c1 - c2)^2 / (8 sigma^2)). The building block of smeared
// predictions assembled from distributional overlap coefficients.
double wavepacket_label_overlap(double c1, double c2, double sigma);

}  // namespace wqed
