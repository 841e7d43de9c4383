#pragma once

#include <string>
#include <vector>

#include "wqed/params.hpp"
#include "wqed/quadrature.hpp"
#include "wqed/wavepacket.hpp"

namespace wqed {

// ---- independent oracle routes -------------------------------------------
// These recompute closed-form results of the scattering solution by direct
// numerical quadrature or by re-assembling amplitudes from more primitive
// pieces. The verification checks compare them against the library
// implementations; the test suite uses them as well.

// Bound-channel contribution to the out state obtained by brute-force
// integration of the background kernel over the outgoing relative momenta,
//   integral_{-inf}^{0} d d2  B(E, d1, d2) cos(d2 x).
// Slowly decaying oscillatory tail handled by accelerated half-period
// panel summation.
complexd bound_term_resummed(double energy, double d1, double x,
                             const ImpurityParams& par,
                             const QuadratureSpec& spec = {});

// Right/left sector amplitudes re-assembled from the even/odd channel
// decomposition: even-channel out state, free odd piece, and the mixed
// even-odd transmission piece.
complexd assembled_t2(double energy, double delta, double x1, double x2,
                      const ImpurityParams& par);
complexd assembled_r2(double energy, double delta, double x1, double x2,
                      const ImpurityParams& par);
complexd assembled_rt(double energy, double delta, double x1, double x2,
                      const ImpurityParams& par);

// Bound-channel completeness weight recomputed from the continuum-channel
// projections: the principal-value part of the projector integral is
// evaluated by excision quadrature, the delta parts analytically.
double completeness_residual_quadrature(double d1, double d2,
                                        const ImpurityParams& par,
                                        const QuadratureSpec& spec = {});

// Smeared overlap prediction assembled from the distributional overlap
// coefficients: Gaussian label overlaps in closed form, principal-value and
// smooth kernels integrated in momentum space. Supports the same basis
// pairs as overlap().
complexd smeared_overlap_prediction(BasisKind bra, const WavepacketSpec& wbra,
                                    BasisKind ket, const WavepacketSpec& wket,
                                    const ImpurityParams& par,
                                    const QuadratureSpec& spec = {});

// ---- named check suite ---------------------------------------------------

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    // every check tolerance is clamped to min(nominal, tolerance_cap)
    double tolerance_cap = 1e300;
    unsigned long long seed = 20260825ull;
};

// Runs the full invariant suite at the given parameters. Deterministic for
// a fixed seed; each check reports the worst measured residual against its
// nominal tolerance.
std::vector<CheckResult> run_verification(const ImpurityParams& par,
                                          const VerifyOptions& opts = {});

}  // namespace wqed
