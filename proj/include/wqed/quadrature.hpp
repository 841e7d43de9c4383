#pragma once

#include <functional>
#include <vector>

#include "wqed/amplitudes.hpp"

namespace wqed {

// Accuracy contract for the integration routines. Non-convergence within
// max_depth bisections of a panel signals integrand pathology and throws.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 40;
    double tail_cutoff = 1e-12;
};

using Integrand = std::function<complexd(double)>;

// Adaptive Gauss-Kronrod (7,15) with worst-panel-first bisection.
// Infinite endpoints are mapped to a finite interval by a tangent
// substitution, which handles algebraic tail decay exactly.
complexd integrate(const Integrand& f, double a, double b,
                   const QuadratureSpec& spec = {});

// Cauchy principal value across one interior simple pole. Symmetric
// excision with half-widths eps, eps/2, eps/4, ... and Richardson
// extrapolation in the odd powers of eps; converged when successive
// extrapolants agree within tolerance.
complexd pv_integrate(const Integrand& f, double pole, double a, double b,
                      const QuadratureSpec& spec = {});

// Principal value over the whole line with several distinct simple poles.
// The line is cut midway between neighbouring poles; each pole segment is
// excised symmetrically, the rest integrates plainly.
complexd pv_integrate_line(const Integrand& f, std::vector<double> poles,
                           const QuadratureSpec& spec = {});

// Integral over [a, +inf) of an integrand whose panel integrals on the
// half-period grid a + n*h alternate in sign (oscillatory factor with a
// slowly decaying envelope). Partial sums are accelerated by iterated
// averaging, so tails far beyond any fixed truncation still contribute
// correctly. The caller aligns `a` with a zero of the oscillating factor.
complexd integrate_alternating(const Integrand& f, double a, double h,
                               const QuadratureSpec& spec = {});

}  // namespace wqed
