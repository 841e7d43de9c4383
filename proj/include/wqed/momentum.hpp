#pragma once

namespace wqed {

// Ordered pair of photon momenta with center-of-mass views
// E = k + p, delta = (k - p)/2.
struct MomentumPair {
    double k = 0.0;
    double p = 0.0;

    double energy() const { return k + p; }
    double delta() const { return 0.5 * (k - p); }
    bool degenerate() const { return k == p; }
    MomentumPair swapped() const { return {p, k}; }
};

// Inverse view: swapping the pair flips the sign of delta and keeps energy.
inline MomentumPair pair_from_energy(double energy, double delta) {
    return {0.5 * energy + delta, 0.5 * energy - delta};
}

}  // namespace wqed
