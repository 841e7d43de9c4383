#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>

namespace wqed {

using complexd = std::complex<double>;

// Sign function with signum(0) = 0. Piecewise amplitudes carry jumps across
// coordinate axes; evaluating exactly on a jump returns the two-sided
// average, and this convention makes sgn-weighted terms drop out there.
inline double signum(double x) { return (x > 0.0) - (x < 0.0); }

// Bosonic two-photon amplitude in center-of-mass coordinates
// xc = (x1 + x2)/2, x = x1 - x2. Exchange symmetry means invariance
// under x -> -x.
class TwoPhotonAmplitude {
public:
    using Eval = std::function<complexd(double, double)>;

    TwoPhotonAmplitude() = default;
    TwoPhotonAmplitude(Eval eval, std::string label)
        : eval_(std::move(eval)), label_(std::move(label)) {}

    complexd operator()(double xc, double x) const { return eval_(xc, x); }
    complexd at_pair(double x1, double x2) const {
        return eval_(0.5 * (x1 + x2), x1 - x2);
    }
    const std::string& label() const { return label_; }
    explicit operator bool() const { return static_cast<bool>(eval_); }

private:
    Eval eval_;
    std::string label_;
};

// One-photon amplitude for configurations where the partner photon has been
// absorbed by the emitter. Continuous at the origin for eigenstates, with a
// kink allowed there.
class ExcitationAmplitude {
public:
    using Eval = std::function<complexd(double)>;

    ExcitationAmplitude() = default;
    ExcitationAmplitude(Eval eval, std::string label)
        : eval_(std::move(eval)), label_(std::move(label)) {}

    complexd operator()(double x) const { return eval_(x); }
    const std::string& label() const { return label_; }
    explicit operator bool() const { return static_cast<bool>(eval_); }

private:
    Eval eval_;
    std::string label_;
};

}  // namespace wqed
