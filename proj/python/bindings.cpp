#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wqed/basis.hpp"
#include "wqed/bethe.hpp"
#include "wqed/quadrature.hpp"
#include "wqed/single_photon.hpp"
#include "wqed/two_mode.hpp"
#include "wqed/verification.hpp"
#include "wqed/wavepacket.hpp"

namespace py = pybind11;
using namespace wqed;

namespace {

std::string repr_params(const ImpurityParams& p) {
    std::ostringstream os;
    os << "ImpurityParams(omega=" << p.omega << ", gamma=" << p.gamma << ")";
    return os.str();
}

std::string repr_pair(const MomentumPair& pr) {
    std::ostringstream os;
    os << "MomentumPair(k=" << pr.k << ", p=" << pr.p << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_wqed, m) {
    m.doc() =
        "Exact one- and two-photon scattering off a single two-level "
        "impurity coupled to a one-dimensional waveguide";

    // ---- parameters and momentum labels ---------------------------------
    py::class_<ImpurityParams>(m, "ImpurityParams",
                               "Emitter parameters; coupling = sqrt(gamma)")
        .def_readonly("omega", &ImpurityParams::omega)
        .def_readonly("gamma", &ImpurityParams::gamma)
        .def_readonly("coupling", &ImpurityParams::coupling)
        .def("__repr__", &repr_params);
    m.def("make_params", &make_params, py::arg("omega") = 0.0,
          py::arg("gamma") = 1.0,
          "Validated parameter set; gamma must be positive");

    py::class_<MomentumPair>(m, "MomentumPair",
                             "Ordered photon momentum pair (k, p)")
        .def(py::init([](double k, double p) { return MomentumPair{k, p}; }),
             py::arg("k"), py::arg("p"))
        .def_readwrite("k", &MomentumPair::k)
        .def_readwrite("p", &MomentumPair::p)
        .def_property_readonly("energy", &MomentumPair::energy)
        .def_property_readonly("delta", &MomentumPair::delta)
        .def_property_readonly("degenerate", &MomentumPair::degenerate)
        .def("swapped", &MomentumPair::swapped)
        .def("__repr__", &repr_pair);
    m.def("pair_from_energy", &pair_from_energy, py::arg("energy"),
          py::arg("delta"),
          "Pair with total energy E and relative momentum delta = (k - p)/2");

    // ---- position-space amplitude handles -------------------------------
    py::class_<TwoPhotonAmplitude>(m, "TwoPhotonAmplitude",
                                   "Callable in (xc, x) center-of-mass and "
                                   "relative coordinates")
        .def("__call__", &TwoPhotonAmplitude::operator(), py::arg("xc"),
             py::arg("x"))
        .def("at_pair", &TwoPhotonAmplitude::at_pair, py::arg("x1"),
             py::arg("x2"))
        .def_property_readonly("label", &TwoPhotonAmplitude::label)
        .def("__bool__", &TwoPhotonAmplitude::operator bool);

    py::class_<ExcitationAmplitude>(m, "ExcitationAmplitude",
                                    "Photon-emitter amplitude, callable in "
                                    "the surviving photon coordinate")
        .def("__call__", &ExcitationAmplitude::operator(), py::arg("x"))
        .def_property_readonly("label", &ExcitationAmplitude::label)
        .def("__bool__", &ExcitationAmplitude::operator bool);

    // ---- one-photon scattering ------------------------------------------
    m.def("one_mode_transmission", &one_mode_transmission, py::arg("k"),
          py::arg("par"),
          "Even-channel transmission t_k, unit modulus for real k");
    m.def("excitation_amplitude", &excitation_amplitude, py::arg("k"),
          py::arg("par"), "Emitter amplitude of the one-photon eigenstate");
    py::class_<TwoModeCoefficients>(m, "TwoModeCoefficients")
        .def_readonly("transmission", &TwoModeCoefficients::transmission)
        .def_readonly("reflection", &TwoModeCoefficients::reflection);
    m.def("two_mode_coefficients", &two_mode_coefficients, py::arg("k"),
          py::arg("par"),
          "Physical transmission (t_k + 1)/2 and reflection (t_k - 1)/2");
    m.def("eigenstate_wavefunction", &eigenstate_wavefunction, py::arg("k"),
          py::arg("x"), py::arg("par"));
    py::class_<BarrierCoefficients>(m, "BarrierCoefficients")
        .def_readonly("reflection", &BarrierCoefficients::reflection)
        .def_readonly("transmission", &BarrierCoefficients::transmission);
    m.def("delta_barrier", &delta_barrier, py::arg("k"), py::arg("v0"),
          "Static delta-barrier reference scatterer");

    // ---- relative-motion basis and overlaps -----------------------------
    py::enum_<BasisKind>(m, "BasisKind")
        .value("SymFree", BasisKind::SymFree)
        .value("AntisymFree", BasisKind::AntisymFree)
        .value("Continuum", BasisKind::Continuum)
        .value("Bound", BasisKind::Bound);

    py::class_<BasisState>(m, "BasisState")
        .def_readonly("kind", &BasisState::kind)
        .def_readonly("labels", &BasisState::labels)
        .def_readonly("bound_energy", &BasisState::bound_energy)
        .def_readonly("degenerate", &BasisState::degenerate)
        .def_readonly("amplitude", &BasisState::amplitude)
        .def(
            "__call__",
            [](const BasisState& s, double xc, double x) {
                return s.amplitude(xc, x);
            },
            py::arg("xc"), py::arg("x"));
    m.def("sym_free_state", &sym_free_state, py::arg("pair"));
    m.def("antisym_free_state", &antisym_free_state, py::arg("pair"));
    m.def("continuum_state", &continuum_state, py::arg("pair"),
          py::arg("par"));
    m.def("bound_channel_state", &bound_channel_state, py::arg("energy"),
          py::arg("par"));

    py::class_<OverlapDecomposition>(m, "OverlapDecomposition",
                                     "Delta-function coefficients of a "
                                     "distributional inner product")
        .def_readonly("direct", &OverlapDecomposition::direct)
        .def_readonly("exchange", &OverlapDecomposition::exchange)
        .def_readonly("pv_part", &OverlapDecomposition::pv_part)
        .def_readonly("smooth", &OverlapDecomposition::smooth)
        .def_readonly("pv_singular", &OverlapDecomposition::pv_singular);
    m.def("overlap", &overlap, py::arg("bra"), py::arg("ket"), py::arg("par"));
    m.def("completeness_residual", &completeness_residual, py::arg("a"),
          py::arg("b"), py::arg("par"),
          "Bound-channel weight missed by the scattering channels alone");

    // ---- interacting eigenstates ----------------------------------------
    py::class_<BetheState>(m, "BetheState")
        .def_readonly("labels", &BetheState::labels)
        .def_readonly("A3", &BetheState::A3)
        .def_readonly("B3", &BetheState::B3)
        .def_readonly("A2", &BetheState::A2)
        .def_readonly("B2", &BetheState::B2)
        .def_readonly("A1", &BetheState::A1)
        .def_readonly("B1", &BetheState::B1)
        .def_readonly("g", &BetheState::g)
        .def_readonly("e", &BetheState::e)
        .def_readonly("in_readoff", &BetheState::in_readoff)
        .def_readonly("out_readoff", &BetheState::out_readoff);
    m.def("build_bethe_state", &build_bethe_state, py::arg("pair"),
          py::arg("par"),
          "Exact interacting two-photon eigenstate with continuum labels");

    py::class_<BoundState>(m, "BoundState")
        .def_readonly("energy", &BoundState::energy)
        .def_readonly("transmission", &BoundState::transmission)
        .def_readonly("g", &BoundState::g)
        .def_readonly("e", &BoundState::e)
        .def_readonly("in_readoff", &BoundState::in_readoff)
        .def_readonly("out_readoff", &BoundState::out_readoff);
    m.def("build_bound_state", &build_bound_state, py::arg("energy"),
          py::arg("par"),
          "Interacting eigenstate attached to the bound channel");
    m.def("channel_eigenvalue", &channel_eigenvalue, py::arg("channel"),
          py::arg("par"),
          "Scattering eigenvalue t_k t_p (continuum) or t_E (bound)");

    // ---- two-photon S matrix and out states -----------------------------
    py::class_<SMatrixElement>(m, "SMatrixElement",
                               "Coefficients of the momentum-conserving "
                               "delta pairs plus the correlated background")
        .def_readonly("direct", &SMatrixElement::direct)
        .def_readonly("exchange", &SMatrixElement::exchange)
        .def_readonly("correlated", &SMatrixElement::correlated);
    m.def("fluorescence_background", &fluorescence_background,
          py::arg("energy"), py::arg("d_in"), py::arg("d_out"), py::arg("par"),
          "Energy-redistributing kernel B of two-photon scattering");
    m.def("even_channel_element", &even_channel_element, py::arg("in_pair"),
          py::arg("out_pair"), py::arg("par"));
    m.def("out_state_relative_envelope", &out_state_relative_envelope,
          py::arg("energy"), py::arg("delta"), py::arg("x"), py::arg("par"),
          "Even-channel out state with the center-of-mass phase removed");

    py::enum_<Sector>(m, "Sector")
        .value("RR", Sector::RR)
        .value("LL", Sector::LL)
        .value("RL", Sector::RL);
    m.def("t2_amplitude", &t2_amplitude, py::arg("energy"), py::arg("delta"),
          py::arg("xc"), py::arg("x"), py::arg("par"),
          "Both photons transmitted");
    m.def("r2_amplitude", &r2_amplitude, py::arg("energy"), py::arg("delta"),
          py::arg("xc"), py::arg("x"), py::arg("par"),
          "Both photons reflected");
    m.def("rt_amplitude", &rt_amplitude, py::arg("energy"), py::arg("delta"),
          py::arg("xc"), py::arg("x"), py::arg("par"),
          "One photon transmitted, one reflected");
    m.def("momentum_distribution", &momentum_distribution, py::arg("sector"),
          py::arg("in_pair"), py::arg("out_pair"), py::arg("par"));

    // ---- quadrature ------------------------------------------------------
    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](double abs_tol, double rel_tol, int max_depth,
                         double tail_cutoff) {
                 return QuadratureSpec{abs_tol, rel_tol, max_depth,
                                       tail_cutoff};
             }),
             py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-8,
             py::arg("max_depth") = 40, py::arg("tail_cutoff") = 1e-12)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("max_depth", &QuadratureSpec::max_depth)
        .def_readwrite("tail_cutoff", &QuadratureSpec::tail_cutoff);
    m.def("integrate", &integrate, py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("spec") = QuadratureSpec{},
          "Adaptive quadrature; infinite endpoints allowed");
    m.def("pv_integrate", &pv_integrate, py::arg("f"), py::arg("pole"),
          py::arg("a"), py::arg("b"), py::arg("spec") = QuadratureSpec{},
          "Principal value across one interior simple pole");
    m.def("pv_integrate_line", &pv_integrate_line, py::arg("f"),
          py::arg("poles"), py::arg("spec") = QuadratureSpec{},
          "Whole-line principal value with several distinct poles");
    m.def("integrate_alternating", &integrate_alternating, py::arg("f"),
          py::arg("a"), py::arg("h"), py::arg("spec") = QuadratureSpec{},
          "Accelerated sum of alternating half-period panel integrals");

    // ---- wavepacket smearing --------------------------------------------
    py::class_<WavepacketSpec>(m, "WavepacketSpec",
                               "Gaussian label weights of width sigma and a "
                               "position box |xc|, |x| <= box_halfwidth")
        .def(py::init([](double sigma, double center_energy,
                         double center_delta, double box_halfwidth) {
                 return WavepacketSpec{sigma, center_energy, center_delta,
                                       box_halfwidth};
             }),
             py::arg("sigma") = 0.05, py::arg("center_energy") = 0.0,
             py::arg("center_delta") = 0.0, py::arg("box_halfwidth") = 40.0)
        .def_readwrite("sigma", &WavepacketSpec::sigma)
        .def_readwrite("center_energy", &WavepacketSpec::center_energy)
        .def_readwrite("center_delta", &WavepacketSpec::center_delta)
        .def_readwrite("box_halfwidth", &WavepacketSpec::box_halfwidth);
    m.def("default_wavepacket", &default_wavepacket, py::arg("par"),
          py::arg("e0"), py::arg("d0"),
          "sigma = gamma/20 and a box of four envelope widths");

    py::class_<SmearedState>(m, "SmearedState",
                             "Basis state integrated against Gaussian label "
                             "weights; factorizes into center and relative "
                             "profiles")
        .def(py::init<BasisKind, const WavepacketSpec&, const ImpurityParams&,
                      const QuadratureSpec&>(),
             py::arg("kind"), py::arg("wavepacket"), py::arg("par"),
             py::arg("quad") = QuadratureSpec{})
        .def("__call__", &SmearedState::operator(), py::arg("xc"),
             py::arg("x"))
        .def("center_profile", &SmearedState::center_profile, py::arg("xc"))
        .def("relative_profile", &SmearedState::relative_profile,
             py::arg("x"))
        .def_property_readonly("spec", &SmearedState::spec)
        .def_property_readonly("kind", &SmearedState::kind);
    m.def("smeared_overlap", &smeared_overlap, py::arg("a"), py::arg("b"),
          py::arg("quad") = QuadratureSpec{},
          "Box-truncated inner product of two smeared states");
    m.def("wavepacket_label_overlap", &wavepacket_label_overlap,
          py::arg("c1"), py::arg("c2"), py::arg("sigma"),
          "Overlap of two unit-norm Gaussian label weights");

    // ---- oracle routes and the named check suite ------------------------
    m.def("bound_term_resummed", &bound_term_resummed, py::arg("energy"),
          py::arg("d1"), py::arg("x"), py::arg("par"),
          py::arg("spec") = QuadratureSpec{},
          "Bound-channel out-state term by brute-force momentum quadrature");
    m.def("assembled_t2", &assembled_t2, py::arg("energy"), py::arg("delta"),
          py::arg("x1"), py::arg("x2"), py::arg("par"));
    m.def("assembled_r2", &assembled_r2, py::arg("energy"), py::arg("delta"),
          py::arg("x1"), py::arg("x2"), py::arg("par"));
    m.def("assembled_rt", &assembled_rt, py::arg("energy"), py::arg("delta"),
          py::arg("x1"), py::arg("x2"), py::arg("par"));
    m.def("completeness_residual_quadrature",
          &completeness_residual_quadrature, py::arg("d1"), py::arg("d2"),
          py::arg("par"), py::arg("spec") = QuadratureSpec{});
    m.def("smeared_overlap_prediction", &smeared_overlap_prediction,
          py::arg("bra_kind"), py::arg("bra_wavepacket"), py::arg("ket_kind"),
          py::arg("ket_wavepacket"), py::arg("par"),
          py::arg("spec") = QuadratureSpec{});

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("measured", &CheckResult::measured)
        .def_readonly("tolerance", &CheckResult::tolerance)
        // "pass" is a python keyword, so the flag binds as "passed"
        .def_readonly("passed", &CheckResult::pass)
        .def("__repr__", [](const CheckResult& r) {
            std::ostringstream os;
            os << "CheckResult(name='" << r.name << "', measured="
               << r.measured << ", tolerance=" << r.tolerance << ", passed="
               << (r.pass ? "True" : "False") << ")";
            return os.str();
        });
    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init([](double tolerance_cap, unsigned long long seed) {
                 return VerifyOptions{tolerance_cap, seed};
             }),
             py::arg("tolerance_cap") = 1e300,
             py::arg("seed") = 20260825ull)
        .def_readwrite("tolerance_cap", &VerifyOptions::tolerance_cap)
        .def_readwrite("seed", &VerifyOptions::seed);
    m.def("run_verification", &run_verification, py::arg("par"),
          py::arg("options") = VerifyOptions{},
          "Full deterministic invariant suite; one result per named check");
}
