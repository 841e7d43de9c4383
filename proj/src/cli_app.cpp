#include "wqed/cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wqed/params.hpp"
#include "wqed/single_photon.hpp"
#include "wqed/smatrix.hpp"
#include "wqed/table_io.hpp"
#include "wqed/two_mode.hpp"
#include "wqed/verification.hpp"

namespace wqed {

namespace {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 2;
    double at(int i) const { return lo + (hi - lo) * i / (n - 1); }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec gs;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    in >> gs.lo >> c1 >> gs.hi >> c2 >> gs.n;
    const bool fields_ok = bool(in) && c1 == ':' && c2 == ':';
    in.clear();
    std::string rest;
    in >> rest;
    if (!fields_ok || !rest.empty())
        throw std::invalid_argument("grid must be min:max:points: " + text);
    if (gs.n < 2 || !(gs.lo < gs.hi))
        throw std::invalid_argument(
            "grid needs points >= 2 and min < max: " + text);
    return gs;
}

struct Common {
    double omega = 0.0;
    double gamma = 1.0;
    std::string grid_text;
    std::string out_path;
    std::string format = "csv";
};

void add_common(CLI::App* sub, Common& c, const char* default_grid,
                const char* grid_help) {
    sub->add_option("--omega", c.omega, "emitter transition energy")
        ->capture_default_str();
    sub->add_option("--gamma", c.gamma, "decay rate into the guided mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c.grid_text = default_grid;
    sub->add_option("--grid", c.grid_text, grid_help)->capture_default_str();
    sub->add_option("--out", c.out_path, "output file (default: stdout)");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

int write_output(const Table& t, const std::string& path,
                 const std::string& format) {
    std::ostringstream buf;
    if (format == "json")
        write_json(buf, t);
    else
        write_csv(buf, t);
    if (path.empty()) {
        std::cout << buf.str();
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << buf.str();
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write output file: " << path << '\n';
        return 3;
    }
    return 0;
}

int run_spectrum(const Common& c) {
    const ImpurityParams par = make_params(c.omega, c.gamma);
    const GridSpec gs = parse_grid(c.grid_text);
    Table t;
    t.columns = {"k",
                 "transmission_re",
                 "transmission_im",
                 "reflection_re",
                 "reflection_im",
                 "transmitted_fraction",
                 "reflected_fraction",
                 "excitation_abs2"};
    for (int i = 0; i < gs.n; ++i) {
        const double k = gs.at(i);
        const TwoModeCoefficients tm = two_mode_coefficients(k, par);
        t.rows.push_back({k, tm.transmission.real(), tm.transmission.imag(),
                          tm.reflection.real(), tm.reflection.imag(),
                          std::norm(tm.transmission), std::norm(tm.reflection),
                          std::norm(excitation_amplitude(k, par))});
    }
    return write_output(t, c.out_path, c.format);
}

int run_wavefunctions(const Common& c, double de, double delta) {
    const ImpurityParams par = make_params(c.omega, c.gamma);
    const GridSpec gs = parse_grid(c.grid_text);
    const double E = 2.0 * par.omega + de * par.gamma;
    const double d = delta * par.gamma;
    Table t;
    t.columns = {"xbar",   "t2_re", "t2_im", "t2_abs2", "r2_re",
                 "r2_im",  "r2_abs2", "rt_re", "rt_im", "rt_abs2"};
    for (int i = 0; i < gs.n; ++i) {
        const double xbar = gs.at(i);
        const double coord = 2.0 * xbar / par.gamma;
        // transmitted/reflected pairs vary in the relative coordinate, the
        // mixed pair in the center-of-mass coordinate
        const complexd t2 = t2_amplitude(E, d, 0.0, coord, par);
        const complexd r2 = r2_amplitude(E, d, 0.0, coord, par);
        const complexd rt = rt_amplitude(E, d, coord, 0.0, par);
        t.rows.push_back({xbar, t2.real(), t2.imag(), std::norm(t2), r2.real(),
                          r2.imag(), std::norm(r2), rt.real(), rt.imag(),
                          std::norm(rt)});
    }
    return write_output(t, c.out_path, c.format);
}

int run_fluorescence(const Common& c, double ebar) {
    const ImpurityParams par = make_params(c.omega, c.gamma);
    const GridSpec gs = parse_grid(c.grid_text);
    const double half = 0.5 * par.gamma;
    const double E = 2.0 * par.omega + ebar * half;
    Table t;
    t.columns = {"dbar_in", "dbar_out", "bbar_re", "bbar_im", "bbar_abs2"};
    for (int i = 0; i < gs.n; ++i) {
        for (int j = 0; j < gs.n; ++j) {
            const complexd b = half * fluorescence_background(
                                          E, gs.at(i) * half, gs.at(j) * half,
                                          par);
            t.rows.push_back(
                {gs.at(i), gs.at(j), b.real(), b.imag(), std::norm(b)});
        }
    }
    return write_output(t, c.out_path, c.format);
}

int run_momentum(const Common& c, double ebar, double dbar_in) {
    const ImpurityParams par = make_params(c.omega, c.gamma);
    const GridSpec gs = parse_grid(c.grid_text);
    const double half = 0.5 * par.gamma;
    const double E = 2.0 * par.omega + ebar * half;
    const MomentumPair in = pair_from_energy(E, dbar_in * half);
    Table t;
    t.columns = {"dbar_out"};
    for (const char* sec : {"rr", "ll", "rl"})
        for (const char* part : {"direct", "exchange", "correlated"})
            for (const char* comp : {"re", "im"})
                t.columns.push_back(std::string(sec) + "_" + part + "_" + comp);
    for (int i = 0; i < gs.n; ++i) {
        const MomentumPair out = pair_from_energy(E, gs.at(i) * half);
        std::vector<double> row{gs.at(i)};
        for (const Sector s : {Sector::RR, Sector::LL, Sector::RL}) {
            const SMatrixElement el = momentum_distribution(s, in, out, par);
            for (const complexd& v : {el.direct, el.exchange, el.correlated}) {
                row.push_back(v.real());
                row.push_back(v.imag());
            }
        }
        t.rows.push_back(std::move(row));
    }
    return write_output(t, c.out_path, c.format);
}

int run_verify(const Common& c, double cap, unsigned long long seed) {
    const ImpurityParams par = make_params(c.omega, c.gamma);
    VerifyOptions opts;
    opts.tolerance_cap = cap;
    opts.seed = seed;
    const std::vector<CheckResult> results = run_verification(par, opts);
    int failures = 0;
    for (const CheckResult& r : results) {
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left
                  << std::setw(36) << r.name << " measured "
                  << format_double(r.measured) << "  tolerance "
                  << format_double(r.tolerance) << '\n';
    }
    std::cout << results.size() - failures << "/" << results.size()
              << " checks passed\n";
    if (!c.out_path.empty()) {
        std::ostringstream buf;
        if (c.format == "csv") {
            buf << "name,measured,tolerance,pass\n";
            for (const CheckResult& r : results)
                buf << r.name << ',' << format_double(r.measured) << ','
                    << format_double(r.tolerance) << ',' << (r.pass ? 1 : 0)
                    << '\n';
        } else {
            nlohmann::json j = nlohmann::json::array();
            for (const CheckResult& r : results)
                j.push_back({{"name", r.name},
                             {"measured", r.measured},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
            buf << j.dump(1) << '\n';
        }
        std::ofstream out(c.out_path, std::ios::binary);
        out << buf.str();
        out.flush();
        if (!out) {
            std::cerr << "error: cannot write report file: " << c.out_path
                      << '\n';
            return 3;
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "Exact one- and two-photon scattering off a two-level impurity in a "
        "1D waveguide"};
    app.require_subcommand(1);

    Common cs, cw, cf, cm, cv;
    double w_de = 0.0, w_delta = 0.0;
    double f_de = 0.0;
    double m_de = 0.0, m_delta = 0.0;
    double cap = 1e300;
    unsigned long long seed = 20260825ull;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "one-photon transmission/reflection spectrum");
    add_common(spectrum, cs, "-5:5:201", "momentum grid min:max:points");

    CLI::App* wavef = app.add_subcommand(
        "wavefunctions",
        "two-photon out-state profiles |t2|^2, |r2|^2, |rt|^2");
    add_common(wavef, cw, "-10:10:401",
               "dimensionless coordinate grid, gamma x / 2");
    wavef->add_option("--dE", w_de,
                      "pair energy detuning (E - 2 omega) in units of gamma")
        ->capture_default_str();
    wavef->add_option("--delta", w_delta,
                      "relative momentum in units of gamma")
        ->capture_default_str();

    CLI::App* fluor = app.add_subcommand(
        "fluorescence", "background fluorescence surface |(gamma/2) B|^2");
    add_common(fluor, cf, "-4:4:81",
               "relative momentum grid in units of gamma/2, both axes");
    fluor->add_option("--dE", f_de,
                      "pair energy detuning in units of gamma/2")
        ->capture_default_str();

    CLI::App* mom = app.add_subcommand(
        "momentum", "sector-resolved momentum-space matrix elements");
    add_common(mom, cm, "-4:4:161",
               "outgoing relative momentum grid in units of gamma/2");
    mom->add_option("--dE", m_de, "pair energy detuning in units of gamma/2")
        ->capture_default_str();
    mom->add_option("--delta", m_delta,
                    "incoming relative momentum in units of gamma/2")
        ->capture_default_str();

    CLI::App* verify =
        app.add_subcommand("verify", "run the full invariant check suite");
    verify->add_option("--omega", cv.omega, "emitter transition energy")
        ->capture_default_str();
    verify->add_option("--gamma", cv.gamma, "decay rate into the guided mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--out", cv.out_path, "machine-readable report file");
    cv.format = "json";
    verify->add_option("--format", cv.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    verify
        ->add_option("--tolerance-cap", cap,
                     "clamp every check tolerance to at most this value")
        ->capture_default_str();
    verify->add_option("--seed", seed, "seed for the randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(cs);
        if (wavef->parsed()) return run_wavefunctions(cw, w_de, w_delta);
        if (fluor->parsed()) return run_fluorescence(cf, f_de);
        if (mom->parsed()) return run_momentum(cm, m_de, m_delta);
        if (verify->parsed()) return run_verify(cv, cap, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace wqed
