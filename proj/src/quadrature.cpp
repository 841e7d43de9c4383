#include "wqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace wqed {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae).
constexpr double XGK[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double WGK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478541,
    0.20443294007529889, 0.20948214108472783};
constexpr double WG[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346939};

struct PanelEstimate {
    complexd value;
    double error;
};

PanelEstimate kronrod15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    complexd fc = f(c);
    complexd kron = WGK[7] * fc;
    complexd gauss = WG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const complexd lo = f(c - h * XGK[j]);
        const complexd hi = f(c + h * XGK[j]);
        kron += WGK[j] * (lo + hi);
        if (j % 2 == 1) gauss += WG[j / 2] * (lo + hi);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

struct Panel {
    double a, b;
    complexd value;
    double error;
    int depth;
};

struct WorseError {
    bool operator()(const Panel& l, const Panel& r) const {
        return l.error < r.error;
    }
};

complexd integrate_finite(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec) {
    std::priority_queue<Panel, std::vector<Panel>, WorseError> heap;
    PanelEstimate first = kronrod15(f, a, b);
    heap.push({a, b, first.value, first.error, 0});
    complexd total = first.value;
    double total_err = first.error;
    std::size_t evals = 1;
    const std::size_t panel_limit = 200000;

    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        const Panel worst = heap.top();
        if (worst.depth >= spec.max_depth)
            throw std::runtime_error("integrate: panel depth limit reached");
        if (++evals > panel_limit)
            throw std::runtime_error("integrate: panel budget exhausted");
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        PanelEstimate left = kronrod15(f, worst.a, mid);
        PanelEstimate right = kronrod15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.value, left.error, worst.depth + 1});
        heap.push({mid, worst.b, right.value, right.error, worst.depth + 1});
    }
    return total;
}

}  // namespace

complexd integrate(const Integrand& f, double a, double b,
                   const QuadratureSpec& spec) {
    if (a == b) return {0.0, 0.0};
    if (a > b) return -integrate(f, b, a, spec);

    constexpr double half_pi = std::numbers::pi / 2.0;
    const bool lo_inf = std::isinf(a);
    const bool hi_inf = std::isinf(b);
    if (lo_inf && hi_inf) {
        auto g = [&f](double t) {
            const double s = 1.0 / std::cos(t);
            return f(std::tan(t)) * (s * s);
        };
        return integrate_finite(g, -half_pi, half_pi, spec);
    }
    if (hi_inf) {
        auto g = [&f, a](double t) {
            const double s = 1.0 / std::cos(t);
            return f(a + std::tan(t)) * (s * s);
        };
        return integrate_finite(g, 0.0, half_pi, spec);
    }
    if (lo_inf) {
        auto g = [&f, b](double t) {
            const double s = 1.0 / std::cos(t);
            return f(b - std::tan(t)) * (s * s);
        };
        return integrate_finite(g, 0.0, half_pi, spec);
    }
    return integrate_finite(f, a, b, spec);
}

complexd pv_integrate(const Integrand& f, double pole, double a, double b,
                      const QuadratureSpec& spec) {
    if (!(a < pole && pole < b))
        throw std::invalid_argument("pv_integrate: pole must lie inside (a,b)");

    QuadratureSpec inner = spec;
    inner.abs_tol = 0.1 * spec.abs_tol;
    inner.rel_tol = 0.1 * spec.rel_tol;

    const double eps0 = 0.25 * std::min(pole - a, b - pole);
    auto excised = [&](double eps) {
        return integrate(f, a, pole - eps, inner) +
               integrate(f, pole + eps, b, inner);
    };

    // I(eps) = I + c1 eps + c3 eps^3 + ...; halving eps and eliminating the
    // odd orders in turn.
    constexpr int max_level = 24;
    std::vector<std::vector<complexd>> table;
    complexd prev{};
    for (int j = 0; j < max_level; ++j) {
        std::vector<complexd> row(static_cast<std::size_t>(j) + 1);
        row[0] = excised(eps0 * std::ldexp(1.0, -j));
        for (int m = 1; m <= j; ++m) {
            const double w = std::ldexp(1.0, 2 * m - 1);  // 2^(2m-1)
            row[m] = (w * row[m - 1] - table[j - 1][m - 1]) / (w - 1.0);
        }
        const complexd diag = row[j];
        if (j >= 2 &&
            std::abs(diag - prev) <=
                std::max(spec.abs_tol, spec.rel_tol * std::abs(diag)))
            return diag;
        prev = diag;
        table.push_back(std::move(row));
    }
    throw std::runtime_error(
        "pv_integrate: excision sequence did not converge (pole order > 1?)");
}

complexd pv_integrate_line(const Integrand& f, std::vector<double> poles,
                           const QuadratureSpec& spec) {
    if (poles.empty())
        return integrate(f, -std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity(), spec);
    std::sort(poles.begin(), poles.end());
    for (std::size_t i = 0; i + 1 < poles.size(); ++i)
        if (!(poles[i] < poles[i + 1]))
            throw std::invalid_argument("pv_integrate_line: coincident poles");

    const double inf = std::numeric_limits<double>::infinity();
    complexd total{};
    double left_edge = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const double margin_default = 1.0 + 0.5 * std::abs(poles[i]);
        const double lo = (i == 0) ? poles[i] - margin_default
                                   : 0.5 * (poles[i - 1] + poles[i]);
        const double hi = (i + 1 == poles.size())
                              ? poles[i] + margin_default
                              : 0.5 * (poles[i] + poles[i + 1]);
        if (i == 0)
            total += integrate(f, -inf, lo, spec);
        else if (lo > left_edge)
            total += integrate(f, left_edge, lo, spec);
        total += pv_integrate(f, poles[i], lo, hi, spec);
        left_edge = hi;
    }
    total += integrate(f, left_edge, inf, spec);
    return total;
}

complexd integrate_alternating(const Integrand& f, double a, double h,
                               const QuadratureSpec& spec) {
    if (!(h > 0.0))
        throw std::invalid_argument("integrate_alternating: period must be positive");
    QuadratureSpec inner = spec;
    inner.abs_tol = 0.01 * spec.abs_tol;
    inner.rel_tol = 0.1 * spec.rel_tol;

    constexpr int max_terms = 800;
    constexpr int depth = 30;
    std::vector<complexd> sums;
    sums.reserve(max_terms);
    complexd prev_est{};
    int stable = 0;
    for (int m = 0; m < max_terms; ++m) {
        const complexd term =
            integrate(f, a + m * h, a + (m + 1) * h, inner);
        sums.push_back(m ? sums.back() + term : term);

        const int d = std::min<int>(depth, static_cast<int>(sums.size()) - 1);
        std::vector<complexd> w(sums.end() - (d + 1), sums.end());
        for (int lev = 0; lev < d; ++lev)
            for (int i = 0; i + lev + 1 < static_cast<int>(w.size()); ++i)
                w[i] = 0.5 * (w[i] + w[i + 1]);
        const complexd est = w[0];

        if (m >= 4) {
            const double tol =
                std::max(spec.abs_tol, spec.rel_tol * std::abs(est));
            if (std::abs(est - prev_est) <= tol) {
                if (++stable >= 2) return est;
            } else {
                stable = 0;
            }
        }
        prev_est = est;
    }
    throw std::runtime_error("integrate_alternating: series did not settle");
}

}  // namespace wqed
