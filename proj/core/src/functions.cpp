#include "hermitrig/functions.hpp"

#include <cmath>
#include <stdexcept>

#include "hermitrig/trig_cycle.hpp"

namespace hermitrig {

namespace {

// Taylor coefficients u_r = f^(r)(t)/r! of sin and cos about t.
std::vector<double> sin_series(double t, int order) {
    std::vector<double> u(static_cast<std::size_t>(order) + 1);
    double factorial = 1.0;
    for (int r = 0; r <= order; ++r) {
        if (r > 0) {
            factorial *= r;
        }
        const TrigDerivFactors f = trig_deriv_factors(r);
        u[static_cast<std::size_t>(r)] =
            (f.cos_from_sin * std::cos(t) + f.sin_from_sin * std::sin(t)) / factorial;
    }
    return u;
}

std::vector<double> cos_series(double t, int order) {
    std::vector<double> u(static_cast<std::size_t>(order) + 1);
    double factorial = 1.0;
    for (int r = 0; r <= order; ++r) {
        if (r > 0) {
            factorial *= r;
        }
        const TrigDerivFactors f = trig_deriv_factors(r);
        u[static_cast<std::size_t>(r)] =
            (f.cos_from_cos * std::cos(t) + f.sin_from_cos * std::sin(t)) / factorial;
    }
    return u;
}

double factorial_of(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) {
        f *= i;
    }
    return f;
}

// exp(sin t): Taylor composition e = exp(u) with
//   e_0 = exp(u_0),  e_r = (1/r) sum_{s=1..r} s u_s e_{r-s}.
double exp_sin_deriv(double t, int m) {
    const std::vector<double> u = sin_series(t, m);
    std::vector<double> e(static_cast<std::size_t>(m) + 1);
    e[0] = std::exp(u[0]);
    for (int r = 1; r <= m; ++r) {
        double acc = 0.0;
        for (int s = 1; s <= r; ++s) {
            acc += s * u[static_cast<std::size_t>(s)] * e[static_cast<std::size_t>(r - s)];
        }
        e[static_cast<std::size_t>(r)] = acc / r;
    }
    return e[static_cast<std::size_t>(m)] * factorial_of(m);
}

// 1/(2 + cos t): reciprocal series v = 1/u with
//   v_0 = 1/u_0,  v_r = -(1/u_0) sum_{s=1..r} u_s v_{r-s}.
double inv_two_plus_cos_deriv(double t, int m) {
    std::vector<double> u = cos_series(t, m);
    u[0] += 2.0;
    std::vector<double> v(static_cast<std::size_t>(m) + 1);
    v[0] = 1.0 / u[0];
    for (int r = 1; r <= m; ++r) {
        double acc = 0.0;
        for (int s = 1; s <= r; ++s) {
            acc += u[static_cast<std::size_t>(s)] * v[static_cast<std::size_t>(r - s)];
        }
        v[static_cast<std::size_t>(r)] = -acc / u[0];
    }
    return v[static_cast<std::size_t>(m)] * factorial_of(m);
}

double cos3_plus_sin_deriv(double t, int m) {
    const TrigDerivFactors f = trig_deriv_factors(m);
    const double three_m = int_pow(3.0, m);
    return three_m * (f.cos_from_cos * std::cos(3.0 * t) + f.sin_from_cos * std::sin(3.0 * t)) +
           (f.cos_from_sin * std::cos(t) + f.sin_from_sin * std::sin(t));
}

}  // namespace

const std::vector<AnalyticFunction>& builtin_functions() {
    static const std::vector<AnalyticFunction> fns = {
        {"exp_sin", exp_sin_deriv},
        {"inv_two_plus_cos", inv_two_plus_cos_deriv},
        {"cos3_plus_sin", cos3_plus_sin_deriv},
    };
    return fns;
}

const AnalyticFunction* find_function(const std::string& name) {
    for (const AnalyticFunction& fn : builtin_functions()) {
        if (fn.name == name) {
            return &fn;
        }
    }
    return nullptr;
}

HermiteSamples sample_function(const GridSpec& grid, int p, const AnalyticFunction& fn) {
    if (p < 0) {
        throw std::invalid_argument("sample_function: p must be >= 0");
    }
    HermiteSamples samples;
    samples.grid = grid;
    samples.p = p;
    samples.rows.assign(static_cast<std::size_t>(p) + 1,
                        std::vector<double>(static_cast<std::size_t>(grid.N), 0.0));
    for (int m = 0; m <= p; ++m) {
        for (int j = 0; j < grid.N; ++j) {
            samples.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
                fn.deriv(node_at(grid, j), m);
        }
    }
    return samples;
}

}  // namespace hermitrig
