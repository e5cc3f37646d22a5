#include "hermitrig/eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hermitrig/trig_cycle.hpp"

namespace hermitrig {

double evaluate(const HermiteTrigPoly& poly, double t, int order_m) {
    if (order_m < 0) {
        throw std::invalid_argument("evaluate: order must be >= 0");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    double tr = std::fmod(t, two_pi);
    if (tr < 0.0) {
        tr += two_pi;
    }

    const TrigDerivFactors f = trig_deriv_factors(order_m);
    double sum = 0.0;
    for (const auto& [omega, a] : poly.cos_coeffs) {
        const double wt = static_cast<double>(omega) * tr;
        const double wm = int_pow(static_cast<double>(omega), order_m);
        sum += a * wm * (f.cos_from_cos * std::cos(wt) + f.sin_from_cos * std::sin(wt));
    }
    for (const auto& [omega, b] : poly.sin_coeffs) {
        const double wt = static_cast<double>(omega) * tr;
        const double wm = int_pow(static_cast<double>(omega), order_m);
        sum += b * wm * (f.cos_from_sin * std::cos(wt) + f.sin_from_sin * std::sin(wt));
    }
    if (order_m == 0) {
        sum += poly.const_term;
    }
    if (order_m < static_cast<int>(poly.mean_terms.size())) {
        sum += poly.mean_terms[static_cast<std::size_t>(order_m)];
    }
    return sum;
}

std::vector<double> evaluate_many(const HermiteTrigPoly& poly, const std::vector<double>& ts,
                                  int order_m) {
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        out.push_back(evaluate(poly, t, order_m));
    }
    return out;
}

}  // namespace hermitrig
