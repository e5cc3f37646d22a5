#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hermitrig/spectral.hpp"

namespace hermitrig {

// Periodic analytic functions with closed-form derivatives of every order,
// used by the convergence command and the test suites.
struct AnalyticFunction {
    std::string name;
    // deriv(t, m) is the m-th derivative at t; m = 0 gives the value.
    std::function<double(double, int)> deriv;
};

// Built-in set: exp_sin = exp(sin t), inv_two_plus_cos = 1/(2 + cos t),
// cos3_plus_sin = cos 3t + sin t.
const std::vector<AnalyticFunction>& builtin_functions();

// nullptr when the name is unknown.
const AnalyticFunction* find_function(const std::string& name);

// Samples the function and its derivatives up to order p at the grid nodes.
HermiteSamples sample_function(const GridSpec& grid, int p, const AnalyticFunction& fn);

}  // namespace hermitrig
