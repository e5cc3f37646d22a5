#pragma once

namespace hermitrig {

// Derivative cycle of the basis functions:
//   d^m/dt^m cos(wt) = w^m * (cc * cos(wt) + cs * sin(wt))
//   d^m/dt^m sin(wt) = w^m * (sc * cos(wt) + ss * sin(wt))
// with the factors repeating with period 4 in m.
struct TrigDerivFactors {
    double cos_from_cos;  // cc
    double sin_from_cos;  // cs
    double cos_from_sin;  // sc
    double sin_from_sin;  // ss
};

constexpr TrigDerivFactors trig_deriv_factors(int order_m) {
    switch (order_m & 3) {
        case 0:
            return {1.0, 0.0, 0.0, 1.0};
        case 1:
            return {0.0, -1.0, 1.0, 0.0};
        case 2:
            return {-1.0, 0.0, 0.0, -1.0};
        default:
            return {0.0, 1.0, -1.0, 0.0};
    }
}

// w^m by repeated multiplication; exact for the small integer powers used
// here.
constexpr double int_pow(double w, int m) {
    double r = 1.0;
    for (int i = 0; i < m; ++i) {
        r *= w;
    }
    return r;
}

}  // namespace hermitrig
