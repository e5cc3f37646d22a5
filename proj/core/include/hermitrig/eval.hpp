#pragma once

#include <vector>

#include "hermitrig/hermite.hpp"

namespace hermitrig {

// Order-m derivative of the interpolant at t:
//   sum_w [ a_w w^m cos(wt + m pi/2) + b_w w^m sin(wt + m pi/2) ]
//   + const_term if m = 0, + mean_terms[m] if m <= p.
// t is reduced mod 2*pi once before the summation.  Orders beyond p pick up
// no mean contribution.
double evaluate(const HermiteTrigPoly& poly, double t, int order_m = 0);

// Element-wise evaluate.
std::vector<double> evaluate_many(const HermiteTrigPoly& poly, const std::vector<double>& ts,
                                  int order_m = 0);

}  // namespace hermitrig
