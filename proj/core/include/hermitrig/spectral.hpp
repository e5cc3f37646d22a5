#pragma once

#include <vector>

#include "hermitrig/grid.hpp"

namespace hermitrig {

// Sampled values of a function and its derivatives up to order p at the grid
// nodes.  rows[m][j] is the m-th derivative at node j; rows[0] is the
// function itself.  p = 0 degenerates to plain trigonometric interpolation.
struct HermiteSamples {
    GridSpec grid;
    int p = 0;
    std::vector<std::vector<double>> rows;  // (p+1) x N
};

// Throws std::invalid_argument if the row count or any row length does not
// match (p, N), or p < 0.
void validate(const HermiteSamples& samples);

// Coefficients of the trigonometric polynomial
//   A0/2 + sum_{k=1..n} (A[k-1] cos kt + B[k-1] sin kt)
// that interpolates one sample row at the grid nodes.
struct FourierLayer {
    int order_m = 0;
    double A0 = 0.0;
    std::vector<double> A;  // k = 1..n
    std::vector<double> B;  // k = 1..n
};

// Direct-summation transform:
//   A0 = (2/N) sum_j row[j],  A_k = (2/N) sum_j row[j] cos(k t_j),
//   B_k = (2/N) sum_j row[j] sin(k t_j).
// O(N^2); N is small here and an FFT would be a drop-in behind this contract.
FourierLayer trig_interp_coeffs(const std::vector<double>& row, const GridSpec& grid,
                                int order_m = 0);

// Grid means of every row and the rows with those means removed.  Row 0 is
// never centered (its mean is carried by the constant term of the
// interpolant); rows m >= 1 are returned mean-free.
struct MeanReport {
    std::vector<double> means;                       // mu_0..mu_p
    std::vector<std::vector<double>> centered_rows;  // same shape as input
};

MeanReport center_rows(const HermiteSamples& samples);

}  // namespace hermitrig
