#pragma once

#include <map>
#include <vector>

#include "hermitrig/alias.hpp"
#include "hermitrig/grid.hpp"
#include "hermitrig/spectral.hpp"

namespace hermitrig {

// Highest derivative order handled; double precision degrades past this.
inline constexpr int kMaxDerivativeOrder = 8;

enum class Family { cosine, sine };
enum class BuildMode { strict_centered, paper_H_terms };

// The interpolant: a trigonometric polynomial over the extended frequency
// set plus one mean constant per derivative order.
//
// Evaluating derivative order m adds mean_terms[m]; these constants are the
// grid means of the derivative rows and make the order-m interpolation
// conditions hold for non-centered data.  mean_terms[0] is always 0 (the
// function's own mean lives in const_term) and all entries are 0 when built
// in strict_centered mode.
struct HermiteTrigPoly {
    GridSpec grid;
    int p = 0;
    double const_term = 0.0;              // a_0 / 2
    std::map<int, double> cos_coeffs;     // frequency -> coefficient
    std::map<int, double> sin_coeffs;     // frequency -> coefficient
    std::vector<double> mean_terms;       // p + 1 entries
};

// One (p+1) x (p+1) per-harmonic system.  Row m enforces the order-m
// interpolation condition for base harmonic k; columns follow freq_order.
struct HarmonicSystem {
    int base_k = 0;
    Family family = Family::cosine;
    int size = 0;                         // p + 1
    std::vector<double> matrix;           // row-major size x size
    std::vector<double> rhs;              // size
    std::vector<FrequencyTag> freq_order;
};

// The p+1 frequencies coupled to base harmonic k, ascending:
//   odd  p = 2q-1:  {k} + {iN-k, iN+k : i = 1..q-1} + {qN-k}
//   even p = 2q:    {k} + {iN-k, iN+k : i = 1..q}
// p = 0 is the degenerate single-frequency case {k}.
std::vector<FrequencyTag> frequency_set(int p, int N, int k);

// Assembles the per-harmonic system from the aliasing sign rule.  With
// (sc, ss) = alias_sign for column frequency w, the entry in row m is
//   cosine family:  m even: (-1)^(m/2) w^m sc,   m odd: -(-1)^((m-1)/2) w^m ss
//   sine family:    m even: (-1)^(m/2) w^m ss,   m odd:  (-1)^((m-1)/2) w^m sc
// and the right-hand side is A_{m,k} when (cosine, m even) or (sine, m odd),
// otherwise B_{m,k}.  layers[m] must hold the coefficients of the (centered)
// order-m row.
HarmonicSystem assemble_system(const GridSpec& grid, int p, int k, Family family,
                               const std::vector<FourierLayer>& layers);

// Solves one harmonic system.  Rows are equilibrated (row m carries entries
// of size w^m), the scaling is removed from the solution, and the result is
// refined until ||M x - rhs||_inf <= 1e-9 (1 + ||rhs||_inf); failing that, or
// on a singular / numerically unusable matrix, throws std::runtime_error
// naming k and the family.
std::vector<double> solve_harmonic(const HarmonicSystem& system);

// Infinity-norm condition estimate of the equilibrated system matrix.
double condition_estimate(const HarmonicSystem& system);

// Full construction: centers derivative rows, transforms every row, solves
// the 2n per-harmonic systems and scatters the solutions.
//
// strict_centered demands every derivative row mean satisfy
// |mu_m| <= 1e-10 (1 + max|row_m|) and returns zero mean_terms;
// paper_H_terms accepts any rows, centers them internally and returns
// mean_terms = (0, mu_1, ..., mu_p).
HermiteTrigPoly build_hermite(const HermiteSamples& samples,
                              BuildMode mode = BuildMode::paper_H_terms);

// Closed-form fast paths for p = 1 and p = 2 (both grid families).  Layers
// must be the transforms of centered rows, and the outputs agree with the
// generic solver to rounding level.
HermiteTrigPoly closed_form_p1(const std::vector<FourierLayer>& layers, const GridSpec& grid);
HermiteTrigPoly closed_form_p2(const std::vector<FourierLayer>& layers, const GridSpec& grid);

}  // namespace hermitrig
