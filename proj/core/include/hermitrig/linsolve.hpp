#pragma once

#include <vector>

namespace hermitrig {

// Small dense linear algebra used by the per-harmonic solves and the
// collocation reference.  Matrices are row-major n x n in a flat vector.

// LU factorization with partial pivoting, in place.  piv[k] is the row
// swapped into position k.  Returns false on an exactly zero pivot.
bool lu_factor(std::vector<double>& a, int n, std::vector<int>& piv);

// Solves L U x = P b for a factorization from lu_factor; b is overwritten
// with the solution.
void lu_solve_inplace(const std::vector<double>& lu, int n, const std::vector<int>& piv,
                      std::vector<double>& b);

// Solves a x = b.  Rows and columns are equilibrated to unit infinity norm
// before factoring (the original a, b are kept for residual work), and the
// solution is polished with iterative refinement using long-double
// residuals, so the returned x satisfies the original system to close to
// rounding level whenever the system is numerically usable.
// Throws std::runtime_error on a zero pivot.
// If cond_out is non-null it receives an infinity-norm condition estimate of
// the equilibrated matrix.
std::vector<double> solve_dense(const std::vector<double>& a, int n,
                                const std::vector<double>& b, double* cond_out = nullptr);

// Infinity-norm condition number computed from the explicit inverse; meant
// for the small systems handled here.
double condition_inf(const std::vector<double>& a, int n);

// Condition number of a after the same row/column equilibration solve_dense
// applies; infinity if the matrix is singular.
double equilibrated_condition_inf(const std::vector<double>& a, int n);

// max_i |(a x - b)_i| accumulated in long double.
double residual_inf(const std::vector<double>& a, int n, const std::vector<double>& x,
                    const std::vector<double>& b);

}  // namespace hermitrig
