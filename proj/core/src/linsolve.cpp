#include "hermitrig/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace hermitrig {

namespace {

inline std::size_t idx(int i, int j, int n) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j);
}

struct Equilibration {
    std::vector<double> scaled;     // R A C with unit infinity-norm rows/columns
    std::vector<double> row_scale;  // R (diagonal)
    std::vector<double> col_scale;  // C (diagonal)
};

// Scales rows, then columns, to unit infinity norm.  Throws on an all-zero
// row or column (structurally singular).
Equilibration equilibrate(const std::vector<double>& a, int n) {
    Equilibration eq;
    eq.row_scale.assign(static_cast<std::size_t>(n), 0.0);
    eq.col_scale.assign(static_cast<std::size_t>(n), 0.0);
    eq.scaled.resize(a.size());
    for (int i = 0; i < n; ++i) {
        double m = 0.0;
        for (int j = 0; j < n; ++j) {
            m = std::max(m, std::abs(a[idx(i, j, n)]));
        }
        if (m == 0.0) {
            throw std::runtime_error("zero row, matrix is singular");
        }
        eq.row_scale[static_cast<std::size_t>(i)] = 1.0 / m;
        for (int j = 0; j < n; ++j) {
            eq.scaled[idx(i, j, n)] = a[idx(i, j, n)] / m;
        }
    }
    for (int j = 0; j < n; ++j) {
        double m = 0.0;
        for (int i = 0; i < n; ++i) {
            m = std::max(m, std::abs(eq.scaled[idx(i, j, n)]));
        }
        if (m == 0.0) {
            throw std::runtime_error("zero column, matrix is singular");
        }
        eq.col_scale[static_cast<std::size_t>(j)] = 1.0 / m;
        for (int i = 0; i < n; ++i) {
            eq.scaled[idx(i, j, n)] /= m;
        }
    }
    return eq;
}

}  // namespace

bool lu_factor(std::vector<double>& a, int n, std::vector<int>& piv) {
    piv.assign(static_cast<std::size_t>(n), 0);
    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double best = std::abs(a[idx(col, col, n)]);
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(a[idx(r, col, n)]);
            if (cand > best) {
                best = cand;
                pivot_row = r;
            }
        }
        piv[static_cast<std::size_t>(col)] = pivot_row;
        if (best == 0.0) {
            return false;
        }
        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a[idx(col, j, n)], a[idx(pivot_row, j, n)]);
            }
        }
        const double inv_pivot = 1.0 / a[idx(col, col, n)];
        for (int r = col + 1; r < n; ++r) {
            const double factor = a[idx(r, col, n)] * inv_pivot;
            a[idx(r, col, n)] = factor;
            if (factor != 0.0) {
                for (int j = col + 1; j < n; ++j) {
                    a[idx(r, j, n)] -= factor * a[idx(col, j, n)];
                }
            }
        }
    }
    return true;
}

void lu_solve_inplace(const std::vector<double>& lu, int n, const std::vector<int>& piv,
                      std::vector<double>& b) {
    for (int i = 0; i < n; ++i) {
        const int p = piv[static_cast<std::size_t>(i)];
        if (p != i) {
            std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(p)]);
        }
        double sum = b[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            sum -= lu[idx(i, j, n)] * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(i)] = sum;
    }
    for (int i = n - 1; i >= 0; --i) {
        double sum = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            sum -= lu[idx(i, j, n)] * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(i)] = sum / lu[idx(i, i, n)];
    }
}

std::vector<double> solve_dense(const std::vector<double>& a, int n,
                                const std::vector<double>& b, double* cond_out) {
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n) ||
        b.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("solve_dense: dimension mismatch");
    }
    Equilibration eq = equilibrate(a, n);
    std::vector<double> lu = eq.scaled;
    std::vector<int> piv;
    if (!lu_factor(lu, n, piv)) {
        throw std::runtime_error("solve_dense: zero pivot, matrix is singular");
    }
    if (cond_out != nullptr) {
        *cond_out = condition_inf(eq.scaled, n);
    }

    // (R A C) y = R b,  x = C y.
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> work(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        work[static_cast<std::size_t>(i)] =
            b[static_cast<std::size_t>(i)] * eq.row_scale[static_cast<std::size_t>(i)];
    }
    lu_solve_inplace(lu, n, piv, work);
    for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(j)] =
            work[static_cast<std::size_t>(j)] * eq.col_scale[static_cast<std::size_t>(j)];
    }

    // Iterative refinement against the original system, with the residual
    // accumulated in long double so the correction stays meaningful when the
    // entries span many orders of magnitude.
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < n; ++i) {
            long double acc = static_cast<long double>(b[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                acc -= static_cast<long double>(a[idx(i, j, n)]) *
                       static_cast<long double>(x[static_cast<std::size_t>(j)]);
            }
            work[static_cast<std::size_t>(i)] =
                static_cast<double>(acc) * eq.row_scale[static_cast<std::size_t>(i)];
        }
        lu_solve_inplace(lu, n, piv, work);
        for (int j = 0; j < n; ++j) {
            x[static_cast<std::size_t>(j)] +=
                work[static_cast<std::size_t>(j)] * eq.col_scale[static_cast<std::size_t>(j)];
        }
    }
    return x;
}

double condition_inf(const std::vector<double>& a, int n) {
    std::vector<double> lu = a;
    std::vector<int> piv;
    if (!lu_factor(lu, n, piv)) {
        return std::numeric_limits<double>::infinity();
    }
    double norm_a = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            row += std::abs(a[idx(i, j, n)]);
        }
        norm_a = std::max(norm_a, row);
    }
    // Infinity norm of the inverse from its explicit columns.
    std::vector<double> inv_row_sum(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        lu_solve_inplace(lu, n, piv, e);
        for (int i = 0; i < n; ++i) {
            inv_row_sum[static_cast<std::size_t>(i)] += std::abs(e[static_cast<std::size_t>(i)]);
        }
    }
    double norm_inv = 0.0;
    for (double s : inv_row_sum) {
        norm_inv = std::max(norm_inv, s);
    }
    return norm_a * norm_inv;
}

double equilibrated_condition_inf(const std::vector<double>& a, int n) {
    try {
        return condition_inf(equilibrate(a, n).scaled, n);
    } catch (const std::runtime_error&) {
        return std::numeric_limits<double>::infinity();
    }
}

double residual_inf(const std::vector<double>& a, int n, const std::vector<double>& x,
                    const std::vector<double>& b) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        long double acc = static_cast<long double>(b[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            acc -= static_cast<long double>(a[idx(i, j, n)]) *
                   static_cast<long double>(x[static_cast<std::size_t>(j)]);
        }
        worst = std::max(worst, static_cast<double>(std::abs(acc)));
    }
    return worst;
}

}  // namespace hermitrig
