#include "hermitrig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hermitrig/linsolve.hpp"
#include "hermitrig/trig_cycle.hpp"

namespace hermitrig {

HermiteTrigPoly collocation_solve(const HermiteSamples& samples, BuildMode mode) {
    validate(samples);
    if (samples.p > kMaxDerivativeOrder) {
        throw std::invalid_argument("collocation_solve: p = " + std::to_string(samples.p) +
                                    " is not supported (max " +
                                    std::to_string(kMaxDerivativeOrder) + ")");
    }
    if (mode == BuildMode::strict_centered) {
        for (int m = 1; m <= samples.p; ++m) {
            double row_max = 0.0;
            double sum = 0.0;
            for (double v : samples.rows[static_cast<std::size_t>(m)]) {
                row_max = std::max(row_max, std::abs(v));
                sum += v;
            }
            const double mu = sum / static_cast<double>(samples.grid.N);
            if (std::abs(mu) > 1e-10 * (1.0 + row_max)) {
                throw std::invalid_argument(
                    "collocation_solve: derivative row " + std::to_string(m) +
                    " has grid mean " + std::to_string(mu) +
                    "; strict_centered mode requires centered derivative rows");
            }
        }
    }

    const GridSpec& grid = samples.grid;
    const int p = samples.p;
    const int per_k = p + 1;
    const int n_cos = grid.n * per_k;

    // Unknown layout: [const | a_w for k = 1..n | b_w likewise | mu_1..mu_p].
    std::vector<int> cos_freqs;
    cos_freqs.reserve(static_cast<std::size_t>(n_cos));
    for (int k = 1; k <= grid.n; ++k) {
        for (const FrequencyTag& tag : frequency_set(p, grid.N, k)) {
            cos_freqs.push_back(tag.omega);
        }
    }
    const int dim = 1 + 2 * n_cos + p;
    if (dim != grid.N * (p + 1)) {
        throw std::logic_error("collocation_solve: unknown count mismatch");
    }

    std::vector<double> matrix(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                               0.0);
    std::vector<double> rhs(static_cast<std::size_t>(dim), 0.0);
    auto at = [&](int r, int c) -> double& {
        return matrix[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) +
                      static_cast<std::size_t>(c)];
    };

    for (int m = 0; m <= p; ++m) {
        const TrigDerivFactors f = trig_deriv_factors(m);
        for (int j = 0; j < grid.N; ++j) {
            const int row = m * grid.N + j;
            const double t = node_at(grid, j);
            if (m == 0) {
                at(row, 0) = 1.0;
            }
            for (int c = 0; c < n_cos; ++c) {
                const double w = static_cast<double>(cos_freqs[static_cast<std::size_t>(c)]);
                const double wm = int_pow(w, m);
                const double cwt = std::cos(w * t);
                const double swt = std::sin(w * t);
                at(row, 1 + c) = wm * (f.cos_from_cos * cwt + f.sin_from_cos * swt);
                at(row, 1 + n_cos + c) = wm * (f.cos_from_sin * cwt + f.sin_from_sin * swt);
            }
            if (m >= 1) {
                at(row, 1 + 2 * n_cos + (m - 1)) = 1.0;
            }
            rhs[static_cast<std::size_t>(row)] =
                samples.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
        }
    }

    std::vector<double> solution;
    try {
        solution = solve_dense(matrix, dim, rhs);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(std::string("collocation_solve: dense system is singular (") +
                                 err.what() + ")");
    }

    HermiteTrigPoly poly;
    poly.grid = grid;
    poly.p = p;
    poly.const_term = solution[0];
    for (int c = 0; c < n_cos; ++c) {
        const int w = cos_freqs[static_cast<std::size_t>(c)];
        poly.cos_coeffs[w] = solution[static_cast<std::size_t>(1 + c)];
        poly.sin_coeffs[w] = solution[static_cast<std::size_t>(1 + n_cos + c)];
    }
    poly.mean_terms.assign(static_cast<std::size_t>(p) + 1, 0.0);
    if (mode == BuildMode::paper_H_terms) {
        for (int m = 1; m <= p; ++m) {
            poly.mean_terms[static_cast<std::size_t>(m)] =
                solution[static_cast<std::size_t>(2 * n_cos + m)];
        }
    }
    return poly;
}

}  // namespace hermitrig
