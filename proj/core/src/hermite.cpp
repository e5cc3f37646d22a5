#include "hermitrig/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hermitrig/linsolve.hpp"
#include "hermitrig/trig_cycle.hpp"

namespace hermitrig {

namespace {

constexpr double kMaxHarmonicCondition = 1e14;

std::string family_name(Family family) {
    return family == Family::cosine ? "cosine" : "sine";
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

void check_layers(const std::vector<FourierLayer>& layers, const GridSpec& grid, int p) {
    if (layers.size() != static_cast<std::size_t>(p) + 1) {
        throw std::invalid_argument("expected " + std::to_string(p + 1) + " layers, got " +
                                    std::to_string(layers.size()));
    }
    for (const FourierLayer& layer : layers) {
        if (layer.A.size() != static_cast<std::size_t>(grid.n) ||
            layer.B.size() != static_cast<std::size_t>(grid.n)) {
            throw std::invalid_argument("layer size does not match grid n");
        }
    }
}

HermiteTrigPoly make_poly_shell(const GridSpec& grid, int p, double const_term) {
    HermiteTrigPoly poly;
    poly.grid = grid;
    poly.p = p;
    poly.const_term = const_term;
    poly.mean_terms.assign(static_cast<std::size_t>(p) + 1, 0.0);
    return poly;
}

}  // namespace

std::vector<FrequencyTag> frequency_set(int p, int N, int k) {
    if (N < 3 || N % 2 == 0) {
        throw std::invalid_argument("frequency_set: N must be odd and >= 3");
    }
    const int n = (N - 1) / 2;
    if (k < 1 || k > n) {
        throw std::invalid_argument("frequency_set: k must be in [1, n], got " +
                                    std::to_string(k));
    }
    if (p < 0) {
        throw std::invalid_argument("frequency_set: p must be >= 0");
    }
    std::vector<FrequencyTag> tags;
    tags.reserve(static_cast<std::size_t>(p) + 1);
    tags.push_back(make_frequency_tag(N, k, 0, Branch::base));
    if (p % 2 == 1) {
        const int q = (p + 1) / 2;
        for (int i = 1; i < q; ++i) {
            tags.push_back(make_frequency_tag(N, k, i, Branch::minus));
            tags.push_back(make_frequency_tag(N, k, i, Branch::plus));
        }
        tags.push_back(make_frequency_tag(N, k, q, Branch::minus));
    } else {
        const int q = p / 2;
        for (int i = 1; i <= q; ++i) {
            tags.push_back(make_frequency_tag(N, k, i, Branch::minus));
            tags.push_back(make_frequency_tag(N, k, i, Branch::plus));
        }
    }
    return tags;
}

HarmonicSystem assemble_system(const GridSpec& grid, int p, int k, Family family,
                               const std::vector<FourierLayer>& layers) {
    check_layers(layers, grid, p);

    HarmonicSystem sys;
    sys.base_k = k;
    sys.family = family;
    sys.size = p + 1;
    sys.freq_order = frequency_set(p, grid.N, k);
    sys.matrix.assign(static_cast<std::size_t>(sys.size) * static_cast<std::size_t>(sys.size),
                      0.0);
    sys.rhs.assign(static_cast<std::size_t>(sys.size), 0.0);

    for (int m = 0; m <= p; ++m) {
        const TrigDerivFactors f = trig_deriv_factors(m);
        for (int col = 0; col <= p; ++col) {
            const FrequencyTag& tag = sys.freq_order[static_cast<std::size_t>(col)];
            const AliasSign sign = alias_sign(grid.family, tag.block_i, tag.branch);
            const double wm = int_pow(static_cast<double>(tag.omega), m);
            // The order-m derivative of the column basis function aliases to
            // exactly one of cos(k t_j), sin(k t_j) at the nodes; the factor
            // for the other one is zero in every row.
            double entry;
            if (family == Family::cosine) {
                entry = wm * (f.cos_from_cos * sign.sigma_cos + f.sin_from_cos * sign.sigma_sin);
            } else {
                entry = wm * (f.cos_from_sin * sign.sigma_cos + f.sin_from_sin * sign.sigma_sin);
            }
            sys.matrix[static_cast<std::size_t>(m) * static_cast<std::size_t>(sys.size) +
                       static_cast<std::size_t>(col)] = entry;
        }
        const FourierLayer& layer = layers[static_cast<std::size_t>(m)];
        const bool rhs_is_A = (family == Family::cosine) == (m % 2 == 0);
        sys.rhs[static_cast<std::size_t>(m)] = rhs_is_A ? layer.A[static_cast<std::size_t>(k - 1)]
                                                        : layer.B[static_cast<std::size_t>(k - 1)];
    }
    return sys;
}

std::vector<double> solve_harmonic(const HarmonicSystem& system) {
    double cond = 0.0;
    std::vector<double> x;
    try {
        x = solve_dense(system.matrix, system.size, system.rhs, &cond);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error("solve_harmonic: singular system for k = " +
                                 std::to_string(system.base_k) + ", family " +
                                 family_name(system.family) + " (" + err.what() + ")");
    }
    if (!(cond < kMaxHarmonicCondition)) {
        throw std::runtime_error("solve_harmonic: system for k = " +
                                 std::to_string(system.base_k) + ", family " +
                                 family_name(system.family) +
                                 " is numerically unusable (condition estimate " + sci(cond) +
                                 ")");
    }
    double rhs_norm = 0.0;
    for (double v : system.rhs) {
        rhs_norm = std::max(rhs_norm, std::abs(v));
    }
    const double residual = residual_inf(system.matrix, system.size, x, system.rhs);
    if (!(residual <= 1e-9 * (1.0 + rhs_norm))) {
        throw std::runtime_error("solve_harmonic: residual " + sci(residual) +
                                 " exceeds the guarantee for k = " +
                                 std::to_string(system.base_k) + ", family " +
                                 family_name(system.family) +
                                 " (entries of size w^m leave no binary64 solution this sharp)");
    }
    return x;
}

double condition_estimate(const HarmonicSystem& system) {
    return equilibrated_condition_inf(system.matrix, system.size);
}

HermiteTrigPoly build_hermite(const HermiteSamples& samples, BuildMode mode) {
    validate(samples);
    if (samples.p > kMaxDerivativeOrder) {
        throw std::invalid_argument("build_hermite: p = " + std::to_string(samples.p) +
                                    " is not supported (max " +
                                    std::to_string(kMaxDerivativeOrder) + ")");
    }

    const MeanReport report = center_rows(samples);
    if (mode == BuildMode::strict_centered) {
        for (int m = 1; m <= samples.p; ++m) {
            double row_max = 0.0;
            for (double v : samples.rows[static_cast<std::size_t>(m)]) {
                row_max = std::max(row_max, std::abs(v));
            }
            const double mu = report.means[static_cast<std::size_t>(m)];
            if (std::abs(mu) > 1e-10 * (1.0 + row_max)) {
                throw std::invalid_argument(
                    "build_hermite: derivative row " + std::to_string(m) +
                    " has grid mean " + std::to_string(mu) +
                    "; strict_centered mode requires centered derivative rows");
            }
        }
    }

    std::vector<FourierLayer> layers;
    layers.reserve(static_cast<std::size_t>(samples.p) + 1);
    for (int m = 0; m <= samples.p; ++m) {
        layers.push_back(
            trig_interp_coeffs(report.centered_rows[static_cast<std::size_t>(m)],
                               samples.grid, m));
    }

    HermiteTrigPoly poly = make_poly_shell(samples.grid, samples.p, layers[0].A0 / 2.0);
    for (int k = 1; k <= samples.grid.n; ++k) {
        for (Family family : {Family::cosine, Family::sine}) {
            const HarmonicSystem sys = assemble_system(samples.grid, samples.p, k, family, layers);
            const std::vector<double> solution = solve_harmonic(sys);
            auto& target = (family == Family::cosine) ? poly.cos_coeffs : poly.sin_coeffs;
            for (int col = 0; col <= samples.p; ++col) {
                target[sys.freq_order[static_cast<std::size_t>(col)].omega] =
                    solution[static_cast<std::size_t>(col)];
            }
        }
    }

    if (mode == BuildMode::paper_H_terms) {
        for (int m = 1; m <= samples.p; ++m) {
            poly.mean_terms[static_cast<std::size_t>(m)] =
                report.means[static_cast<std::size_t>(m)];
        }
    }
    return poly;
}

HermiteTrigPoly closed_form_p1(const std::vector<FourierLayer>& layers, const GridSpec& grid) {
    check_layers(layers, grid, 1);
    const double N = static_cast<double>(grid.N);

    HermiteTrigPoly poly = make_poly_shell(grid, 1, layers[0].A0 / 2.0);
    for (int k = 1; k <= grid.n; ++k) {
        const std::size_t ix = static_cast<std::size_t>(k - 1);
        const double A0k = layers[0].A[ix];
        const double B0k = layers[0].B[ix];
        const double A1k = layers[1].A[ix];
        const double B1k = layers[1].B[ix];
        const double kk = static_cast<double>(k);

        const double a_k = ((N - kk) * A0k - B1k) / N;
        const double b_k = ((N - kk) * B0k + A1k) / N;
        double a_Nmk;
        double b_Nmk;
        if (grid.family == 0) {
            a_Nmk = (kk * A0k + B1k) / N;
            b_Nmk = (-kk * B0k + A1k) / N;
        } else {
            a_Nmk = -(kk * A0k + B1k) / N;
            b_Nmk = (kk * B0k - A1k) / N;
        }
        poly.cos_coeffs[k] = a_k;
        poly.cos_coeffs[grid.N - k] = a_Nmk;
        poly.sin_coeffs[k] = b_k;
        poly.sin_coeffs[grid.N - k] = b_Nmk;
    }
    return poly;
}

HermiteTrigPoly closed_form_p2(const std::vector<FourierLayer>& layers, const GridSpec& grid) {
    check_layers(layers, grid, 2);
    const double N = static_cast<double>(grid.N);
    const double NN = N * N;

    HermiteTrigPoly poly = make_poly_shell(grid, 2, layers[0].A0 / 2.0);
    for (int k = 1; k <= grid.n; ++k) {
        const std::size_t ix = static_cast<std::size_t>(k - 1);
        const double A0 = layers[0].A[ix];
        const double B0 = layers[0].B[ix];
        const double A1 = layers[1].A[ix];
        const double B1 = layers[1].B[ix];
        const double A2 = layers[2].A[ix];
        const double B2 = layers[2].B[ix];
        const double kk = static_cast<double>(k);

        const double a_k = (A0 * (NN - kk * kk) - 2.0 * kk * B1 + A2) / NN;
        const double b_k = (B0 * (NN - kk * kk) + 2.0 * kk * A1 + B2) / NN;
        double a_Nmk;
        double b_Nmk;
        double a_Npk;
        double b_Npk;
        if (grid.family == 0) {
            a_Nmk = (A0 * (kk * N + kk * kk) + B1 * (N + 2.0 * kk) - A2) / (2.0 * NN);
            b_Nmk = (-B0 * (kk * N + kk * kk) + A1 * (N + 2.0 * kk) + B2) / (2.0 * NN);
            a_Npk = (A0 * (kk * kk - kk * N) + B1 * (2.0 * kk - N) - A2) / (2.0 * NN);
            b_Npk = (B0 * (kk * kk - kk * N) + A1 * (N - 2.0 * kk) - B2) / (2.0 * NN);
        } else {
            a_Nmk = (-A0 * (kk * N + kk * kk) - B1 * (N + 2.0 * kk) + A2) / (2.0 * NN);
            b_Nmk = (B0 * (kk * N + kk * kk) - A1 * (N + 2.0 * kk) - B2) / (2.0 * NN);
            a_Npk = (A0 * (kk * N - kk * kk) + B1 * (N - 2.0 * kk) + A2) / (2.0 * NN);
            b_Npk = (B0 * (kk * N - kk * kk) - A1 * (N - 2.0 * kk) + B2) / (2.0 * NN);
        }
        poly.cos_coeffs[k] = a_k;
        poly.cos_coeffs[grid.N - k] = a_Nmk;
        poly.cos_coeffs[grid.N + k] = a_Npk;
        poly.sin_coeffs[k] = b_k;
        poly.sin_coeffs[grid.N - k] = b_Nmk;
        poly.sin_coeffs[grid.N + k] = b_Npk;
    }
    return poly;
}

}  // namespace hermitrig
