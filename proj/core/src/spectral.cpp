#include "hermitrig/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermitrig {

void validate(const HermiteSamples& samples) {
    if (samples.p < 0) {
        throw std::invalid_argument("HermiteSamples: p must be >= 0");
    }
    if (samples.grid.N != 2 * samples.grid.n + 1 || samples.grid.n < 1) {
        throw std::invalid_argument("HermiteSamples: invalid grid");
    }
    const std::size_t want_rows = static_cast<std::size_t>(samples.p) + 1;
    if (samples.rows.size() != want_rows) {
        throw std::invalid_argument("HermiteSamples: expected " + std::to_string(want_rows) +
                                    " rows, got " + std::to_string(samples.rows.size()));
    }
    for (std::size_t m = 0; m < samples.rows.size(); ++m) {
        if (samples.rows[m].size() != static_cast<std::size_t>(samples.grid.N)) {
            throw std::invalid_argument("HermiteSamples: row " + std::to_string(m) + " has " +
                                        std::to_string(samples.rows[m].size()) +
                                        " entries, expected N = " +
                                        std::to_string(samples.grid.N));
        }
    }
}

FourierLayer trig_interp_coeffs(const std::vector<double>& row, const GridSpec& grid,
                                int order_m) {
    if (row.size() != static_cast<std::size_t>(grid.N)) {
        throw std::invalid_argument("trig_interp_coeffs: row has " + std::to_string(row.size()) +
                                    " entries, expected N = " + std::to_string(grid.N));
    }
    FourierLayer layer;
    layer.order_m = order_m;
    layer.A.assign(static_cast<std::size_t>(grid.n), 0.0);
    layer.B.assign(static_cast<std::size_t>(grid.n), 0.0);

    const double scale = 2.0 / static_cast<double>(grid.N);
    double sum0 = 0.0;
    for (int j = 0; j < grid.N; ++j) {
        sum0 += row[static_cast<std::size_t>(j)];
    }
    layer.A0 = scale * sum0;

    for (int k = 1; k <= grid.n; ++k) {
        double sc = 0.0;
        double ss = 0.0;
        for (int j = 0; j < grid.N; ++j) {
            const double t = node_at(grid, j);
            const double v = row[static_cast<std::size_t>(j)];
            sc += v * std::cos(k * t);
            ss += v * std::sin(k * t);
        }
        layer.A[static_cast<std::size_t>(k - 1)] = scale * sc;
        layer.B[static_cast<std::size_t>(k - 1)] = scale * ss;
    }
    return layer;
}

MeanReport center_rows(const HermiteSamples& samples) {
    validate(samples);
    MeanReport report;
    report.means.resize(samples.rows.size());
    report.centered_rows = samples.rows;
    for (std::size_t m = 0; m < samples.rows.size(); ++m) {
        double sum = 0.0;
        for (double v : samples.rows[m]) {
            sum += v;
        }
        const double mean = sum / static_cast<double>(samples.grid.N);
        report.means[m] = mean;
        if (m >= 1) {
            for (double& v : report.centered_rows[m]) {
                v -= mean;
            }
        }
    }
    return report;
}

}  // namespace hermitrig
