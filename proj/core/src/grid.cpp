#include "hermitrig/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace hermitrig {

GridSpec make_grid(int family, int n) {
    if (family != 0 && family != 1) {
        throw std::invalid_argument("make_grid: family must be 0 or 1, got " +
                                    std::to_string(family));
    }
    if (n < 1) {
        throw std::invalid_argument("make_grid: n must be >= 1, got " + std::to_string(n));
    }
    return GridSpec{family, n, 2 * n + 1};
}

double node_at(const GridSpec& grid, int j) {
    const double pi = std::numbers::pi;
    if (grid.family == 0) {
        return 2.0 * pi * static_cast<double>(j) / static_cast<double>(grid.N);
    }
    return pi * static_cast<double>(2 * j + 1) / static_cast<double>(grid.N);
}

std::vector<double> nodes(const GridSpec& grid) {
    std::vector<double> t(static_cast<std::size_t>(grid.N));
    for (int j = 0; j < grid.N; ++j) {
        t[static_cast<std::size_t>(j)] = node_at(grid, j);
    }
    return t;
}

}  // namespace hermitrig
