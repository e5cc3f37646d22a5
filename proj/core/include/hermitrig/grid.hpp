#pragma once

#include <vector>

namespace hermitrig {

// One of the two uniform grid families on [0, 2*pi).  Family 0 places the
// first node at t = 0; family 1 is the same grid shifted by half a spacing
// (pi/N).  The node count N = 2n + 1 is always odd.
struct GridSpec {
    int family = 0;  // 0 or 1
    int n = 0;       // harmonics up to n are resolvable
    int N = 0;       // 2n + 1 nodes
};

// Validates (family, n) and fills in N = 2n + 1.
// Throws std::invalid_argument for family outside {0,1} or n < 1.
GridSpec make_grid(int family, int n);

// Node j (0-based), computed from the closed formula rather than by
// accumulation:
//   family 0:  t_j = 2*pi*j / N
//   family 1:  t_j = pi*(2j + 1) / N
double node_at(const GridSpec& grid, int j);

// All N nodes, strictly increasing, in [0, 2*pi).
std::vector<double> nodes(const GridSpec& grid);

}  // namespace hermitrig
