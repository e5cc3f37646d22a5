#include "hermitrig/alias.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hermitrig {

namespace {

int frequency_for(int N, int base_k, int block_i, Branch branch) {
    switch (branch) {
        case Branch::plus:
            return block_i * N + base_k;
        case Branch::minus:
            return block_i * N - base_k;
        case Branch::base:
            return base_k;
    }
    throw std::logic_error("frequency_for: bad branch");
}

void check_tag_inputs(int N, int base_k, int block_i, Branch branch) {
    if (N < 3 || N % 2 == 0) {
        throw std::invalid_argument("FrequencyTag: N must be odd and >= 3");
    }
    const int n = (N - 1) / 2;
    if (base_k < 1 || base_k > n) {
        throw std::invalid_argument("FrequencyTag: base_k must be in [1, n], got " +
                                    std::to_string(base_k));
    }
    if (branch == Branch::base) {
        if (block_i != 0) {
            throw std::invalid_argument("FrequencyTag: branch=base requires block_i = 0");
        }
    } else if (block_i < 1) {
        throw std::invalid_argument("FrequencyTag: block_i must be >= 1 for plus/minus");
    }
}

}  // namespace

FrequencyTag make_frequency_tag(int N, int base_k, int block_i, Branch branch) {
    check_tag_inputs(N, base_k, block_i, branch);
    return FrequencyTag{frequency_for(N, base_k, block_i, branch), base_k, block_i, branch};
}

FrequencyTag make_frequency_tag(int N, int omega, int base_k, int block_i, Branch branch) {
    check_tag_inputs(N, base_k, block_i, branch);
    const int expected = frequency_for(N, base_k, block_i, branch);
    if (omega != expected) {
        throw std::invalid_argument("FrequencyTag: omega " + std::to_string(omega) +
                                    " is inconsistent with (k=" + std::to_string(base_k) +
                                    ", i=" + std::to_string(block_i) +
                                    "); expected " + std::to_string(expected));
    }
    return FrequencyTag{omega, base_k, block_i, branch};
}

AliasSign alias_sign(int family, int block_i, Branch branch) {
    if (family != 0 && family != 1) {
        throw std::invalid_argument("alias_sign: family must be 0 or 1");
    }
    if (block_i < 0) {
        throw std::invalid_argument("alias_sign: block_i must be >= 0");
    }
    if (branch == Branch::base) {
        if (block_i != 0) {
            throw std::invalid_argument("alias_sign: branch=base requires block_i = 0");
        }
        return AliasSign{+1, +1};
    }
    // i*N*t_j is a multiple of 2*pi on family 0 and an i-fold odd multiple of
    // pi on family 1; angle addition leaves these signs.
    const int parity = (family == 0) ? +1 : (block_i % 2 == 0 ? +1 : -1);
    if (branch == Branch::plus) {
        return AliasSign{parity, parity};
    }
    return AliasSign{parity, -parity};
}

double verify_alias(const GridSpec& grid, int k, const FrequencyTag& tag) {
    if (k < 1 || k > grid.n) {
        throw std::invalid_argument("verify_alias: k must be in [1, n]");
    }
    if (tag.base_k != k) {
        throw std::invalid_argument("verify_alias: tag.base_k does not match k");
    }
    const AliasSign sign = alias_sign(grid.family, tag.block_i, tag.branch);
    const double w = static_cast<double>(tag.omega);
    double worst = 0.0;
    for (int j = 0; j < grid.N; ++j) {
        const double t = node_at(grid, j);
        const double rc = std::cos(w * t) - sign.sigma_cos * std::cos(k * t);
        const double rs = std::sin(w * t) - sign.sigma_sin * std::sin(k * t);
        worst = std::max({worst, std::abs(rc), std::abs(rs)});
    }
    return worst;
}

}  // namespace hermitrig
