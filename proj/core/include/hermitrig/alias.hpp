#pragma once

#include "hermitrig/grid.hpp"

namespace hermitrig {

// On an N-node uniform grid the frequency i*N (+/-) k is indistinguishable
// from the base frequency k up to fixed signs:
//   cos(w t_j) = sigma_cos * cos(k t_j)   and   sin(w t_j) = sigma_sin * sin(k t_j)
// for every node t_j.  The signs depend only on the grid family, the block
// index i and the branch, never on j or k.

enum class Branch { plus, minus, base };  // base: w = k, i = 0

struct AliasSign {
    int sigma_cos = 1;  // +1 or -1
    int sigma_sin = 1;  // +1 or -1
};

// A frequency w = i*N + k (plus), i*N - k (minus) or k (base), labeled by its
// base harmonic.
struct FrequencyTag {
    int omega = 0;
    int base_k = 0;
    int block_i = 0;
    Branch branch = Branch::base;
};

// Builds the tag for (k, i, branch) on an N-node grid; omega is derived.
FrequencyTag make_frequency_tag(int N, int base_k, int block_i, Branch branch);

// Checked variant: validates that omega is consistent with (k, i, branch),
// throwing std::invalid_argument on a mis-tagged frequency.
FrequencyTag make_frequency_tag(int N, int omega, int base_k, int block_i, Branch branch);

// Closed-form sign rule.
//   family 0:  plus -> (+1, +1), minus -> (+1, -1)
//   family 1:  plus -> ((-1)^i, (-1)^i), minus -> ((-1)^i, -(-1)^i)
//   base (requires i = 0) -> (+1, +1)
// Throws std::invalid_argument for branch=base with i != 0, i < 0 or a bad family.
AliasSign alias_sign(int family, int block_i, Branch branch);

// Numeric cross-check of the sign rule: max over all nodes of
// |cos(w t_j) - sigma_cos cos(k t_j)| and the sine analogue, as a single max.
double verify_alias(const GridSpec& grid, int k, const FrequencyTag& tag);

}  // namespace hermitrig
