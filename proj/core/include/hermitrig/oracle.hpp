#pragma once

#include "hermitrig/hermite.hpp"
#include "hermitrig/spectral.hpp"

namespace hermitrig {

// Reference construction: imposes every interpolation condition literally as
// one dense linear equation (no aliasing shortcuts, no per-harmonic
// decoupling) and solves the resulting N(p+1) x N(p+1) system with partial
// pivoting.  Deliberately shares nothing with the fast path beyond the
// frequency-set definition, so it can catch aliasing and assembly bugs.
// Slow; intended for tests and `verify`.
HermiteTrigPoly collocation_solve(const HermiteSamples& samples,
                                  BuildMode mode = BuildMode::paper_H_terms);

}  // namespace hermitrig
