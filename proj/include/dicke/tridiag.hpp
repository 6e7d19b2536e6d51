#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

// Lowest eigenpair of the coupling matrix T^(p). The branch energy is
// E(kappa) = e0 + k_slope * kappa; amplitudes are the ground superposition
// over the block basis, normalized, with amplitudes[0] > 0.
struct GroundBranch {
    std::int64_t p = 0;
    double k_slope = 0.0;
    std::vector<double> amplitudes;
    std::vector<double> weights;  // amplitudes[s]^2
};

// Sturm-sequence bisection for the minimal eigenvalue, then inverse
// iteration for the eigenvector. Deterministic; throws std::runtime_error
// on non-convergence (does not happen for valid blocks).
GroundBranch ground_eigenpair(const SubspaceBlock& block);

// All eigenvalues of T^(p), ascending, each to 1e-12 absolute tolerance.
std::vector<double> full_spectrum(const SubspaceBlock& block);

namespace tridiag {

// Number of eigenvalues of the zero-diagonal symmetric tridiagonal matrix
// with the given off-diagonal strictly below x.
int count_below(std::span<const double> offdiag, double x);

double gershgorin_radius(std::span<const double> offdiag);

}  // namespace tridiag

}  // namespace dicke
