#pragma once

#include <cstdint>
#include <vector>

namespace dicke {

// N two-level atoms resonantly coupled to one field mode, hbar = 1.
// A single omega covers both the atomic and the field frequency.
struct ModelParams {
    int n_atoms = 1;
    double omega = 1.0;
    double kappa = 0.0;

    // Throws std::invalid_argument on N < 1, omega <= 0 or kappa < 0.
    void validate() const;
};

// Fixed-excitation block of the Hamiltonian:
//   H^(p) = e0 * I + kappa * T^(p),
// with T^(p) symmetric tridiagonal, zero diagonal, off-diagonal entries
// offdiag[s] coupling the basis states s <-> s+1 (s = atoms excited).
struct SubspaceBlock {
    std::int64_t p = 0;
    int dim = 1;
    double e0 = 0.0;
    std::vector<double> offdiag;
};

SubspaceBlock build_block(const ModelParams& params, std::int64_t p);

struct BasisLabel {
    int atoms_excited = 0;
    std::int64_t photons = 0;
};

// Label of block basis vector s: s atoms excited, p-s photons.
BasisLabel excitation_number_of(int s, std::int64_t p, int n_atoms);

}  // namespace dicke
