#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

// Brute-force dense model of the full atoms (x) field Hilbert space with a
// photon-number cutoff. Correctness anchor for the block pipeline; small N
// only.
//
// Basis ordering: index = bits * (cutoff+1) + n, where bit j of `bits` set
// means atom j is excited (atom 0 is the most significant logical qubit
// within the bitstring) and n is the Fock occupation.
struct DenseModel {
    int n_atoms = 1;
    int photon_cutoff = 0;
    double omega = 1.0;
    double kappa = 0.0;
    Eigen::MatrixXd hamiltonian;
    Eigen::VectorXd p_diagonal;  // total excitation number, diagonal here

    Eigen::Index dim() const { return hamiltonian.rows(); }
};

DenseModel build_dense(const ModelParams& params, int photon_cutoff);

// max_ij |[H,P]_ij| / max_ij |H_ij|; P is diagonal so this is cheap.
double commutator_inf_norm(const DenseModel& model);

struct DenseGround {
    double energy = 0.0;
    Eigen::VectorXd state;
};

// Lowest eigenpair by dense symmetric diagonalization. Excitation sectors
// with p <= cutoff are represented completely; throws if the ground state
// puts weight > 1e-10 on a truncated sector. Callers must still size the
// cutoff so the true ground excitation fits under it (see the CLI
// oracle-check adequacy test).
DenseGround dense_ground(const DenseModel& model);

// Subsystem to keep in a partial trace. Kept basis ordering: listed atoms
// first (first listed most significant), field last when kept.
struct Subsystem {
    std::vector<int> atoms;
    bool field = false;
};

Eigen::MatrixXd dense_partial_trace(const Eigen::VectorXd& state, int n_atoms,
                                    int photon_cutoff, const Subsystem& keep);

// Product state |D_s> (x) |photons>: the symmetric s-excitation atomic state
// tensored with a Fock state, in the dense basis.
Eigen::VectorXd dicke_product_state(int n_atoms, int photon_cutoff, int s_excited,
                                    std::int64_t photons);

}  // namespace dicke
