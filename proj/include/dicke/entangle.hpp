#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dicke/tridiag.hpp"

namespace dicke {

// Two-atom reduced density matrix in the ordered basis {gg, ge, eg, ee}.
// Real symmetric, unit trace; for Dicke mixtures only the ge<->eg
// coherence is nonzero off the diagonal.
struct TwoQubitDensity {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
};

struct EntanglementReport {
    double concurrence = 0.0;
    double tau_a = 0.0;
    double entropy_nats = 0.0;
};

// Tracing the field over orthogonal Fock states leaves the diagonal Dicke
// mixture with weights |A_s|^2.
std::vector<double> dicke_weights(const GroundBranch& branch);

// Pair state of two atoms drawn from the symmetric N-atom Dicke mixture.
TwoQubitDensity two_atom_rdm(const std::vector<double>& weights, int n_atoms);

// Wootters concurrence, full spin-flip procedure (not the X-state shortcut).
double concurrence(const TwoQubitDensity& rho);

// Printed C^(p) for p in {0,1,2}; test oracle for the pipeline.
double closed_form_concurrence(int n_atoms, int p);

// tau_A = C^2 N(N-1)/2, the all-pairs total of squared concurrence.
double tau_atoms(double c, int n_atoms);

// S_A = -sum w ln w over the Dicke mixture, in nats; 0 ln 0 = 0.
double atom_field_entropy(const std::vector<double>& weights);

EntanglementReport entanglement_report(const GroundBranch& branch, int n_atoms);

// Monogamy bookkeeping on the p=1 ground state, where the field occupies
// only |0> and |1> and the system is N+1 qubits.
struct CkwReport {
    double c_field_atom = 0.0;    // C_{F,A_j}
    double c_atom_atom = 0.0;     // C_{A_i,A_j}
    double field_tangle = 0.0;    // 4 det rho_F
    double field_sum_sq = 0.0;    // sum_k C^2_{F,k}
    double field_residual = 0.0;  // tangle - sum
    double atom_tangle = 0.0;     // 4 det rho_j for one atom
    double atom_sum_sq = 0.0;
    double atom_residual = 0.0;
};

CkwReport ckw_report_p1(int n_atoms);

}  // namespace dicke
