#pragma once

#include <cstdint>
#include <vector>

#include "dicke/phase.hpp"

namespace dicke {

// One kappa-grid sample of the ground-state observables.
struct PhaseScanRow {
    double kappa = 0.0;  // units of omega
    std::int64_t p_star = 0;
    double energy = 0.0;  // units of hbar omega
    double d_energy_d_kappa = 0.0;
    double concurrence = 0.0;
    double tau_a = 0.0;
    double entropy_nats = 0.0;
    double mean_photons = 0.0;
    double photon_variance = 0.0;
    double mandel_q = 0.0;  // variance convention; 0 when undefined (p=0)
};

PhaseScanRow scan_point(const PhaseModel& model, double kappa);

// Uniform grid inclusive of both endpoints, evaluated with `threads`
// workers (<= 0 means hardware concurrency), emitted in grid order.
// Throws std::runtime_error if the emitted rows violate the scan
// monotonicity contract (energy non-increasing, p_star non-decreasing).
std::vector<PhaseScanRow> compute_scan(const PhaseModel& model, double kappa_min,
                                       double kappa_max, int steps, int threads = 1);

// (N, p) cell of the branch surface behind the tau_A landscape.
struct TauSurfaceRow {
    int n_atoms = 0;
    std::int64_t p = 0;
    double concurrence = 0.0;
    double tau_a = 0.0;
    double entropy_nats = 0.0;
    double mean_photons = 0.0;
    double photon_variance = 0.0;
};

TauSurfaceRow tau_surface_point(int n_atoms, std::int64_t p);

}  // namespace dicke
