#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/tridiag.hpp"

namespace dicke {

// Ground-branch energies E^(p)(kappa) = (p - N/2) omega + kappa K^(p) for a
// fixed atom number. Branch eigenpairs are memoized; the cache only grows,
// so references returned by branch() stay valid. Thread-safe.
class PhaseModel {
public:
    explicit PhaseModel(int n_atoms, double omega = 1.0);

    int n_atoms() const { return n_atoms_; }
    double omega() const { return omega_; }

    const GroundBranch& branch(std::int64_t p) const;
    double slope(std::int64_t p) const;  // K^(p)

    double ground_energy(double kappa, std::int64_t p) const;

    // dE/dkappa on branch p; equals K^(p) exactly.
    double energy_derivative(std::int64_t p) const;

    // kappa_j = omega / (K^(j-1) - K^(j)), the intersection of adjacent
    // ground branches. Throws if the branches are degenerate.
    double critical_coupling(std::int64_t j) const;

    // Ground excitation number at the given coupling: argmin_p E^(p)(kappa),
    // ties resolved toward the smaller p.
    std::pair<std::int64_t, const GroundBranch*> ground_excitation(double kappa) const;

    // Search cap for ground_excitation, from the inverted strong-coupling
    // estimate plus margin.
    std::int64_t excitation_cap(double kappa) const;

private:
    int n_atoms_;
    double omega_;
    mutable std::mutex mutex_;
    mutable std::map<std::int64_t, GroundBranch> branches_;
};

// Printed closed forms for kappa_1..kappa_3; test oracle for
// critical_coupling. j must be 1, 2 or 3.
double closed_form_kappa(int n_atoms, int j, double omega = 1.0);

// Strong-coupling estimate kappa_p ~ omega / (N (sqrt(p+1) - sqrt(p))).
double asymptotic_kappa(int n_atoms, std::int64_t p, double omega = 1.0);

// Closed-form branch slopes K^(p) for p <= 4 (the radicands printed for
// E^(0)..E^(4)); used in tests and the table1 report.
double closed_form_slope(int n_atoms, int p);

struct PhaseDiagram {
    int n_atoms = 0;
    std::vector<std::pair<std::int64_t, double>> criticals;  // (j, kappa_j/omega)
    std::vector<GroundBranch> branches;                      // p = 0..max_j
};

PhaseDiagram build_phase_diagram(int n_atoms, double omega, std::int64_t max_j);

}  // namespace dicke
