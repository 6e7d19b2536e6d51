#include "dicke/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

PhaseModel::PhaseModel(int n_atoms, double omega) : n_atoms_(n_atoms), omega_(omega) {
    ModelParams{n_atoms, omega, 0.0}.validate();
}

const GroundBranch& PhaseModel::branch(std::int64_t p) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = branches_.find(p);
    if (it == branches_.end()) {
        ModelParams params{n_atoms_, omega_, 0.0};
        it = branches_.emplace(p, ground_eigenpair(build_block(params, p))).first;
    }
    return it->second;
}

double PhaseModel::slope(std::int64_t p) const {
    return branch(p).k_slope;
}

double PhaseModel::ground_energy(double kappa, std::int64_t p) const {
    const double e0 = (static_cast<double>(p) - 0.5 * n_atoms_) * omega_;
    return e0 + kappa * slope(p);
}

double PhaseModel::energy_derivative(std::int64_t p) const {
    return slope(p);
}

double PhaseModel::critical_coupling(std::int64_t j) const {
    if (j < 1) {
        throw std::invalid_argument("critical index j must be >= 1");
    }
    const double gap = slope(j - 1) - slope(j);
    if (!(gap > 1e-14)) {
        throw std::runtime_error("degenerate adjacent branches at j = " + std::to_string(j));
    }
    return omega_ / gap;
}

std::int64_t PhaseModel::excitation_cap(double kappa) const {
    const double est = 0.5 * n_atoms_ * kappa / omega_;
    return static_cast<std::int64_t>(std::ceil(est * est)) + n_atoms_ + 8;
}

std::pair<std::int64_t, const GroundBranch*> PhaseModel::ground_excitation(double kappa) const {
    if (!(kappa >= 0.0)) {
        throw std::invalid_argument("kappa must be >= 0");
    }
    const std::int64_t cap = excitation_cap(kappa);
    std::int64_t best_p = 0;
    double best_e = ground_energy(kappa, 0);
    for (std::int64_t p = 1; p <= cap; ++p) {
        const double e = ground_energy(kappa, p);
        if (e < best_e) {
            best_e = e;
            best_p = p;
        }
    }
    if (best_p == cap) {
        throw std::runtime_error("excitation cap exhausted in ground_excitation");
    }
    return {best_p, &branch(best_p)};
}

double closed_form_kappa(int n_atoms, int j, double omega) {
    const double n = static_cast<double>(n_atoms);
    switch (j) {
        case 1:
            return omega / std::sqrt(n);
        case 2:
            return omega / (std::sqrt(4.0 * n - 2.0) - std::sqrt(n));
        case 3:
            return omega /
                   (std::sqrt(5.0 * (n - 1.0) + std::sqrt((4.0 * n - 5.0) * (4.0 * n - 5.0) + 8.0 * n)) -
                    std::sqrt(4.0 * n - 2.0));
        default:
            throw std::invalid_argument("closed-form kappa_j known only for j in {1,2,3}");
    }
}

double asymptotic_kappa(int n_atoms, std::int64_t p, double omega) {
    if (p < 1) {
        throw std::invalid_argument("asymptotic_kappa needs p >= 1");
    }
    const double pd = static_cast<double>(p);
    return omega / (n_atoms * (std::sqrt(pd + 1.0) - std::sqrt(pd)));
}

double closed_form_slope(int n_atoms, int p) {
    const double n = static_cast<double>(n_atoms);
    switch (p) {
        case 0:
            return 0.0;
        case 1:
            return -std::sqrt(n);
        case 2:
            return -std::sqrt(2.0 * (2.0 * n - 1.0));
        case 3:
            return -std::sqrt(5.0 * (n - 1.0) +
                              std::sqrt((4.0 * n - 5.0) * (4.0 * n - 5.0) + 8.0 * n));
        case 4:
            return -std::sqrt(10.0 * n - 15.0 +
                              3.0 * std::sqrt(17.0 - 12.0 * n + 4.0 * n * n));
        default:
            throw std::invalid_argument("closed-form slope known only for p <= 4");
    }
}

PhaseDiagram build_phase_diagram(int n_atoms, double omega, std::int64_t max_j) {
    PhaseModel model(n_atoms, omega);
    PhaseDiagram diagram;
    diagram.n_atoms = n_atoms;
    for (std::int64_t p = 0; p <= max_j; ++p) {
        diagram.branches.push_back(model.branch(p));
    }
    for (std::int64_t j = 1; j <= max_j; ++j) {
        diagram.criticals.emplace_back(j, model.critical_coupling(j) / omega);
    }
    return diagram;
}

}  // namespace dicke
