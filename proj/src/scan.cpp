#include "dicke/scan.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "dicke/entangle.hpp"
#include "dicke/fieldstats.hpp"

namespace dicke {

PhaseScanRow scan_point(const PhaseModel& model, double kappa) {
    const auto [p_star, branch] = model.ground_excitation(kappa);

    PhaseScanRow row;
    row.kappa = kappa / model.omega();
    row.p_star = p_star;
    row.energy = model.ground_energy(kappa, p_star);
    row.d_energy_d_kappa = model.energy_derivative(p_star);

    const EntanglementReport ent = entanglement_report(*branch, model.n_atoms());
    row.concurrence = ent.concurrence;
    row.tau_a = ent.tau_a;
    row.entropy_nats = ent.entropy_nats;

    const PhotonStats stats = photon_statistics(*branch, model.n_atoms());
    row.mean_photons = stats.mean;
    row.photon_variance = stats.variance;
    row.mandel_q = stats.mandel_q_variance.value_or(0.0);
    return row;
}

std::vector<PhaseScanRow> compute_scan(const PhaseModel& model, double kappa_min,
                                       double kappa_max, int steps, int threads) {
    if (!(kappa_min >= 0.0) || !(kappa_max >= kappa_min)) {
        throw std::invalid_argument("invalid kappa range");
    }
    if (steps < 2) {
        throw std::invalid_argument("scan needs at least 2 steps");
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }

    std::vector<PhaseScanRow> rows(steps);
    const double dk = (kappa_max - kappa_min) / (steps - 1);
    auto worker = [&](int first, int last) {
        for (int i = first; i < last; ++i) {
            const double kappa = (i == steps - 1) ? kappa_max : kappa_min + i * dk;
            rows[i] = scan_point(model, kappa);
        }
    };

    if (threads == 1 || steps < 4 * threads) {
        worker(0, steps);
    } else {
        // warm the branch cache once so workers mostly read
        model.ground_excitation(kappa_max);
        std::vector<std::thread> pool;
        const int chunk = (steps + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int first = t * chunk;
            const int last = std::min(steps, first + chunk);
            if (first < last) pool.emplace_back(worker, first, last);
        }
        for (auto& th : pool) th.join();
    }

    for (int i = 1; i < steps; ++i) {
        if (rows[i].energy > rows[i - 1].energy + 1e-12 * std::abs(rows[i - 1].energy)) {
            throw std::runtime_error("scan invariant violated: energy increased along kappa");
        }
        if (rows[i].p_star < rows[i - 1].p_star) {
            throw std::runtime_error("scan invariant violated: p_star decreased along kappa");
        }
    }
    return rows;
}

TauSurfaceRow tau_surface_point(int n_atoms, std::int64_t p) {
    PhaseModel model(n_atoms);
    const GroundBranch& branch = model.branch(p);

    TauSurfaceRow row;
    row.n_atoms = n_atoms;
    row.p = p;
    const EntanglementReport ent = entanglement_report(branch, n_atoms);
    row.concurrence = ent.concurrence;
    row.tau_a = ent.tau_a;
    row.entropy_nats = ent.entropy_nats;
    const PhotonStats stats = photon_statistics(branch, n_atoms);
    row.mean_photons = stats.mean;
    row.photon_variance = stats.variance;
    return row;
}

}  // namespace dicke
