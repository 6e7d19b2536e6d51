#include "dicke/fieldstats.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

PhotonStats photon_statistics(const GroundBranch& branch, int n_atoms) {
    const std::int64_t p = branch.p;
    const std::size_t dim = branch.weights.size();

    PhotonStats stats;
    stats.n_min = std::max<std::int64_t>(0, p - n_atoms);
    stats.distribution.resize(dim);
    // photon count n = p - s, so the weight vector reverses
    for (std::size_t s = 0; s < dim; ++s) {
        const std::int64_t n = p - static_cast<std::int64_t>(s);
        stats.distribution[static_cast<std::size_t>(n - stats.n_min)] = branch.weights[s];
    }

    double mean = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        mean += static_cast<double>(stats.n_min + static_cast<std::int64_t>(i)) *
                stats.distribution[i];
    }
    double var = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = static_cast<double>(stats.n_min + static_cast<std::int64_t>(i)) - mean;
        var += d * d * stats.distribution[i];
    }
    stats.mean = mean;
    stats.variance = var;
    stats.std_dev = std::sqrt(var);
    if (mean > 0.0) {
        stats.mandel_q_variance = (var - mean) / mean;
        stats.mandel_q_dispersion = (stats.std_dev - mean) / mean;
    }
    return stats;
}

std::vector<double> binomial_amplitudes(int n_atoms) {
    if (n_atoms < 1) {
        throw std::invalid_argument("binomial_amplitudes needs N >= 1");
    }
    const double n = static_cast<double>(n_atoms);
    std::vector<double> a(n_atoms + 1);
    for (int s = 0; s <= n_atoms; ++s) {
        // log-space binomial, safe up to N ~ 1e3 and beyond
        const double log_binom =
            std::lgamma(n + 1.0) - std::lgamma(s + 1.0) - std::lgamma(n - s + 1.0);
        const double mag = std::exp(0.5 * (log_binom - n * std::log(2.0)));
        a[s] = (((n_atoms + s) % 2) ? -1.0 : 1.0) * mag;
    }
    return a;
}

double mean_excitation_atoms(const std::vector<double>& weights) {
    double mean = 0.0;
    for (std::size_t s = 0; s < weights.size(); ++s) {
        mean += static_cast<double>(s) * weights[s];
    }
    return mean;
}

}  // namespace dicke
