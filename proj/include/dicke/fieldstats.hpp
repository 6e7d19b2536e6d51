#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dicke/tridiag.hpp"

namespace dicke {

// Photon-number distribution of the field mode in a ground branch.
// P(n) = |A_{p-n}|^2, supported on n = max(0, p-N) .. p.
struct PhotonStats {
    std::int64_t n_min = 0;
    std::vector<double> distribution;  // P(n_min + i)
    double mean = 0.0;
    double variance = 0.0;
    double std_dev = 0.0;
    // Mandel parameter in both conventions: (Var - nbar)/nbar is the
    // standard one, (Delta - nbar)/nbar is the literal dispersion form.
    // Absent when nbar = 0 (the p = 0 branch).
    std::optional<double> mandel_q_variance;
    std::optional<double> mandel_q_dispersion;
};

PhotonStats photon_statistics(const GroundBranch& branch, int n_atoms);

// Strong-coupling limit of the ground amplitudes: A_s -> (-1)^(N+s)
// sqrt(binom(N,s) 2^-N), unit norm. Accurate only for p >> N.
std::vector<double> binomial_amplitudes(int n_atoms);

// <s> over the atomic Dicke mixture.
double mean_excitation_atoms(const std::vector<double>& weights);

}  // namespace dicke
