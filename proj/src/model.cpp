#include "dicke/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {
constexpr int kMaxAtoms = 1000000;
constexpr std::int64_t kMaxExcitation = 1000000000000LL;  // 1e12
}  // namespace

void ModelParams::validate() const {
    if (n_atoms < 1) {
        throw std::invalid_argument("n_atoms must be >= 1, got " + std::to_string(n_atoms));
    }
    if (n_atoms > kMaxAtoms) {
        throw std::invalid_argument("n_atoms exceeds supported limit 1e6");
    }
    if (!(omega > 0.0)) {
        throw std::invalid_argument("omega must be > 0");
    }
    if (!(kappa >= 0.0)) {
        throw std::invalid_argument("kappa must be >= 0");
    }
}

SubspaceBlock build_block(const ModelParams& params, std::int64_t p) {
    params.validate();
    if (p < 0) {
        throw std::invalid_argument("excitation number p must be >= 0");
    }
    if (p > kMaxExcitation) {
        throw std::invalid_argument("excitation number p exceeds supported limit 1e12");
    }

    const std::int64_t n = params.n_atoms;
    SubspaceBlock block;
    block.p = p;
    block.dim = static_cast<int>(std::min<std::int64_t>(p, n)) + 1;
    block.e0 = (static_cast<double>(p) - 0.5 * static_cast<double>(n)) * params.omega;

    // t_s = sqrt((s+1)(N-s)(p-s)): collective-spin raising element times the
    // Fock sqrt(n) factor. Factors are multiplied in floating point so the
    // product cannot overflow the integer range.
    block.offdiag.resize(block.dim - 1);
    for (int s = 0; s + 1 < block.dim; ++s) {
        const double atoms = static_cast<double>(s + 1) * static_cast<double>(n - s);
        const double photons = static_cast<double>(p - s);
        block.offdiag[s] = std::sqrt(atoms * photons);
    }
    return block;
}

BasisLabel excitation_number_of(int s, std::int64_t p, int n_atoms) {
    const std::int64_t dim = std::min<std::int64_t>(p, n_atoms) + 1;
    if (s < 0 || s >= dim) {
        throw std::invalid_argument("basis index s out of range for block");
    }
    return BasisLabel{s, p - s};
}

}  // namespace dicke
