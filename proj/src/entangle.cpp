#include "dicke/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dicke/model.hpp"
#include "dicke/phase.hpp"

namespace dicke {

std::vector<double> dicke_weights(const GroundBranch& branch) {
    return branch.weights;
}

TwoQubitDensity two_atom_rdm(const std::vector<double>& weights, int n_atoms) {
    if (n_atoms < 2) {
        throw std::invalid_argument("two_atom_rdm needs at least two atoms");
    }
    if (weights.size() > static_cast<std::size_t>(n_atoms) + 1) {
        throw std::invalid_argument("weight vector longer than N+1");
    }
    const double n = static_cast<double>(n_atoms);
    const double pairs = n * (n - 1.0);

    TwoQubitDensity out;
    double p_gg = 0.0, p_mixed = 0.0, p_ee = 0.0;
    for (std::size_t s = 0; s < weights.size(); ++s) {
        const double sd = static_cast<double>(s);
        p_ee += weights[s] * sd * (sd - 1.0) / pairs;
        p_gg += weights[s] * (n - sd) * (n - sd - 1.0) / pairs;
        p_mixed += weights[s] * sd * (n - sd) / pairs;
    }
    out.rho(0, 0) = p_gg;
    out.rho(1, 1) = p_mixed;
    out.rho(2, 2) = p_mixed;
    out.rho(3, 3) = p_ee;
    // On a symmetric Dicke mixture the ge<->eg coherence equals the
    // population of either mixed diagonal entry.
    out.rho(1, 2) = p_mixed;
    out.rho(2, 1) = p_mixed;
    return out;
}

double concurrence(const TwoQubitDensity& density) {
    const Eigen::Matrix4d& rho = density.rho;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
    Eigen::Vector4d evals = es.eigenvalues();
    for (int i = 0; i < 4; ++i) {
        if (evals(i) < -1e-10) {
            throw std::invalid_argument("density matrix is not positive semidefinite");
        }
        evals(i) = std::max(evals(i), 0.0);
    }
    const Eigen::Matrix4d sqrt_rho =
        es.eigenvectors() * evals.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();

    // sigma_y (x) sigma_y is real, so for real rho the spin flip is Y rho Y.
    Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    // For real rho, rho rho_tilde shares its spectrum with B^2 where
    // B = sqrt(rho) Y sqrt(rho) is symmetric, so the Wootters lambdas are
    // |eig(B)|. This avoids square roots of near-zero eigenvalues of the
    // squared product, which would amplify rounding noise to ~1e-8.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> em(sqrt_rho * yy * sqrt_rho);
    Eigen::Vector4d lambdas = em.eigenvalues().cwiseAbs();
    std::sort(lambdas.data(), lambdas.data() + 4, std::greater<double>());
    return std::max(lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3), 0.0);
}

double closed_form_concurrence(int n_atoms, int p) {
    if (n_atoms < 2) {
        throw std::invalid_argument("closed-form concurrence needs N >= 2");
    }
    const double n = static_cast<double>(n_atoms);
    switch (p) {
        case 0:
            return 0.0;
        case 1:
            return 1.0 / n;
        case 2:
            return (4.0 * n - 5.0 - 2.0 * std::sqrt(2.0 * n * n - 5.0 * n + 4.0)) /
                   (n * (2.0 * n - 1.0));
        default:
            throw std::invalid_argument("closed-form concurrence known only for p in {0,1,2}");
    }
}

double tau_atoms(double c, int n_atoms) {
    const double n = static_cast<double>(n_atoms);
    return c * c * n * (n - 1.0) / 2.0;
}

double atom_field_entropy(const std::vector<double>& weights) {
    double s = 0.0;
    for (double w : weights) {
        if (w > 0.0) s -= w * std::log(w);
    }
    return std::max(s, 0.0);
}

EntanglementReport entanglement_report(const GroundBranch& branch, int n_atoms) {
    const std::vector<double> w = dicke_weights(branch);
    EntanglementReport report;
    report.concurrence = (n_atoms >= 2) ? concurrence(two_atom_rdm(w, n_atoms)) : 0.0;
    report.tau_a = tau_atoms(report.concurrence, n_atoms);
    report.entropy_nats = atom_field_entropy(w);
    return report;
}

CkwReport ckw_report_p1(int n_atoms) {
    if (n_atoms < 2) {
        throw std::invalid_argument("CKW report needs N >= 2");
    }
    const double n = static_cast<double>(n_atoms);

    PhaseModel model(n_atoms);
    const GroundBranch& branch = model.branch(1);
    const double w0 = branch.weights[0];  // |g^N>|1>_F component
    const double w1 = branch.weights[1];  // |D_1>|0>_F component

    CkwReport report;

    // Field-atom pair state in the basis {g0, g1, e0, e1}: populations
    // w0 on g1, w1/N on e0, w1(N-1)/N on g0, plus the g1<->e0 coherence.
    TwoQubitDensity fa;
    fa.rho(0, 0) = w1 * (n - 1.0) / n;
    fa.rho(1, 1) = w0;
    fa.rho(2, 2) = w1 / n;
    const double coh = branch.amplitudes[0] * branch.amplitudes[1] / std::sqrt(n);
    fa.rho(1, 2) = coh;
    fa.rho(2, 1) = coh;
    report.c_field_atom = concurrence(fa);

    report.c_atom_atom = concurrence(two_atom_rdm(branch.weights, n_atoms));

    // rho_F = diag(w1, w0) in the {|0>,|1>} Fock basis.
    report.field_tangle = 4.0 * w0 * w1;
    report.field_sum_sq = n * report.c_field_atom * report.c_field_atom;
    report.field_residual = report.field_tangle - report.field_sum_sq;

    // single-atom state diag(1 - w1/N, w1/N)
    const double pe = w1 / n;
    report.atom_tangle = 4.0 * pe * (1.0 - pe);
    report.atom_sum_sq = (n - 1.0) * report.c_atom_atom * report.c_atom_atom +
                         report.c_field_atom * report.c_field_atom;
    report.atom_residual = report.atom_tangle - report.atom_sum_sq;
    return report;
}

}  // namespace dicke
