#include "dicke/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {
constexpr int kMaxDenseAtoms = 6;
constexpr int kMaxCutoff = 64;
}  // namespace

DenseModel build_dense(const ModelParams& params, int photon_cutoff) {
    params.validate();
    if (params.n_atoms > kMaxDenseAtoms) {
        throw std::invalid_argument("dense oracle limited to N <= 6");
    }
    if (photon_cutoff < 0 || photon_cutoff > kMaxCutoff) {
        throw std::invalid_argument("photon cutoff must be in [0, 64]");
    }

    const int n_atoms = params.n_atoms;
    const int n_fock = photon_cutoff + 1;
    const Eigen::Index dim = (Eigen::Index{1} << n_atoms) * n_fock;

    DenseModel model;
    model.n_atoms = n_atoms;
    model.photon_cutoff = photon_cutoff;
    model.omega = params.omega;
    model.kappa = params.kappa;
    model.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
    model.p_diagonal = Eigen::VectorXd::Zero(dim);

    for (unsigned bits = 0; bits < (1u << n_atoms); ++bits) {
        const int excited = std::popcount(bits);
        for (int n = 0; n < n_fock; ++n) {
            const Eigen::Index idx = static_cast<Eigen::Index>(bits) * n_fock + n;
            // omega/2 sum sigma_z + omega a^dag a
            model.hamiltonian(idx, idx) =
                0.5 * params.omega * (2 * excited - n_atoms) + params.omega * n;
            model.p_diagonal(idx) = excited + n;

            // kappa sum_j a^dag sigma_j^- : atom j drops e -> g, n -> n+1
            for (int j = 0; j < n_atoms; ++j) {
                if (!(bits & (1u << j))) continue;
                if (n + 1 >= n_fock) continue;
                const unsigned bits_lowered = bits & ~(1u << j);
                const Eigen::Index jdx =
                    static_cast<Eigen::Index>(bits_lowered) * n_fock + (n + 1);
                const double amp = params.kappa * std::sqrt(static_cast<double>(n + 1));
                model.hamiltonian(jdx, idx) += amp;
                model.hamiltonian(idx, jdx) += amp;
            }
        }
    }
    return model;
}

double commutator_inf_norm(const DenseModel& model) {
    const Eigen::Index dim = model.dim();
    double comm = 0.0;
    double hmax = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double h = std::abs(model.hamiltonian(i, j));
            hmax = std::max(hmax, h);
            comm = std::max(comm, h * std::abs(model.p_diagonal(j) - model.p_diagonal(i)));
        }
    }
    return (hmax > 0.0) ? comm / hmax : 0.0;
}

DenseGround dense_ground(const DenseModel& model) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.hamiltonian);
    DenseGround ground;
    ground.energy = es.eigenvalues()(0);
    ground.state = es.eigenvectors().col(0);

    // cutoff adequacy: blocks with excitation p <= cutoff are represented
    // completely, so the result is exact unless the ground state leaks
    // into a truncated sector
    double truncated_weight = 0.0;
    for (Eigen::Index i = 0; i < model.dim(); ++i) {
        if (model.p_diagonal(i) > model.photon_cutoff) {
            truncated_weight += ground.state(i) * ground.state(i);
        }
    }
    if (truncated_weight > 1e-10) {
        throw std::runtime_error(
            "photon cutoff too small: ground state lies in a truncated excitation sector");
    }
    return ground;
}

Eigen::MatrixXd dense_partial_trace(const Eigen::VectorXd& state, int n_atoms,
                                    int photon_cutoff, const Subsystem& keep) {
    const int n_fock = photon_cutoff + 1;
    const Eigen::Index dim = (Eigen::Index{1} << n_atoms) * n_fock;
    if (state.size() != dim) {
        throw std::invalid_argument("state dimension does not match basis");
    }
    for (int a : keep.atoms) {
        if (a < 0 || a >= n_atoms) {
            throw std::invalid_argument("kept atom index out of range");
        }
    }

    std::vector<int> traced_atoms;
    for (int a = 0; a < n_atoms; ++a) {
        bool kept = false;
        for (int k : keep.atoms) kept = kept || (k == a);
        if (!kept) traced_atoms.push_back(a);
    }

    const int n_keep_atoms = static_cast<int>(keep.atoms.size());
    const Eigen::Index keep_dim =
        (Eigen::Index{1} << n_keep_atoms) * (keep.field ? n_fock : 1);
    const Eigen::Index traced_atom_dim = Eigen::Index{1} << traced_atoms.size();
    const Eigen::Index traced_fock = keep.field ? 1 : n_fock;

    auto full_index = [&](Eigen::Index kept, Eigen::Index traced_bits,
                          Eigen::Index traced_n) -> Eigen::Index {
        Eigen::Index n = 0;
        Eigen::Index kept_atom_part = kept;
        if (keep.field) {
            n = kept % n_fock;
            kept_atom_part = kept / n_fock;
        } else {
            n = traced_n;
        }
        unsigned bits = 0;
        for (int k = 0; k < n_keep_atoms; ++k) {
            // first listed atom most significant in the kept index
            const Eigen::Index bit = (kept_atom_part >> (n_keep_atoms - 1 - k)) & 1;
            if (bit) bits |= 1u << keep.atoms[k];
        }
        for (std::size_t k = 0; k < traced_atoms.size(); ++k) {
            if ((traced_bits >> k) & 1) bits |= 1u << traced_atoms[k];
        }
        return static_cast<Eigen::Index>(bits) * n_fock + n;
    };

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(keep_dim, keep_dim);
    for (Eigen::Index r = 0; r < keep_dim; ++r) {
        for (Eigen::Index c = 0; c <= r; ++c) {
            double acc = 0.0;
            for (Eigen::Index tb = 0; tb < traced_atom_dim; ++tb) {
                for (Eigen::Index tn = 0; tn < traced_fock; ++tn) {
                    acc += state(full_index(r, tb, tn)) * state(full_index(c, tb, tn));
                }
            }
            rho(r, c) = acc;
            rho(c, r) = acc;
        }
    }
    return rho;
}

Eigen::VectorXd dicke_product_state(int n_atoms, int photon_cutoff, int s_excited,
                                    std::int64_t photons) {
    const int n_fock = photon_cutoff + 1;
    if (s_excited < 0 || s_excited > n_atoms || photons < 0 || photons >= n_fock) {
        throw std::invalid_argument("dicke_product_state labels out of range");
    }
    const Eigen::Index dim = (Eigen::Index{1} << n_atoms) * n_fock;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    double count = 0.0;
    for (unsigned bits = 0; bits < (1u << n_atoms); ++bits) {
        if (std::popcount(bits) == s_excited) count += 1.0;
    }
    const double amp = 1.0 / std::sqrt(count);
    for (unsigned bits = 0; bits < (1u << n_atoms); ++bits) {
        if (std::popcount(bits) != s_excited) continue;
        v(static_cast<Eigen::Index>(bits) * n_fock + photons) = amp;
    }
    return v;
}

}  // namespace dicke
