// Command-line front end: kappa scans, critical-coupling ladders, the
// closed-form summary table, the tau_A branch surface, CKW monogamy
// reports and the dense-oracle cross-check.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/entangle.hpp"
#include "dicke/fieldstats.hpp"
#include "dicke/model.hpp"
#include "dicke/oracle.hpp"
#include "dicke/phase.hpp"
#include "dicke/scan.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitSelfCheck = 3;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Minimal row writer: CSV (RFC-4180 style, numeric fields only) or a JSON
// array of flat objects. Fields are kept in declaration order.
class RowWriter {
public:
    RowWriter(std::ostream& out, const std::string& format,
              std::vector<std::string> columns)
        : out_(out), json_(format == "json"), columns_(std::move(columns)) {
        if (json_) {
            out_ << "[\n";
        } else {
            for (std::size_t i = 0; i < columns_.size(); ++i) {
                out_ << (i ? "," : "") << columns_[i];
            }
            out_ << "\n";
        }
    }

    void row(const std::vector<std::string>& values) {
        if (json_) {
            out_ << (first_ ? "" : ",\n") << "  {";
            for (std::size_t i = 0; i < values.size(); ++i) {
                out_ << (i ? ", " : "") << "\"" << columns_[i] << "\": " << values[i];
            }
            out_ << "}";
            first_ = false;
        } else {
            for (std::size_t i = 0; i < values.size(); ++i) {
                out_ << (i ? "," : "") << values[i];
            }
            out_ << "\n";
        }
    }

    ~RowWriter() {
        if (json_) out_ << "\n]\n";
    }

private:
    std::ostream& out_;
    bool json_;
    std::vector<std::string> columns_;
    bool first_ = true;
};

struct CommonFlags {
    std::string format = "csv";
    std::string output;
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "Output file (default: stdout)");
}

class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_scan(int n_atoms, double omega, double kappa_min, double kappa_max,
             int steps, int threads, const CommonFlags& flags) {
    dicke::PhaseModel model(n_atoms, omega);
    const auto rows = dicke::compute_scan(model, kappa_min, kappa_max, steps, threads);

    OutputStream out(flags.output);
    RowWriter writer(out.get(), flags.format,
                     {"kappa", "p_star", "energy", "d_energy_d_kappa", "concurrence",
                      "tau_a", "entropy_nats", "mean_photons", "photon_variance",
                      "mandel_q"});
    for (const auto& r : rows) {
        writer.row({fmt(r.kappa), std::to_string(r.p_star), fmt(r.energy),
                    fmt(r.d_energy_d_kappa), fmt(r.concurrence), fmt(r.tau_a),
                    fmt(r.entropy_nats), fmt(r.mean_photons), fmt(r.photon_variance),
                    fmt(r.mandel_q)});
    }
    return 0;
}

int cmd_critical(int n_atoms, double omega, int max_j, const CommonFlags& flags) {
    dicke::PhaseModel model(n_atoms, omega);

    OutputStream out(flags.output);
    RowWriter writer(out.get(), flags.format,
                     {"j", "kappa_j", "k_slope", "dEdk_jump", "closed_form", "abs_diff"});
    bool mismatch = false;
    for (int j = 1; j <= max_j; ++j) {
        const double kappa_j = model.critical_coupling(j) / omega;
        const double slope = model.slope(j);
        const double jump = model.slope(j) - model.slope(j - 1);
        double closed = std::nan("");
        double diff = std::nan("");
        if (j <= 3) {
            closed = dicke::closed_form_kappa(n_atoms, j, omega) / omega;
            diff = std::abs(closed - kappa_j);
            if (diff > 1e-9 * closed) mismatch = true;
        }
        writer.row({std::to_string(j), fmt(kappa_j), fmt(slope), fmt(jump), fmt(closed),
                    fmt(diff)});
    }
    if (mismatch) {
        std::cerr << "critical: closed-form vs numeric mismatch above 1e-9\n";
        return kExitSelfCheck;
    }
    return 0;
}

int cmd_table1(int n_atoms, double omega, const CommonFlags& flags) {
    if (n_atoms < 2) throw std::invalid_argument("table1 needs --atoms >= 2");
    dicke::PhaseModel model(n_atoms, omega);

    OutputStream out(flags.output);
    RowWriter writer(out.get(), flags.format,
                     {"p", "kappa_lo", "kappa_hi", "e0", "k_slope_closed",
                      "k_slope_numeric", "concurrence_closed", "concurrence_numeric"});
    for (int p = 0; p <= 4; ++p) {
        const double lo = (p == 0) ? 0.0 : model.critical_coupling(p) / omega;
        const double hi = model.critical_coupling(p + 1) / omega;
        const double e0 = (p - 0.5 * n_atoms) * omega;
        const double k_closed = dicke::closed_form_slope(n_atoms, p);
        const double k_num = model.slope(p);
        const double c_num =
            dicke::entanglement_report(model.branch(p), n_atoms).concurrence;
        const double c_closed =
            (p <= 2) ? dicke::closed_form_concurrence(n_atoms, p) : std::nan("");
        writer.row({std::to_string(p), fmt(lo), fmt(hi), fmt(e0), fmt(k_closed),
                    fmt(k_num), fmt(c_closed), fmt(c_num)});
    }
    return 0;
}

int cmd_tau_surface(int n_max, std::int64_t p_max, const CommonFlags& flags) {
    if (n_max < 2 || p_max < 1) {
        throw std::invalid_argument("tau-surface needs --n-max >= 2 and --p-max >= 1");
    }
    if (static_cast<std::int64_t>(n_max) * (p_max + 1) > 2000000) {
        throw std::invalid_argument("tau-surface grid exceeds the 2e6-cell limit");
    }

    OutputStream out(flags.output);
    RowWriter writer(out.get(), flags.format,
                     {"n_atoms", "p", "concurrence", "tau_a", "entropy_nats",
                      "mean_photons", "photon_variance"});
    for (int n = 2; n <= n_max; ++n) {
        for (std::int64_t p = 0; p <= p_max; ++p) {
            const auto r = dicke::tau_surface_point(n, p);
            writer.row({std::to_string(n), std::to_string(p), fmt(r.concurrence),
                        fmt(r.tau_a), fmt(r.entropy_nats), fmt(r.mean_photons),
                        fmt(r.photon_variance)});
        }
    }
    return 0;
}

int cmd_ckw(int n_atoms, const CommonFlags& flags) {
    const dicke::CkwReport report = dicke::ckw_report_p1(n_atoms);

    OutputStream out(flags.output);
    RowWriter writer(out.get(), flags.format,
                     {"qubit", "tangle", "sum_sq_concurrence", "residual"});
    writer.row({"0", fmt(report.field_tangle), fmt(report.field_sum_sq),
                fmt(report.field_residual)});
    writer.row({"1", fmt(report.atom_tangle), fmt(report.atom_sum_sq),
                fmt(report.atom_residual)});

    if (std::abs(report.field_residual) > 1e-9 || std::abs(report.atom_residual) > 1e-9) {
        std::cerr << "ckw: monogamy residual above 1e-9\n";
        return kExitSelfCheck;
    }
    return 0;
}

int cmd_oracle_check(int n_atoms, double omega, int cutoff, int samples,
                     const CommonFlags& flags) {
    if (n_atoms > 4) throw std::invalid_argument("oracle-check limited to --atoms <= 4");
    if (samples < 1) throw std::invalid_argument("oracle-check needs --samples >= 1");

    dicke::PhaseModel model(n_atoms, omega);
    const double kappa_max = 3.0 * omega / std::sqrt(static_cast<double>(n_atoms));

    OutputStream out(flags.output);
    std::ostream& os = out.get();

    // every excitation sector visited by the sweep must fit under the
    // cutoff, otherwise the dense ground manifold is truncated
    const std::int64_t p_top = model.ground_excitation(kappa_max).first;
    if (p_top > cutoff) {
        os << "FAIL cutoff-adequacy: ground excitation " << p_top
           << " at kappa_max exceeds photon cutoff " << cutoff
           << " (cutoff too small)\n";
        return kExitSelfCheck;
    }
    os << "PASS cutoff-adequacy " << p_top << "\n";

    int failures = 0;
    auto check = [&](const std::string& name, bool ok, double value) {
        os << (ok ? "PASS " : "FAIL ") << name << " " << fmt(value) << "\n";
        if (!ok) ++failures;
    };

    for (int i = 0; i < samples; ++i) {
        const double kappa = (samples == 1) ? 0.0 : kappa_max * i / (samples - 1);
        const std::string tag = "kappa=" + fmt(kappa / omega);

        const dicke::DenseModel dense =
            dicke::build_dense({n_atoms, omega, kappa}, cutoff);
        check("commutator " + tag, dicke::commutator_inf_norm(dense) <= 1e-12,
              dicke::commutator_inf_norm(dense));

        const dicke::DenseGround ground = dicke::dense_ground(dense);
        const auto [p_star, branch] = model.ground_excitation(kappa);
        const double e_block = model.ground_energy(kappa, p_star);
        check("ground-energy " + tag, std::abs(ground.energy - e_block) <=
                                          1e-9 * std::max(1.0, std::abs(e_block)),
              std::abs(ground.energy - e_block));

        const auto w = dicke::dicke_weights(*branch);
        if (n_atoms >= 2) {
            const auto pair_block = dicke::two_atom_rdm(w, n_atoms);
            const Eigen::MatrixXd pair_dense = dicke::dense_partial_trace(
                ground.state, n_atoms, cutoff, dicke::Subsystem{{0, 1}, false});
            const double err = (pair_block.rho - pair_dense).cwiseAbs().maxCoeff();
            check("two-atom-rdm " + tag, err <= 1e-9, err);
        }

        const Eigen::MatrixXd rho_f = dicke::dense_partial_trace(
            ground.state, n_atoms, cutoff, dicke::Subsystem{{}, true});
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho_f);
        double s_f = 0.0, nbar = 0.0, n2 = 0.0;
        for (Eigen::Index k = 0; k < rho_f.rows(); ++k) {
            const double lam = es.eigenvalues()(k);
            if (lam > 1e-15) s_f -= lam * std::log(lam);
            nbar += static_cast<double>(k) * rho_f(k, k);
            n2 += static_cast<double>(k) * static_cast<double>(k) * rho_f(k, k);
        }
        check("field-entropy " + tag,
              std::abs(s_f - dicke::atom_field_entropy(w)) <= 1e-9,
              std::abs(s_f - dicke::atom_field_entropy(w)));

        const dicke::PhotonStats stats = dicke::photon_statistics(*branch, n_atoms);
        check("photon-mean " + tag, std::abs(nbar - stats.mean) <= 1e-9,
              std::abs(nbar - stats.mean));
        check("photon-variance " + tag,
              std::abs(n2 - nbar * nbar - stats.variance) <= 1e-9,
              std::abs(n2 - nbar * nbar - stats.variance));
    }

    os << (failures ? "FAILED " + std::to_string(failures) + " checks\n" : "ALL PASS\n");
    return failures ? kExitSelfCheck : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state instabilities and entanglement of the resonant Dicke model"};
    app.require_subcommand(1);

    int n_atoms = 0;
    double omega = 1.0;
    double kappa_min = 0.0, kappa_max = 0.0;
    int steps = 101, max_j = 3, threads = 1, n_max = 2, cutoff = 10, samples = 20;
    std::int64_t p_max = 1;
    CommonFlags flags;

    auto* scan = app.add_subcommand("scan", "Sweep kappa and emit ground-state observables");
    scan->add_option("--atoms", n_atoms, "Number of atoms N")->required();
    scan->add_option("--omega", omega, "Resonance frequency")->capture_default_str();
    scan->add_option("--kappa-min", kappa_min, "Lower end of the kappa grid")
        ->capture_default_str();
    scan->add_option("--kappa-max", kappa_max, "Upper end of the kappa grid")->required();
    scan->add_option("--steps", steps, "Grid points, endpoints included")
        ->capture_default_str();
    scan->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    add_output_flags(scan, flags);

    auto* critical = app.add_subcommand("critical", "Critical-coupling ladder kappa_j");
    critical->add_option("--atoms", n_atoms, "Number of atoms N")->required();
    critical->add_option("--omega", omega, "Resonance frequency")->capture_default_str();
    critical->add_option("--max-j", max_j, "Largest critical index")->capture_default_str();
    add_output_flags(critical, flags);

    auto* table1 = app.add_subcommand("table1", "Closed forms vs pipeline for p = 0..4");
    table1->add_option("--atoms", n_atoms, "Number of atoms N")->required();
    table1->add_option("--omega", omega, "Resonance frequency")->capture_default_str();
    add_output_flags(table1, flags);

    auto* tau = app.add_subcommand("tau-surface", "tau_A over the (N, p) branch grid");
    tau->add_option("--n-max", n_max, "Largest atom number")->required();
    tau->add_option("--p-max", p_max, "Largest excitation number")->required();
    add_output_flags(tau, flags);

    auto* ckw = app.add_subcommand("ckw", "CKW monogamy saturation report at p = 1");
    ckw->add_option("--atoms", n_atoms, "Number of atoms N")->required();
    add_output_flags(ckw, flags);

    auto* oracle = app.add_subcommand("oracle-check", "Dense-oracle equivalence suite");
    oracle->add_option("--atoms", n_atoms, "Number of atoms N (<= 4)")->required();
    oracle->add_option("--omega", omega, "Resonance frequency")->capture_default_str();
    oracle->add_option("--cutoff", cutoff, "Photon-number cutoff")->capture_default_str();
    oracle->add_option("--samples", samples, "kappa samples in [0, 3/sqrt(N)]")
        ->capture_default_str();
    add_output_flags(oracle, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (scan->parsed()) {
            return cmd_scan(n_atoms, omega, kappa_min, kappa_max, steps, threads, flags);
        }
        if (critical->parsed()) return cmd_critical(n_atoms, omega, max_j, flags);
        if (table1->parsed()) return cmd_table1(n_atoms, omega, flags);
        if (tau->parsed()) return cmd_tau_surface(n_max, p_max, flags);
        if (ckw->parsed()) return cmd_ckw(n_atoms, flags);
        if (oracle->parsed()) {
            return cmd_oracle_check(n_atoms, omega, cutoff, samples, flags);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
