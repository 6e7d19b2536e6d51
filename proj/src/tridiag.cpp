#include "dicke/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dicke {

namespace tridiag {

double gershgorin_radius(std::span<const double> offdiag) {
    const std::size_t n = offdiag.size() + 1;
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        if (i > 0) row += std::abs(offdiag[i - 1]);
        if (i < n - 1) row += std::abs(offdiag[i]);
        r = std::max(r, row);
    }
    return r;
}

int count_below(std::span<const double> offdiag, double x) {
    // Sturm sequence via the LDL^T pivots q_i = d_i - x - e_{i-1}^2 / q_{i-1};
    // the number of negative pivots counts eigenvalues below x.
    const std::size_t n = offdiag.size() + 1;
    const double pivmin = std::numeric_limits<double>::min();
    int count = 0;
    double q = -x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(q) < pivmin) q = (q < 0.0) ? -pivmin : pivmin;
        q = -x - offdiag[i - 1] * offdiag[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

namespace {

// k-th smallest eigenvalue (k >= 1) by bisection on the Sturm count.
double bisect_kth(std::span<const double> offdiag, int k, double abs_tol) {
    const double r = gershgorin_radius(offdiag);
    double lo = -r - abs_tol;
    double hi = r + abs_tol;
    while (hi - lo > abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (count_below(offdiag, mid) >= k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Solve (T - shift I) x = b for zero-diagonal tridiagonal T using LU with
// partial pivoting (two superdiagonals in the U factor).
void solve_shifted(std::span<const double> offdiag, double shift,
                   std::vector<double>& x) {
    const std::size_t n = offdiag.size() + 1;
    std::vector<double> d(n, -shift);   // main diagonal of U
    std::vector<double> du1(n, 0.0);    // first superdiagonal
    std::vector<double> du2(n, 0.0);    // second superdiagonal (fill-in)
    std::vector<double> dl(n, 0.0);     // subdiagonal entering row i+1
    for (std::size_t i = 0; i + 1 < n; ++i) {
        du1[i] = offdiag[i];
        dl[i + 1] = offdiag[i];
    }
    const double tiny = std::numeric_limits<double>::min();

    std::vector<char> swapped(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i + 1]) > std::abs(d[i])) {
            std::swap(d[i], dl[i + 1]);
            std::swap(du1[i], d[i + 1]);
            if (i + 2 < n) {
                du2[i] = du1[i + 1];
                du1[i + 1] = 0.0;
            }
            std::swap(x[i], x[i + 1]);
            swapped[i] = 1;
        }
        if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0.0) ? -tiny : tiny;
        const double m = dl[i + 1] / d[i];
        d[i + 1] -= m * du1[i];
        if (i + 2 < n) du1[i + 1] -= m * du2[i];
        x[i + 1] -= m * x[i];
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = (d[n - 1] < 0.0) ? -tiny : tiny;

    // back substitution
    x[n - 1] /= d[n - 1];
    if (n >= 2) {
        x[n - 2] = (x[n - 2] - du1[n - 2] * x[n - 1]) / d[n - 2];
    }
    for (std::size_t ip = n; ip >= 3; --ip) {
        const std::size_t i = ip - 3;
        x[i] = (x[i] - du1[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
}

double residual_inf(std::span<const double> offdiag, double lambda,
                    const std::vector<double>& v) {
    const std::size_t n = v.size();
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double tv = -lambda * v[i];
        if (i > 0) tv += offdiag[i - 1] * v[i - 1];
        if (i < n - 1) tv += offdiag[i] * v[i + 1];
        res = std::max(res, std::abs(tv));
    }
    return res;
}

void normalize(std::vector<double>& v) {
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;
}

}  // namespace

}  // namespace tridiag

GroundBranch ground_eigenpair(const SubspaceBlock& block) {
    GroundBranch branch;
    branch.p = block.p;

    if (block.dim == 1) {
        branch.k_slope = 0.0;
        branch.amplitudes = {1.0};
        branch.weights = {1.0};
        return branch;
    }

    const std::span<const double> e(block.offdiag);
    const double radius = tridiag::gershgorin_radius(e);
    const double lambda = tridiag::bisect_kth(e, 1, 1e-13 * radius);

    // Inverse iteration at the bisection shift. The all-ones start is
    // deterministic; on stagnation each component i is rescaled by
    // 1 + 1e-8*i and the iteration restarted. Keep iterating past the
    // contract bound while the residual still improves.
    const std::size_t n = static_cast<std::size_t>(block.dim);
    const double res_tol = 1e-10 * std::max(1.0, std::abs(lambda));
    const double tight_tol = 1e-14 * std::max(1.0, std::abs(lambda));
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> best_v = v;
    double best_res = tridiag::residual_inf(e, lambda, v);
    bool perturbed = false;
    int stagnant = 0;
    for (int iter = 0; iter < 60; ++iter) {
        tridiag::solve_shifted(e, lambda, v);
        tridiag::normalize(v);
        const double res = tridiag::residual_inf(e, lambda, v);
        if (res < best_res) {
            best_res = res;
            best_v = v;
            stagnant = 0;
        } else {
            ++stagnant;
        }
        if (best_res <= tight_tol) break;
        if (stagnant >= 2 && iter >= 3) {
            if (best_res <= res_tol || perturbed) break;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] *= 1.0 + 1e-8 * static_cast<double>(i);
            }
            tridiag::normalize(v);
            perturbed = true;
            stagnant = 0;
        }
    }
    v = std::move(best_v);
    if (best_res > res_tol) {
        throw std::runtime_error("inverse iteration failed to converge");
    }

    if (v[0] < 0.0) {
        for (double& x : v) x = -x;
    }

    branch.k_slope = lambda;
    branch.amplitudes = std::move(v);
    branch.weights.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        branch.weights[s] = branch.amplitudes[s] * branch.amplitudes[s];
    }
    return branch;
}

std::vector<double> full_spectrum(const SubspaceBlock& block) {
    std::vector<double> lambdas(block.dim);
    if (block.dim == 1) {
        lambdas[0] = 0.0;
        return lambdas;
    }
    const std::span<const double> e(block.offdiag);
    for (int k = 0; k < block.dim; ++k) {
        lambdas[k] = tridiag::bisect_kth(e, k + 1, 1e-12);
    }
    std::sort(lambdas.begin(), lambdas.end());
    return lambdas;
}

}  // namespace dicke
