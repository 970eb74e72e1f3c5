#include "harper/eigen.hpp"

#include "harper/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace harper::eigen {

namespace {

double offdiag_norm(const std::vector<cdouble>& a, int n)
{
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += std::norm(a[std::size_t(i) * n + j]);
    return std::sqrt(2.0 * s);
}

} // namespace

EigenDecomposition eigen_hermitian(const HermitianMatrix& A,
                                   const JacobiOptions& opt)
{
    const int n = A.dim();
    std::vector<cdouble> a = A.data();
    std::vector<cdouble> v(std::size_t(n) * n, cdouble{0.0, 0.0});
    for (int i = 0; i < n; ++i) v[std::size_t(i) * n + i] = 1.0;

    auto at = [n](std::vector<cdouble>& m, int i, int j) -> cdouble& {
        return m[std::size_t(i) * n + j];
    };

    const double fro = A.frobenius_norm();
    const double thresh = opt.tol_factor * fro;

    int sweep = 0;
    while (true) {
        const double off = offdiag_norm(a, n);
        if (off <= thresh) break;
        if (sweep >= opt.max_sweeps)
            throw ConvergenceError(
                "Jacobi eigensolver did not converge in " +
                    std::to_string(opt.max_sweeps) +
                    " sweeps (off-diagonal mass " + std::to_string(off) + ")",
                off);
        ++sweep;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble apq = at(a, p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;

                const double app = at(a, p, p).real();
                const double aqq = at(a, q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble u = apq / mag;
                const cdouble cu = std::conj(u);

                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const cdouble aip = at(a, i, p);
                    const cdouble aiq = at(a, i, q);
                    const cdouble nip = c * aip - s * cu * aiq;
                    const cdouble niq = s * u * aip + c * aiq;
                    at(a, i, p) = nip;
                    at(a, p, i) = std::conj(nip);
                    at(a, i, q) = niq;
                    at(a, q, i) = std::conj(niq);
                }
                const double napp = c * c * app + s * s * aqq - 2.0 * c * s * mag;
                const double naqq = s * s * app + c * c * aqq + 2.0 * c * s * mag;
                at(a, p, p) = napp;
                at(a, q, q) = naqq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;

                for (int i = 0; i < n; ++i) {
                    const cdouble vip = at(v, i, p);
                    const cdouble viq = at(v, i, q);
                    at(v, i, p) = c * vip - s * cu * viq;
                    at(v, i, q) = s * u * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[std::size_t(i) * n + i].real() < a[std::size_t(j) * n + j].real();
    });

    EigenDecomposition dec;
    dec.values.resize(n);
    dec.vectors.assign(n, std::vector<cdouble>(n));
    for (int j = 0; j < n; ++j) {
        dec.values[j] = a[std::size_t(order[j]) * n + order[j]].real();
        for (int i = 0; i < n; ++i)
            dec.vectors[j][i] = v[std::size_t(i) * n + order[j]];
    }

    // residual against the original matrix
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            cdouble acc = -dec.values[j] * dec.vectors[j][i];
            for (int k = 0; k < n; ++k) acc += A(i, k) * dec.vectors[j][k];
            r2 += std::norm(acc);
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    dec.residual = worst;
    return dec;
}

const std::vector<double>& BandGrid::at(int m1, int m2) const
{
    return energies[std::size_t(m1 - 1) * grid_n + (m2 - 1)];
}

BandGrid band_sweep(const OperatorSpec& spec, int grid_n, unsigned threads)
{
    if (grid_n < 1) throw ValidationError("band_sweep requires grid_n >= 1");
    spec.validate();

    BandGrid grid;
    grid.grid_n = grid_n;
    grid.matrix_dim = spec.a * spec.b;
    grid.energies.resize(std::size_t(grid_n) * grid_n);

    parallel_for(grid.energies.size(), threads, [&](std::size_t idx) {
        const int m1 = static_cast<int>(idx) / grid_n + 1;
        const int m2 = static_cast<int>(idx) % grid_n + 1;
        OperatorSpec point = spec;
        point.xi1 = std::polar(1.0, 2.0 * M_PI * m1 / grid_n);
        point.xi2 = std::polar(1.0, 2.0 * M_PI * m2 / grid_n);
        try {
            grid.energies[idx] =
                eigen_hermitian(build_harper_matrix(point)).values;
        } catch (const ConvergenceError& e) {
            throw NumericalError("band_sweep failed at grid point (" +
                                 std::to_string(m1) + ", " + std::to_string(m2) +
                                 "): " + e.what());
        }
    });
    return grid;
}

} // namespace harper::eigen
