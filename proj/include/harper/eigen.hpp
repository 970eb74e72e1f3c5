#pragma once

#include "harper/errors.hpp"
#include "harper/lattice.hpp"

#include <vector>

namespace harper::eigen {

using lattice::cdouble;
using lattice::HermitianMatrix;
using lattice::OperatorSpec;

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double residual)
        : NumericalError(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

struct EigenDecomposition {
    std::vector<double> values;                 // ascending
    std::vector<std::vector<cdouble>> vectors;  // vectors[j] pairs with values[j]
    double residual;                            // max_j |A v_j - values[j] v_j|_2
};

struct JacobiOptions {
    int max_sweeps = 60;
    double tol_factor = 1e-13; // converged when off-diagonal mass < tol * |A|_F
};

// Full decomposition by row-cyclic complex Jacobi rotations. The sweep order
// is fixed (upper triangle, row by row) so results are deterministic. Throws
// ConvergenceError carrying the remaining off-diagonal mass if max_sweeps is
// exhausted. No eigenvector basis is singled out inside degenerate clusters;
// only values and residual are contractual.
EigenDecomposition eigen_hermitian(const HermitianMatrix& A,
                                   const JacobiOptions& opt = {});

// Band energies over the boundary-phase grid xi_i = e^{2 pi i m_i / grid_n},
// m_i = 1..grid_n. energies[(m1-1)*grid_n + (m2-1)] is the sorted spectrum at
// (m1, m2); grid points may be solved in parallel but the layout is fixed, so
// output does not depend on the thread count.
struct BandGrid {
    int grid_n = 0;
    int matrix_dim = 0;
    std::vector<std::vector<double>> energies;

    const std::vector<double>& at(int m1, int m2) const;
};

BandGrid band_sweep(const OperatorSpec& spec, int grid_n, unsigned threads = 1);

} // namespace harper::eigen
