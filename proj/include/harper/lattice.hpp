#pragma once

#include "harper/errors.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace harper::lattice {

using cdouble = std::complex<double>;

bool is_odd_prime(long long n);

// Parameters of the two-dimensional spectral problem: periods a, b (distinct
// odd primes), flux phases alpha, beta, the component indices (k, l) of the
// countable family, and the unit-modulus boundary phases xi1, xi2.
struct OperatorSpec {
    int a = 3;
    int b = 5;
    double alpha = 0.0;
    double beta = 0.0;
    int comp_k = 0;
    int comp_l = 0;
    cdouble xi1{1.0, 0.0};
    cdouble xi2{1.0, 0.0};

    void validate() const; // throws ValidationError
};

// Dense complex matrix kept Hermitian by construction: set(i, j, v) mirrors
// conj(v) into (j, i), and diagonal writes keep only the real part. Entry
// (i, j) == conj(entry (j, i)) holds exactly, not up to rounding.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int dim);

    int dim() const { return n_; }
    const cdouble& operator()(int i, int j) const { return e_[idx(i, j)]; }

    void set(int i, int j, cdouble v);
    void add(int i, int j, cdouble v);

    double frobenius_norm() const;
    double trace() const;

    const std::vector<cdouble>& data() const { return e_; }

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * n_ + j; }
    int n_;
    std::vector<cdouble> e_;
};

// One Fourier mode of the lifted problem: site indices (m, n) and root-of-unity
// exponents (p, q) with 1 <= m, p <= a and 1 <= n, q <= b.
struct FourierMode {
    int m;
    int n;
    int p;
    int q;
};

// The ab x ab matrix of the spectral problem at boundary phases (xi1, xi2).
// Sites (m, n) are flattened row-major as (m-1)*b + (n-1). Bulk hops carry
// e^{-2 pi i alpha (n + l b)} horizontally and e^{-2 pi i beta (m + k a)}
// vertically; the wraparound hop carries the same magnetic phase times the
// boundary phase, which keeps the matrix exactly Hermitian for |xi| = 1 and
// reproduces the DFT spectrum at zero flux.
HermitianMatrix build_harper_matrix(const OperatorSpec& spec);

// Ring of size a with explicit on-site potential, hopping 1, and corner
// phase xi. For a <= 2 the two hops between a pair of sites combine
// (wrap doubling); for a == 1 the diagonal picks up xi + conj(xi).
HermitianMatrix am_ring_matrix(const std::vector<double>& potential, cdouble xi);

// Almost Mathieu matrix: diagonal 2 cos(2 pi alpha (j + l a) + theta) for
// j = 1..a, unit sub/super diagonals, corners xi and conj(xi). Non-prime a is
// accepted so continued-fraction denominators are usable. theta offsets the
// potential phase (used by the band-edge construction); default 0.
HermitianMatrix build_am_matrix(int a, double alpha, int comp_l, cdouble xi,
                                double theta = 0.0);

// Characteristic polynomial p(lambda) of the almost Mathieu ring, evaluated by
// the three-term minor recurrence: p = D_a - D_{2..a-1}, the trace of the
// transfer product, with leading term (-lambda)^a and subleading coefficient
// 2 sum_j cos(2 pi alpha (j + l a)). The spectrum at fixed flux is exactly
// { lambda : p(lambda) in [-2, 2] }.
double char_poly_am(int a, double alpha, int comp_l, double lambda);

// Same recurrence on an explicit potential; rescaled internally so values far
// outside the spectrum saturate instead of overflowing.
double char_poly_ring(const std::vector<double>& potential, double lambda);

// Scalar value of one Fourier mode at covering coordinates (z1, z2) on the
// unit torus:
//   2 cos(2 pi (kappa1 + alpha (n + l b)) + 2 pi p / a)
// + 2 cos(2 pi (kappa2 + beta  (m + k a)) + 2 pi q / b),  z_i = e^{2 pi i kappa_i}.
double fourier_mode_value(const OperatorSpec& spec, const FourierMode& mode,
                          cdouble z1, cdouble z2);

// Measured discrepancy between the matrix spectrum and the diagonal Fourier-
// mode model over a grid x grid torus of boundary phases. The mode multiset
// enumerates the covering fiber (p, q) at fixed site indices (m, n) = (a, b).
// Exact agreement is expected only at zero flux, where the translations
// commute; away from it the deviation is reported, not asserted.
struct FactorizationReport {
    int grid;
    double max_dev;
    double mean_dev;
};

FactorizationReport factorization_report(const OperatorSpec& spec, int grid);

} // namespace harper::lattice
