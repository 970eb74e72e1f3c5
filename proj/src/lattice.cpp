#include "harper/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace harper::lattice {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kUnitTol = 1e-14;

bool unit_modulus(cdouble z, double tol)
{
    return std::abs(std::abs(z) - 1.0) <= tol;
}
} // namespace

bool is_odd_prime(long long n)
{
    if (n < 3 || n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void OperatorSpec::validate() const
{
    if (!is_odd_prime(a) || !is_odd_prime(b))
        throw ValidationError("periods a, b must be odd primes; got a = " +
                              std::to_string(a) + ", b = " + std::to_string(b));
    if (a == b)
        throw ValidationError("periods must be distinct, got a = b = " +
                              std::to_string(a));
    if (!unit_modulus(xi1, kUnitTol) || !unit_modulus(xi2, kUnitTol))
        throw ValidationError("boundary phases must be unit modulus to 1e-14");
}

HermitianMatrix::HermitianMatrix(int dim)
    : n_(dim), e_(std::size_t(dim) * dim, cdouble{0.0, 0.0})
{
    if (dim <= 0) throw ValidationError("matrix dimension must be positive");
}

void HermitianMatrix::set(int i, int j, cdouble v)
{
    if (i == j) {
        e_[idx(i, i)] = cdouble{v.real(), 0.0};
    } else {
        e_[idx(i, j)] = v;
        e_[idx(j, i)] = std::conj(v);
    }
}

void HermitianMatrix::add(int i, int j, cdouble v)
{
    set(i, j, e_[idx(i, j)] + v);
}

double HermitianMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (const cdouble& z : e_) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::trace() const
{
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += e_[idx(i, i)].real();
    return t;
}

HermitianMatrix build_harper_matrix(const OperatorSpec& spec)
{
    spec.validate();
    const int a = spec.a, b = spec.b;
    HermitianMatrix M(a * b);
    auto site = [b](int m, int n) { return (m - 1) * b + (n - 1); };

    for (int m = 1; m <= a; ++m) {
        for (int n = 1; n <= b; ++n) {
            // hop m -> m+1 : phase e^{-2 pi i alpha (n + l b)}
            const double ph =
                -kTwoPi * spec.alpha * (n + double(spec.comp_l) * b);
            const cdouble th = std::polar(1.0, ph);
            if (m < a)
                M.set(site(m, n), site(m + 1, n), th);
            else
                M.set(site(a, n), site(1, n), th * spec.xi1);
            // hop n -> n+1 : phase e^{-2 pi i beta (m + k a)}
            const double pv =
                -kTwoPi * spec.beta * (m + double(spec.comp_k) * a);
            const cdouble tv = std::polar(1.0, pv);
            if (n < b)
                M.set(site(m, n), site(m, n + 1), tv);
            else
                M.set(site(m, b), site(m, 1), tv * spec.xi2);
        }
    }
    return M;
}

HermitianMatrix am_ring_matrix(const std::vector<double>& potential, cdouble xi)
{
    const int a = static_cast<int>(potential.size());
    if (a < 1) throw ValidationError("ring needs at least one site");
    if (!unit_modulus(xi, kUnitTol))
        throw ValidationError("boundary phase must be unit modulus to 1e-14");

    HermitianMatrix M(a);
    for (int j = 0; j < a; ++j) M.set(j, j, potential[j]);
    if (a == 1) {
        // both neighbors wrap onto the single site
        M.add(0, 0, xi + std::conj(xi));
        return M;
    }
    for (int j = 0; j + 1 < a; ++j) M.add(j, j + 1, 1.0);
    M.add(a - 1, 0, xi); // at a == 2 this lands on the hop above (wrap doubling)
    return M;
}

namespace {
std::vector<double> am_potential(int a, double alpha, int comp_l, double theta)
{
    std::vector<double> v(a);
    for (int j = 1; j <= a; ++j)
        v[j - 1] =
            2.0 * std::cos(kTwoPi * alpha * (j + double(comp_l) * a) + theta);
    return v;
}
} // namespace

HermitianMatrix build_am_matrix(int a, double alpha, int comp_l, cdouble xi,
                                double theta)
{
    if (a < 2)
        throw ValidationError("almost Mathieu matrix needs a >= 2, got " +
                              std::to_string(a));
    return am_ring_matrix(am_potential(a, alpha, comp_l, theta), xi);
}

double char_poly_ring(const std::vector<double>& v, double lambda)
{
    const int a = static_cast<int>(v.size());
    if (a < 1) throw ValidationError("empty potential");
    if (a == 1) return v[0] - lambda;

    // p = tr prod_j [[v_j - lambda, -1], [1, 0]]  (j descending), i.e. the
    // full minor minus the inner one. Renormalize the running product when it
    // grows past 1e150 so values deep outside the spectrum saturate cleanly.
    double m00 = v[0] - lambda, m01 = -1.0, m10 = 1.0, m11 = 0.0;
    double scale_log2 = 0.0;
    for (int j = 1; j < a; ++j) {
        const double d = v[j] - lambda;
        const double t00 = d * m00 - m10;
        const double t01 = d * m01 - m11;
        const double t10 = m00;
        const double t11 = m01;
        m00 = t00; m01 = t01; m10 = t10; m11 = t11;
        const double big = std::max(std::max(std::abs(m00), std::abs(m01)),
                                    std::max(std::abs(m10), std::abs(m11)));
        if (big > 1e150) {
            m00 *= 0x1p-500; m01 *= 0x1p-500;
            m10 *= 0x1p-500; m11 *= 0x1p-500;
            scale_log2 += 500.0;
        }
    }
    const double tr = m00 + m11;
    if (scale_log2 == 0.0) return tr;
    const double mag_log2 = scale_log2 + std::log2(std::max(std::abs(tr), 1e-300));
    if (mag_log2 > 996.0) return tr > 0.0 ? 1e300 : -1e300;
    return tr * std::exp2(scale_log2);
}

double char_poly_am(int a, double alpha, int comp_l, double lambda)
{
    if (a < 2)
        throw ValidationError("char_poly_am needs a >= 2, got " +
                              std::to_string(a));
    return char_poly_ring(am_potential(a, alpha, comp_l, 0.0), lambda);
}

double fourier_mode_value(const OperatorSpec& spec, const FourierMode& mode,
                          cdouble z1, cdouble z2)
{
    if (!unit_modulus(z1, 1e-12) || !unit_modulus(z2, 1e-12))
        throw ValidationError("fourier_mode_value requires |z1| = |z2| = 1");
    if (mode.m < 1 || mode.m > spec.a || mode.n < 1 || mode.n > spec.b ||
        mode.p < 1 || mode.p > spec.a || mode.q < 1 || mode.q > spec.b)
        throw ValidationError("mode indices out of range");

    const double kappa1 = std::arg(z1) / kTwoPi;
    const double kappa2 = std::arg(z2) / kTwoPi;
    const double phi1 =
        kTwoPi * (kappa1 + spec.alpha * (mode.n + double(spec.comp_l) * spec.b)) +
        kTwoPi * mode.p / spec.a;
    const double phi2 =
        kTwoPi * (kappa2 + spec.beta * (mode.m + double(spec.comp_k) * spec.a)) +
        kTwoPi * mode.q / spec.b;
    return 2.0 * std::cos(phi1) + 2.0 * std::cos(phi2);
}

} // namespace harper::lattice
