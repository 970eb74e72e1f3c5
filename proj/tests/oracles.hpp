// Independent reference implementations used only by the tests. These stay
// deliberately separate from the library's computational paths: series where
// the library uses AGM, tanh-sinh quadrature where it uses adaptive Simpson,
// LU determinants and DFT closed forms where it uses recurrences and Jacobi
// sweeps.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

// K(k) by the Maclaurin series (pi/2) sum ((2n)!/(2^2n (n!)^2))^2 k^2n.
inline double k_series(double k, int terms = 200)
{
    double sum = 0.0;
    double coeff = 1.0;
    double kpow = 1.0;
    for (int n = 0; n < terms; ++n) {
        sum += coeff * coeff * kpow;
        kpow *= k * k;
        coeff *= (2.0 * n + 1.0) / (2.0 * n + 2.0);
    }
    return M_PI / 2.0 * sum;
}

// sorted zero-flux Harper spectrum at boundary angles (t1, t2) in [0, 1)
inline std::vector<double> dft_spectrum(int a, int b, double t1, double t2)
{
    std::vector<double> ev;
    ev.reserve(a * b);
    for (int p = 0; p < a; ++p)
        for (int q = 0; q < b; ++q)
            ev.push_back(2.0 * std::cos(2.0 * M_PI * (t1 + p) / a) +
                         2.0 * std::cos(2.0 * M_PI * (t2 + q) / b));
    std::sort(ev.begin(), ev.end());
    return ev;
}

// determinant of a dense complex matrix by LU with partial pivoting
inline std::complex<double> lu_det(std::vector<std::complex<double>> m, int n)
{
    std::complex<double> det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col]))
                pivot = r;
        if (std::abs(m[pivot * n + col]) == 0.0) return {0.0, 0.0};
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m[pivot * n + c], m[col * n + c]);
            det = -det;
        }
        det *= m[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const std::complex<double> f = m[r * n + col] / m[col * n + col];
            for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
        }
    }
    return det;
}

// tanh-sinh quadrature on (a, b); tolerates integrable endpoint
// singularities (log, inverse square root)
inline double tanh_sinh(const std::function<double(double)>& f, double a,
                        double b, int levels = 12)
{
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double tmax = 3.8;
    auto term = [&](double t) {
        const double sh = M_PI / 2.0 * std::sinh(t);
        const double x = c + r * std::tanh(sh);
        if (x <= a || x >= b) return 0.0;
        const double ch = std::cosh(sh);
        const double w = r * (M_PI / 2.0) * std::cosh(t) / (ch * ch);
        return w * f(x);
    };
    double sum = term(0.0);
    for (double t = 1.0; t < tmax; t += 1.0) sum += term(t) + term(-t);
    double h = 1.0;
    double integral = h * sum;
    for (int level = 1; level <= levels; ++level) {
        h /= 2.0;
        for (double t = h; t < tmax; t += 2.0 * h) sum += term(t) + term(-t);
        const double refined = h * sum;
        if (level > 3 &&
            std::abs(refined - integral) <
                1e-13 * std::max(1.0, std::abs(refined)))
            return refined;
        integral = refined;
    }
    return integral;
}

// central binomial walk count: the 2m-th moment of the square-lattice DOS is
// C(2m, m)^2, so the component zeta at even order 2m equals C(2m, m)^2 / 2
inline double central_binomial(int m)
{
    double c = 1.0;
    for (int i = 1; i <= m; ++i) c = c * (m + i) / i;
    return c;
}

} // namespace oracles
