#include "harper/elliptic.hpp"

#include "harper/errors.hpp"
#include "harper/quadrature.hpp"

#include <cmath>
#include <string>

namespace harper::elliptic {

namespace {
constexpr double kDivergenceGuard = 1e-10;
}

EllipticModulus::EllipticModulus(double k) : k_(k)
{
    if (!(k >= 0.0) || !(k < 1.0))
        throw ValidationError("elliptic modulus must satisfy 0 <= k < 1, got " +
                              std::to_string(k));
}

EllipticModulus EllipticModulus::from_lambda(double lambda)
{
    const double al = std::abs(lambda);
    if (!(al > 0.0) || !(al <= 4.0))
        throw ValidationError("modulus map requires 0 < |lambda| <= 4, got " +
                              std::to_string(lambda));
    return EllipticModulus((4.0 - al) / (4.0 + al));
}

double lambda_from_modulus(double k)
{
    return 4.0 * (1.0 - k) / (1.0 + k);
}

double complete_k(EllipticModulus k)
{
    const double kk = k.value();
    if (kk > 1.0 - kDivergenceGuard)
        throw NumericalError("K(k) diverges logarithmically as k -> 1; k = " +
                             std::to_string(kk) + " is inside the guard band");
    double a = 1.0;
    double b = std::sqrt((1.0 - kk) * (1.0 + kk));
    for (int it = 0; it < 60 && std::abs(a - b) > 1e-15 * a; ++it) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return M_PI / (a + b);
}

double incomplete_f(double x, EllipticModulus k)
{
    if (!(x >= -1.0) || !(x <= 1.0))
        throw ValidationError("incomplete_f requires |x| <= 1, got " +
                              std::to_string(x));
    if (x == 0.0) return 0.0;
    const double k2 = k.value() * k.value();
    // t = sin(theta) removes the 1/sqrt(1 - t^2) endpoint singularity
    const double theta = std::asin(std::abs(x));
    const double val = integrate(
        [k2](double th) {
            const double s = std::sin(th);
            return 1.0 / std::sqrt(1.0 - k2 * s * s);
        },
        0.0, theta, 1e-11);
    return x > 0.0 ? val : -val;
}

double landen_check(EllipticModulus k)
{
    const double kk = k.value();
    const double ascended = 2.0 * std::sqrt(kk) / (1.0 + kk);
    return std::abs((1.0 + kk) * complete_k(k) -
                    complete_k(EllipticModulus(ascended)));
}

} // namespace harper::elliptic
