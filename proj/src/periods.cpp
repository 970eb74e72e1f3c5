#include "harper/periods.hpp"

#include "harper/errors.hpp"
#include "harper/quadrature.hpp"

#include <cmath>
#include <string>

namespace harper::periods {

namespace {

constexpr double kTol = 1e-11;

double require_interior(EllipticModulus k)
{
    const double kk = k.value();
    if (!(kk > 0.0))
        throw ValidationError("period integrals require k in (0, 1), got " +
                              std::to_string(kk));
    return kk;
}

// All four integrands below are the dt/y periods after a trigonometric
// substitution that absorbs the endpoint square-root singularities.

double gamma_k_integral(double k)
{
    const double k2 = k * k;
    return 2.0 * integrate(
        [k2](double th) {
            const double s = std::sin(th);
            return 1.0 / std::sqrt(1.0 - k2 * s * s);
        },
        -M_PI / 2.0, M_PI / 2.0, kTol);
}

double gamma_inv_integral(double k)
{
    const double k2 = k * k;
    return 2.0 * integrate(
        [k, k2](double th) {
            const double s = std::sin(th);
            return k / std::sqrt(1.0 - k2 * s * s);
        },
        -M_PI / 2.0, M_PI / 2.0, kTol);
}

double delta_k_integral(double k)
{
    const double k2 = k * k;
    const double kp2 = 1.0 - k2; // t^2 = k^2 + (1-k^2) sin^2 u
    return 2.0 * integrate(
        [k2, kp2](double u) {
            const double s = std::sin(u);
            return 1.0 / std::sqrt(k2 + kp2 * s * s);
        },
        0.0, M_PI / 2.0, kTol);
}

double delta_inv_integral(double k)
{
    const double r = (1.0 - k * k) / (k * k); // t^2 = 1 + r sin^2 u
    return 2.0 * integrate(
        [r](double u) {
            const double s = std::sin(u);
            return 1.0 / std::sqrt(1.0 + r * s * s);
        },
        0.0, M_PI / 2.0, kTol);
}

} // namespace

EllipticCurvePair EllipticCurvePair::compute(EllipticModulus km)
{
    const double k = require_interior(km);
    EllipticCurvePair pair;
    pair.k = k;
    pair.gamma_k = gamma_k_integral(k);
    pair.gamma_inv = gamma_inv_integral(k);
    pair.delta_k = delta_k_integral(k);
    pair.delta_inv = delta_inv_integral(k);
    return pair;
}

double period_gamma(EllipticModulus km)
{
    return gamma_k_integral(require_interior(km));
}

std::pair<double, double> tau_invariant(EllipticModulus km)
{
    const EllipticCurvePair pair = EllipticCurvePair::compute(km);
    return {pair.delta_k / pair.gamma_k, pair.delta_inv / pair.gamma_inv};
}

double dos_from_half_periods(double lambda, int a, int b)
{
    if (a < 1 || b < 1)
        throw ValidationError("dos_from_half_periods requires a, b >= 1");
    const double al = std::abs(lambda);
    if (al == 0.0)
        throw NumericalError("density of states diverges at lambda = 0 "
                             "(Van Hove singularity)");
    if (al > 4.0)
        throw ValidationError("lambda outside the band [-4, 4]");
    const double k = (4.0 - al) / (4.0 + al);
    // k == 0 at the band edge: the gamma cycle degenerates to 4 K(0) = 2 pi.
    const double gamma = k == 0.0 ? 2.0 * M_PI
                                  : gamma_k_integral(k);
    return (gamma + k * gamma) / (8.0 * M_PI * M_PI * a * b);
}

} // namespace harper::periods
