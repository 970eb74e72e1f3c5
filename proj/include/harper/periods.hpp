#pragma once

#include "harper/elliptic.hpp"

#include <utility>

namespace harper::periods {

using elliptic::EllipticModulus;

// Real periods of the curves  E_k: y^2 = (t^2-1)(t^2-k^2)  and its partner
// E_{1/k}, each integrated over the cycle named in the comment. Branches are
// chosen so that all four values are positive; the pair satisfies
// gamma_inv = k * gamma_k and delta_inv = k * delta_k.
struct EllipticCurvePair {
    double k;
    double gamma_k;    // cycle through (-k, k) on E_k
    double gamma_inv;  // cycle through (-1, 1) on E_{1/k}
    double delta_k;    // cycle through (k, 1) on E_k
    double delta_inv;  // cycle through (1, 1/k) on E_{1/k}

    static EllipticCurvePair compute(EllipticModulus k);
};

// 2 * int_{-k}^{k} dt / sqrt((1-t^2)(k^2-t^2)), evaluated through t = k sin(theta)
// so both endpoint singularities disappear. Analytically equals 4 K(k).
double period_gamma(EllipticModulus k);

// Ratios (delta_k/gamma_k, delta_inv/gamma_inv). The two agree: the modulus of
// the framed curve is invariant under the k <-> 1/k rescaling.
std::pair<double, double> tau_invariant(EllipticModulus k);

// Density of states of one Fermi-curve component as a sum of two half-periods:
// (gamma_k + k gamma_k) / (8 pi^2 a b) with k = (4-|lambda|)/(4+|lambda|).
// lambda = 0 throws NumericalError (divergent); |lambda| > 4 throws
// ValidationError; |lambda| = 4 is the k = 0 edge value.
double dos_from_half_periods(double lambda, int a, int b);

} // namespace harper::periods
