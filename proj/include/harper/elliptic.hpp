#pragma once

namespace harper::elliptic {

// Elliptic modulus k in [0, 1).
//
// The spectral map is k = (4 - |lambda|) / (4 + |lambda|); lambda -> 0 pushes
// k -> 1 where K(k) diverges logarithmically (the Van Hove singularity), so
// complete_k refuses k inside (1 - 1e-10, 1) instead of extrapolating.
class EllipticModulus {
public:
    explicit EllipticModulus(double k);

    // k from an energy with 0 < |lambda| <= 4.
    static EllipticModulus from_lambda(double lambda);

    double value() const { return k_; }

private:
    double k_;
};

// Inverse of from_lambda on (0, 4]: lambda = 4(1-k)/(1+k).
double lambda_from_modulus(double k);

// Complete elliptic integral of the first kind K(k), by the arithmetic-
// geometric mean iteration (terminates when the means agree to 1e-15
// relative). Throws for k > 1 - 1e-10.
double complete_k(EllipticModulus k);

// Incomplete integral F(x, k) = int_0^x dt / sqrt((1-t^2)(1-k^2 t^2)) for
// |x| <= 1, via t = sin(theta) and adaptive quadrature. |error| <= 1e-10.
double incomplete_f(double x, EllipticModulus k);

// Residual |(1+k) K(k) - K(2 sqrt(k)/(1+k))| of the Landen identity.
double landen_check(EllipticModulus k);

} // namespace harper::elliptic
