#pragma once

#include "harper/lattice.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace harper::dos {

using lattice::OperatorSpec;

enum class Method { elliptic, counting, am_formula };
enum class Flag { ok, divergent, out_of_band };

const char* method_name(Method m);
const char* flag_name(Flag f);

struct Point {
    double value;
    Flag flag;
};

// Sampled lambda -> density curve. CSV layout: header "lambda,value,flag",
// one row per grid point, shortest round-trip decimals (17 significant digits
// maximum).
struct DosCurve {
    std::vector<double> lambdas;
    std::vector<double> values;
    std::vector<Flag> flags;
    Method method = Method::elliptic;
    std::string meta;

    void write_csv(std::ostream& os) const;
};

// Integrated density of states by eigenvalue counting: the fraction of all
// band_sweep(spec, n) eigenvalues <= lambda. Nondecreasing in lambda; 0 below
// the band, 1 above it.
double ids_counting(const OperatorSpec& spec, int n, double lambda,
                    unsigned threads = 1);

// Closed form (1+k) K(k) / (2 pi^2 a b) with k = (4-|lambda|)/(4+|lambda|).
// Symmetric under lambda -> -lambda. lambda = 0 is flagged divergent (value
// +inf); |lambda| > 4 returns 0 flagged out_of_band.
Point dos_elliptic(double lambda, int a, int b);

DosCurve dos_curve_elliptic(int a, int b, int steps);

// Empirical d rho / d lambda: histogram of all band_sweep eigenvalues into
// `bins` equal bins over [-4, 4], normalized to integrate to 1.
DosCurve dos_counting_derivative(const OperatorSpec& spec, int n, int bins,
                                 unsigned threads = 1);

// Almost Mathieu counting-measure density
//   1/(4 pi a) sum_{l in window} sum_{j=1..a} 1/sqrt(1 - (lambda/2 - cos(2 pi alpha (j+l a)))^2).
// Terms with nonpositive radicand contribute no state and are skipped; a
// radicand within 1e-12 of zero marks a band edge and flags the point
// divergent (the term itself is dropped, being a zero-measure edge).
Point dos_am(double lambda, int a, double alpha, const std::vector<int>& window);

DosCurve dos_curve_am(int a, double alpha, const std::vector<int>& window,
                      int steps);

} // namespace harper::dos
