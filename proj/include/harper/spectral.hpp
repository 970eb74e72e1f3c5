#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harper::spectral {

enum class Method { harper_elliptic, am_winding, am_quadrature };

const char* method_name(Method m);

struct ZetaEntry {
    int s;
    double value;
    Method method;
    std::string component; // "k:l:m:n" or "l:j", "-" when not applicable
};

// CSV layout: header "s,value,method,component".
struct ZetaTable {
    std::vector<ZetaEntry> entries;
    void write_csv(std::ostream& os) const;
};

// Harper spectral moments on one component:
//   zeta(s) = 4^{s+1} / (pi^2 a b) * int_0^1 ((1-k)/(1+k))^s K(k)/(1+k) dk
// for even s; odd moments vanish by electron-hole symmetry and are returned as
// exact 0. s = 0 gives the total mass 1/(2ab), pinning
// int_0^1 K(k)/(1+k) dk = pi^2 / 8. The K log-singularity at k = 1 is handled
// by subtracting ln(4/sqrt(1-k^2)) with its closed-form integral at s = 0; for
// s >= 2 the (1-k)^s factor tames it. Absolute error <= 1e-8. s > 40 is
// rejected (quadrature conditioning bound).
double zeta_harper(int s, int a, int b);

struct PartitionResult {
    double value;
    double truncation; // magnitude of the last series term
    bool converged;    // truncation <= 1e-10 * |value|
};

// Z(t) = 1/(2ab) + sum_{m=1..order} zeta(2m) t^{2m} / (2m)!, an even series.
// order counts series terms (order <= 20, so moments up to s = 40); |t| <= 10.
PartitionResult partition_harper(double t, int a, int b, int order);

// Integer moments of the almost Mathieu component (l, j) extracted as the
// constant Fourier coefficient of (xi + 1/xi + c)^n on |xi| = 1 with
// c = 2 cos(2 pi alpha (j + l a)):
//   sum_{2k <= n} n! c^{n-2k} / ((k!)^2 (n-2k)!),
// the binomials assembled as C(n,2k) C(2k,k) in integer arithmetic. The
// companion xi^1-coefficient sum integrates to zero along the closed contour
// and contributes nothing. n <= 30.
double zeta_am_winding(int n, int a, double alpha, int comp_l, int j);

// Independent oracle for the winding formula:
//   int_0^1 (2 cos(2 pi theta) + c)^n d theta
// by a composite midpoint rule with >= 4n + 64 panels (exact for trigonometric
// polynomials of this degree).
double zeta_am_quadrature(int n, int a, double alpha, int comp_l, int j);

// Sum of zeta_am_winding over j = 1..a and l in window (plain summation in
// fixed order).
double zeta_am_window(int n, int a, double alpha, const std::vector<int>& window);

// Z(t) = sum_{n=0..order} zeta_window(n) (-t)^n / n!, order <= 30.
PartitionResult partition_am(double t, int a, double alpha,
                             const std::vector<int>& window, int order);

} // namespace harper::spectral
