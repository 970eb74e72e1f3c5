#include "harper/eigen.hpp"
#include "harper/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace harper::lattice {

FactorizationReport factorization_report(const OperatorSpec& spec, int grid)
{
    if (grid < 1) throw ValidationError("factorization_report requires grid >= 1");
    spec.validate();
    const int a = spec.a, b = spec.b;

    double max_dev = 0.0;
    double sum_dev = 0.0;
    std::size_t count = 0;

    for (int m1 = 1; m1 <= grid; ++m1) {
        for (int m2 = 1; m2 <= grid; ++m2) {
            const double t1 = double(m1) / grid;
            const double t2 = double(m2) / grid;
            OperatorSpec point = spec;
            point.xi1 = std::polar(1.0, 2.0 * M_PI * t1);
            point.xi2 = std::polar(1.0, 2.0 * M_PI * t2);
            std::vector<double> ev =
                eigen::eigen_hermitian(build_harper_matrix(point)).values;

            // mode multiset over the covering fiber: z1 runs through the a-th
            // roots of xi1 (z2 likewise), site indices held at (m, n) = (a, b)
            std::vector<double> modes;
            modes.reserve(std::size_t(a) * b);
            for (int p = 0; p < a; ++p) {
                for (int q = 0; q < b; ++q) {
                    const double phi1 =
                        2.0 * M_PI *
                        ((t1 + p) / a +
                         spec.alpha * (b + double(spec.comp_l) * b));
                    const double phi2 =
                        2.0 * M_PI *
                        ((t2 + q) / b +
                         spec.beta * (a + double(spec.comp_k) * a));
                    modes.push_back(2.0 * std::cos(phi1) + 2.0 * std::cos(phi2));
                }
            }
            std::sort(modes.begin(), modes.end());

            for (std::size_t j = 0; j < ev.size(); ++j) {
                const double d = std::abs(ev[j] - modes[j]);
                max_dev = std::max(max_dev, d);
                sum_dev += d;
                ++count;
            }
        }
    }
    return FactorizationReport{grid, max_dev,
                               count ? sum_dev / double(count) : 0.0};
}

} // namespace harper::lattice
