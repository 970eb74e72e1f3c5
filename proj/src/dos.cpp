#include "harper/dos.hpp"

#include "harper/eigen.hpp"
#include "harper/elliptic.hpp"
#include "harper/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace harper::dos {

using elliptic::EllipticModulus;

const char* method_name(Method m)
{
    switch (m) {
        case Method::elliptic: return "elliptic";
        case Method::counting: return "counting";
        case Method::am_formula: return "am_formula";
    }
    return "?";
}

const char* flag_name(Flag f)
{
    switch (f) {
        case Flag::ok: return "ok";
        case Flag::divergent: return "divergent";
        case Flag::out_of_band: return "out_of_band";
    }
    return "?";
}

void DosCurve::write_csv(std::ostream& os) const
{
    os << "lambda,value,flag\n";
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        os << format_double(lambdas[i]) << ',' << format_double(values[i])
           << ',' << flag_name(flags[i]) << '\n';
}

double ids_counting(const OperatorSpec& spec, int n, double lambda,
                    unsigned threads)
{
    if (n < 1) throw ValidationError("ids_counting requires n >= 1");
    const eigen::BandGrid grid = eigen::band_sweep(spec, n, threads);
    std::size_t below = 0, total = 0;
    for (const auto& point : grid.energies) {
        total += point.size();
        below += std::size_t(
            std::upper_bound(point.begin(), point.end(), lambda) -
            point.begin());
    }
    return double(below) / double(total);
}

Point dos_elliptic(double lambda, int a, int b)
{
    if (a < 1 || b < 1) throw ValidationError("dos_elliptic requires a, b >= 1");
    const double al = std::abs(lambda);
    if (al > 4.0) return {0.0, Flag::out_of_band};
    const double k = (4.0 - al) / (4.0 + al);
    if (k > 1.0 - 1e-10)
        return {std::numeric_limits<double>::infinity(), Flag::divergent};
    const double K = elliptic::complete_k(EllipticModulus(k));
    return {(1.0 + k) * K / (2.0 * M_PI * M_PI * a * b), Flag::ok};
}

DosCurve dos_curve_elliptic(int a, int b, int steps)
{
    if (steps < 2) throw ValidationError("need at least 2 lambda steps");
    DosCurve curve;
    curve.method = Method::elliptic;
    {
        std::ostringstream meta;
        meta << "a=" << a << " b=" << b << " steps=" << steps;
        curve.meta = meta.str();
    }
    for (int i = 0; i < steps; ++i) {
        const double lambda = -4.0 + 8.0 * i / (steps - 1);
        const Point pt = dos_elliptic(lambda, a, b);
        curve.lambdas.push_back(lambda);
        curve.values.push_back(pt.value);
        curve.flags.push_back(pt.flag);
    }
    return curve;
}

DosCurve dos_counting_derivative(const OperatorSpec& spec, int n, int bins,
                                 unsigned threads)
{
    if (n < 1) throw ValidationError("counting DOS requires n >= 1");
    if (bins < 2) throw ValidationError("counting DOS requires bins >= 2");

    const eigen::BandGrid grid = eigen::band_sweep(spec, n, threads);
    const double width = 8.0 / bins;
    std::vector<double> counts(bins, 0.0);
    std::size_t total = 0;
    // An eigenvalue within 1e-9 of an interior bin boundary is split half and
    // half; exact-boundary energies (0, +-2, ...) land on grid multisets that
    // are negation-symmetric only up to solver rounding, and the split keeps
    // the histogram symmetric instead of letting 1e-16 noise pick a side.
    for (const auto& point : grid.energies) {
        for (double e : point) {
            const double x = (e + 4.0) / width;
            const long r = std::lround(x);
            if (r >= 1 && r <= bins - 1 &&
                std::abs(e - (-4.0 + width * double(r))) <= 1e-9) {
                counts[r - 1] += 0.5;
                counts[r] += 0.5;
            } else {
                const int bin = std::clamp(int(std::floor(x)), 0, bins - 1);
                counts[bin] += 1.0;
            }
            ++total;
        }
    }

    DosCurve curve;
    curve.method = Method::counting;
    {
        std::ostringstream meta;
        meta << "a=" << spec.a << " b=" << spec.b << " alpha=" << spec.alpha
             << " beta=" << spec.beta << " n=" << n << " bins=" << bins;
        curve.meta = meta.str();
    }
    for (int i = 0; i < bins; ++i) {
        curve.lambdas.push_back(-4.0 + width * (i + 0.5));
        curve.values.push_back(counts[i] / (double(total) * width));
        curve.flags.push_back(Flag::ok);
    }
    return curve;
}

Point dos_am(double lambda, int a, double alpha, const std::vector<int>& window)
{
    if (a < 1) throw ValidationError("dos_am requires a >= 1");
    if (window.empty()) throw ValidationError("component window must be nonempty");

    double sum = 0.0;
    Flag flag = Flag::ok;
    for (int l : window) {
        for (int j = 1; j <= a; ++j) {
            const double c =
                std::cos(2.0 * M_PI * alpha * (j + double(l) * a));
            const double x = lambda / 2.0 - c;
            const double radicand = 1.0 - x * x;
            if (std::abs(radicand) <= 1e-12) {
                flag = Flag::divergent; // band edge of this component
                continue;
            }
            if (radicand < 0.0) continue; // no state from (j, l) at this lambda
            sum += 1.0 / std::sqrt(radicand);
        }
    }
    return {sum / (4.0 * M_PI * a), flag};
}

DosCurve dos_curve_am(int a, double alpha, const std::vector<int>& window,
                      int steps)
{
    if (steps < 2) throw ValidationError("need at least 2 lambda steps");
    DosCurve curve;
    curve.method = Method::am_formula;
    {
        std::ostringstream meta;
        meta << "a=" << a << " alpha=" << alpha << " window=" << window.size()
             << " steps=" << steps;
        curve.meta = meta.str();
    }
    for (int i = 0; i < steps; ++i) {
        const double lambda = -4.0 + 8.0 * i / (steps - 1);
        const Point pt = dos_am(lambda, a, alpha, window);
        curve.lambdas.push_back(lambda);
        curve.values.push_back(pt.value);
        curve.flags.push_back(pt.flag);
    }
    return curve;
}

} // namespace harper::dos
