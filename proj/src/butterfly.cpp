#include "harper/butterfly.hpp"

#include "harper/eigen.hpp"
#include "harper/errors.hpp"
#include "harper/format.hpp"
#include "harper/lattice.hpp"
#include "harper/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

namespace harper::butterfly {

std::vector<Convergent> convergents(double alpha, int count)
{
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw ValidationError("convergents require alpha in (0, 1)");
    if (count < 1 || count > 40)
        throw ValidationError("convergent count must be in [1, 40]");

    std::vector<Convergent> out;
    long long p_prev = 1, q_prev = 0; // h_{-1} / k_{-1}
    long long p = 0, q = 1;           // a0 = floor(alpha) = 0 -> 0/1
    out.push_back({p, q, 0.0});
    double x = alpha;
    for (int i = 1; i < count; ++i) {
        const double frac = x - std::floor(x);
        if (frac <= 0.0) break; // terminated: alpha is exactly rational
        x = 1.0 / frac;
        const double term = std::floor(x);
        if (!(term < 1e15)) break; // rational input detected
        const long long a = static_cast<long long>(term);
        if (q > (std::numeric_limits<long long>::max() - q_prev) / a)
            break; // denominator would overflow
        const long long pn = a * p + p_prev;
        const long long qn = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = pn; q = qn;
        out.push_back({p, q, double(p) / double(q)});
    }
    return out;
}

double BandSet::measure() const
{
    double total = 0.0;
    for (const Interval& iv : intervals) total += iv.hi - iv.lo;
    return total;
}

namespace {

constexpr double kTouchTol = 1e-9;
constexpr double kCrossCheckTol = 1e-6;

// Potential values are built from exactly reduced integer angles so that
// fluxes p/q and (q-p)/q yield bitwise-identical sequences after the ring
// canonicalization below.

// v_j = 2 cos(2 pi (p j mod q) / q), folded into [0, q/2] by cosine parity
std::vector<double> flux_potential(long long p, long long q)
{
    std::vector<double> v(q);
    for (long long j = 1; j <= q; ++j) {
        long long m = (p * j) % q;
        m = std::min(m, q - m);
        v[j - 1] = 2.0 * std::cos(2.0 * M_PI * double(m) / double(q));
    }
    return v;
}

// same potential offset by pi/q: 2 cos(pi (2 p j + 1 mod 2q) / q)
std::vector<double> flux_potential_shifted(long long p, long long q)
{
    std::vector<double> v(q);
    for (long long j = 1; j <= q; ++j) {
        long long r = (2 * p * j + 1) % (2 * q);
        r = std::min(r, 2 * q - r);
        v[j - 1] = 2.0 * std::cos(M_PI * double(r) / double(q));
    }
    return v;
}

// Ring spectra are invariant under rotating or reversing the site order, so
// pick the lexicographically smallest image as the one matrix to solve. This
// makes band sets of reflection-equivalent fluxes identical byte for byte.
std::vector<double> canonical_ring(const std::vector<double>& v)
{
    const std::size_t n = v.size();
    std::vector<double> best = v;
    std::vector<double> cand(n);
    for (int rev = 0; rev < 2; ++rev) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t src = rev ? (n - 1 - j + r) % n : (j + r) % n;
                cand[j] = v[src];
            }
            if (cand < best) best = cand;
        }
    }
    return best;
}

void validate_flux(long long p, long long q)
{
    if (q < 1 || q > 200)
        throw ValidationError("flux denominator must be in [1, 200]");
    if (p < 0 || p > q)
        throw ValidationError("flux must lie in [0, 1]");
    if (std::gcd(p, q) != 1)
        throw ValidationError("flux p/q must be in lowest terms");
}

double discriminant(const std::vector<double>& theta0_potential, double lambda)
{
    const int q = static_cast<int>(theta0_potential.size());
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign * lattice::char_poly_ring(theta0_potential, lambda) + 2.0;
}

// Delta with its first two lambda-derivatives from the jointly rescaled
// transfer product. The derivatives quantify the local conditioning: near the
// spectrum edge of a large-q flux the subbands are exponentially narrower
// than a double, and Delta moves by ~|Delta'| * 1e-14 (or, at near-tangent
// band touches, ~|Delta''| * 1e-28) across one eigenvalue rounding step.
struct DiscriminantPoint {
    double value;
    double d1;
    double d2;
};

DiscriminantPoint discriminant_derivatives(const std::vector<double>& v,
                                           double lambda)
{
    const int a = static_cast<int>(v.size());
    const double sign = (a % 2 == 0) ? 1.0 : -1.0;
    if (a == 1) return {sign * (v[0] - lambda) + 2.0, -sign, 0.0};

    // M = product of S_j = [[v_j - lambda, -1], [1, 0]]; S_j' = [[-1,0],[0,0]]
    // and S_j'' = 0, so  D1 <- S D1 + S' M  and  D2 <- S D2 + 2 S' D1.
    double m[4] = {v[0] - lambda, -1.0, 1.0, 0.0};
    double d1[4] = {-1.0, 0.0, 0.0, 0.0};
    double d2[4] = {0.0, 0.0, 0.0, 0.0};
    double scale_log2 = 0.0;
    for (int j = 1; j < a; ++j) {
        const double t = v[j] - lambda;
        const double n2[4] = {t * d2[0] - d2[2] - 2.0 * d1[0],
                              t * d2[1] - d2[3] - 2.0 * d1[1], d2[0], d2[1]};
        const double n1[4] = {t * d1[0] - d1[2] - m[0],
                              t * d1[1] - d1[3] - m[1], d1[0], d1[1]};
        const double n0[4] = {t * m[0] - m[2], t * m[1] - m[3], m[0], m[1]};
        for (int i = 0; i < 4; ++i) {
            d2[i] = n2[i];
            d1[i] = n1[i];
            m[i] = n0[i];
        }
        double big = 0.0;
        for (int i = 0; i < 4; ++i)
            big = std::max({big, std::abs(m[i]), std::abs(d1[i]),
                            std::abs(d2[i])});
        if (big > 1e150) {
            for (int i = 0; i < 4; ++i) {
                m[i] *= 0x1p-500;
                d1[i] *= 0x1p-500;
                d2[i] *= 0x1p-500;
            }
            scale_log2 += 500.0;
        }
    }
    auto unscale = [scale_log2](double x) {
        if (scale_log2 == 0.0) return x;
        const double mag =
            scale_log2 + std::log2(std::max(std::abs(x), 1e-300));
        if (mag > 996.0) return x > 0.0 ? 1e300 : -1e300;
        return x * std::exp2(scale_log2);
    };
    return {sign * unscale(m[0] + m[3]) + 2.0, sign * unscale(d1[0] + d1[3]),
            sign * unscale(d2[0] + d2[3])};
}

// Distance in lambda from x to the nearest root of Delta = target, estimated
// from the first- or second-order Taylor model (whichever is larger guards
// against near-double roots where Delta' vanishes).
double root_distance(const DiscriminantPoint& d, double target)
{
    const double r = std::abs(d.value - target);
    if (r == 0.0) return 0.0;
    const double denom = std::max(
        {std::abs(d.d1), std::sqrt(0.5 * r * std::abs(d.d2)), 1e-30});
    return r / denom;
}

std::vector<double> ring_eigenvalues(const std::vector<double>& potential,
                                     double xi)
{
    return eigen::eigen_hermitian(lattice::am_ring_matrix(potential, xi)).values;
}

} // namespace

double family_discriminant(long long p, long long q, double lambda)
{
    validate_flux(p, q);
    return discriminant(flux_potential(p, q), lambda);
}

BandSet bands_rational(long long p, long long q)
{
    validate_flux(p, q);

    const std::vector<double> v0 = canonical_ring(flux_potential(p, q));
    const std::vector<double> v1 = canonical_ring(flux_potential_shifted(p, q));

    // 2q band edges: roots of Delta = +4 (periodic matrix) and of Delta = -4
    // (the pi/q-shifted antiperiodic matrix)
    const std::vector<double> upper = ring_eigenvalues(v0, 1.0);
    const std::vector<double> lower = ring_eigenvalues(v1, -1.0);

    std::vector<double> edges;
    edges.reserve(2 * q);
    edges.insert(edges.end(), upper.begin(), upper.end());
    edges.insert(edges.end(), lower.begin(), lower.end());
    std::sort(edges.begin(), edges.end());

    BandSet set;
    set.p = p;
    set.q = q;
    for (long long i = 0; i < q; ++i) {
        const double lo = edges[2 * i];
        const double hi = edges[2 * i + 1];
        if (!set.intervals.empty() && lo - set.intervals.back().hi < kTouchTol)
            set.intervals.back().hi = hi;
        else
            set.intervals.push_back({lo, hi});
    }

    // cross-check against the polynomial characterization { |Delta| <= 4 }:
    // every edge must lie within kCrossCheckTol (in lambda) of a root of
    // Delta = +-4, and band/gap midpoints must classify consistently up to
    // the same lambda slack converted through the local derivatives.
    auto fail = [&](const std::string& what, double where, double value) {
        throw NumericalError(
            "band characterizations disagree at flux " + std::to_string(p) +
            "/" + std::to_string(q) + ": " + what + " at lambda = " +
            format_double(where) + " (Delta = " + format_double(value) + ")");
    };
    auto check_edge = [&](double e, double target, const char* what) {
        const DiscriminantPoint d = discriminant_derivatives(v0, e);
        if (std::abs(d.value - target) <= kCrossCheckTol) return;
        if (root_distance(d, target) > kCrossCheckTol) fail(what, e, d.value);
    };
    for (double e : upper) check_edge(e, 4.0, "edge not on Delta = 4");
    for (double e : lower) check_edge(e, -4.0, "edge not on Delta = -4");
    for (std::size_t i = 0; i < set.intervals.size(); ++i) {
        const Interval& iv = set.intervals[i];
        const double mid = 0.5 * (iv.lo + iv.hi);
        const DiscriminantPoint dm = discriminant_derivatives(v0, mid);
        const double slack_mid = kCrossCheckTol * std::abs(dm.d1) +
                                 0.5 * kCrossCheckTol * kCrossCheckTol *
                                     std::abs(dm.d2);
        if (std::abs(dm.value) > 4.0 + kCrossCheckTol + slack_mid)
            fail("band midpoint outside |Delta| <= 4", mid, dm.value);
        if (i + 1 < set.intervals.size()) {
            const double gap = 0.5 * (iv.hi + set.intervals[i + 1].lo);
            const DiscriminantPoint dg = discriminant_derivatives(v0, gap);
            const double slack_gap = kCrossCheckTol * std::abs(dg.d1) +
                                     0.5 * kCrossCheckTol * kCrossCheckTol *
                                         std::abs(dg.d2);
            if (std::abs(dg.value) < 4.0 - kCrossCheckTol - slack_gap)
                fail("gap midpoint inside |Delta| <= 4", gap, dg.value);
        }
    }
    return set;
}

std::uint8_t ButterflyRaster::at(int row, int col) const
{
    return occupancy[std::size_t(row) * fluxes.size() + col];
}

void ButterflyRaster::write_pgm(std::ostream& os) const
{
    os << "P5\n" << width() << ' ' << energy_bins << "\n255\n";
    os.write(reinterpret_cast<const char*>(occupancy.data()),
             std::streamsize(occupancy.size()));
}

ButterflyRaster render_butterfly(int q_max, int energy_bins, unsigned threads)
{
    if (q_max < 1 || q_max > 60)
        throw ValidationError("q_max must be in [1, 60]");
    if (energy_bins < 1 || energy_bins > 4096)
        throw ValidationError("energy_bins must be in [1, 4096]");

    ButterflyRaster raster;
    raster.energy_bins = energy_bins;
    raster.fluxes.push_back({0, 1});
    for (long long q = 2; q <= q_max; ++q)
        for (long long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) raster.fluxes.push_back({p, q});
    raster.fluxes.push_back({1, 1});
    std::sort(raster.fluxes.begin(), raster.fluxes.end(),
              [](const auto& x, const auto& y) {
                  return x.first * y.second < y.first * x.second;
              });

    const std::size_t n_flux = raster.fluxes.size();
    std::vector<BandSet> sets(n_flux);
    parallel_for(n_flux, threads, [&](std::size_t i) {
        sets[i] = bands_rational(raster.fluxes[i].first, raster.fluxes[i].second);
    });

    raster.occupancy.assign(std::size_t(energy_bins) * n_flux, 0);
    const double width = 8.0 / energy_bins;
    // Intersection carries the touch tolerance: a band edge sitting on a bin
    // boundary (e.g. the exact +-2 edges at flux 1/3) marks both neighbors,
    // so the raster inherits the lambda -> -lambda symmetry of the band sets.
    for (std::size_t col = 0; col < n_flux; ++col) {
        for (const Interval& iv : sets[col].intervals) {
            for (int bin = 0; bin < energy_bins; ++bin) {
                const double lo = -4.0 + width * bin;
                const double hi = -4.0 + width * (bin + 1);
                if (iv.lo <= hi + kTouchTol && iv.hi >= lo - kTouchTol) {
                    const int row = energy_bins - 1 - bin;
                    raster.occupancy[std::size_t(row) * n_flux + col] = 255;
                }
            }
        }
    }
    return raster;
}

void write_band_csv(std::ostream& os, const std::vector<BandSet>& sets)
{
    os << "p,q,lo,hi\n";
    for (const BandSet& set : sets)
        for (const Interval& iv : set.intervals)
            os << set.p << ',' << set.q << ',' << format_double(iv.lo) << ','
               << format_double(iv.hi) << '\n';
}

} // namespace harper::butterfly
