#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace harper::butterfly {

struct Convergent {
    long long p;
    long long q;
    double value; // p / q
};

// Continued-fraction convergents of alpha in (0, 1), starting from 0/1.
// Successive convergents satisfy |alpha - p/q| < 1/q^2. Stops early when a
// partial quotient exceeds 1e15 (rational input detected). count <= 40.
std::vector<Convergent> convergents(double alpha, int count);

struct Interval {
    double lo;
    double hi;
};

// Spectrum of the almost Mathieu family at rational flux p/q as disjoint
// closed intervals in [-4, 4], symmetric under negation; q intervals for odd
// q, q-1 for even q (the two central bands touch at 0 and are merged).
struct BandSet {
    long long p = 0;
    long long q = 1;
    std::vector<Interval> intervals;

    double measure() const;
};

// Band edges are the eigenvalues of two q x q ring matrices: the flux
// potential at xi = +1, and the same potential offset by pi/q at xi = -1.
// Together these are the 2q roots of Delta(lambda) = +-4 for the normalized
// discriminant Delta = (-1)^q p(lambda) + 2, whose |Delta| <= 4 sublevel set
// is the family spectrum; sorted and paired [e0,e1], [e2,e3], ... they give
// the bands, and touches (gap < 1e-9) are merged. Both characterizations are
// computed and cross-checked; disagreement beyond 1e-6 throws NumericalError.
// Potentials are reduced through exact integer arithmetic and canonicalized
// over ring symmetries, so the p/q and (q-p)/q band sets are bit-identical.
BandSet bands_rational(long long p, long long q);

// Normalized family discriminant Delta(lambda) at flux p/q (the cross-check
// oracle made public for tests): the spectrum is { |Delta| <= 4 }.
double family_discriminant(long long p, long long q, double lambda);

// Flux-energy occupancy raster. Fluxes are 0/1, every reduced p/q in (0, 1)
// with q <= q_max in ascending order, then 1/1. occupancy is row-major with
// row 0 the highest energy bin; a byte is 255 when the bin's closed lambda
// range intersects a band and 0 otherwise.
struct ButterflyRaster {
    std::vector<std::pair<long long, long long>> fluxes;
    int energy_bins = 0;
    std::vector<std::uint8_t> occupancy;

    int width() const { return static_cast<int>(fluxes.size()); }
    std::uint8_t at(int row, int col) const;

    // Binary PGM "P5", width x energy_bins, maxval 255.
    void write_pgm(std::ostream& os) const;
};

ButterflyRaster render_butterfly(int q_max, int energy_bins,
                                 unsigned threads = 1);

// CSV layout: header "p,q,lo,hi", one row per band interval.
void write_band_csv(std::ostream& os, const std::vector<BandSet>& sets);

} // namespace harper::butterfly
