#include "harper/cli.hpp"

#include "harper/butterfly.hpp"
#include "harper/dos.hpp"
#include "harper/eigen.hpp"
#include "harper/elliptic.hpp"
#include "harper/errors.hpp"
#include "harper/format.hpp"
#include "harper/lattice.hpp"
#include "harper/periods.hpp"
#include "harper/spectral.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

namespace harper::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

void write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open output file: " + path);
    os.write(bytes.data(), std::streamsize(bytes.size()));
    if (!os) throw NumericalError("failed writing " + path);
}

void summary(const std::string& path, std::size_t rows, double max_value,
             Clock::time_point start)
{
    std::cout << "wrote " << path << ": " << rows << " rows, max value "
              << format_double(max_value) << ", elapsed "
              << format_double(elapsed_ms(start)) << " ms\n";
}

struct Options {
    unsigned threads = 0;

    std::string bands_model = "harper2d";
    int a = 3, b = 5;
    double alpha = 0.0, beta = 0.0;
    int comp_k = 0, comp_l = 0;
    int grid = 8;
    std::string out;

    std::string dos_method = "elliptic";
    int n = 16, bins = 64, steps = 401;
    std::vector<int> window{0};

    std::string zeta_model = "harper";
    int max_order = 12;

    std::string partition_model = "harper";
    double t = 1.0;
    int order = 12;
    int part_a = 1, part_b = 1;

    int qmax = 30;
    std::string bands_out;

    bool quick = false;
};

int cmd_bands(const Options& o)
{
    const auto start = Clock::now();
    std::ostringstream csv;
    std::size_t rows = 0;
    double max_e = -1e300;

    if (o.bands_model == "harper2d") {
        lattice::OperatorSpec spec;
        spec.a = o.a; spec.b = o.b;
        spec.alpha = o.alpha; spec.beta = o.beta;
        spec.comp_k = o.comp_k; spec.comp_l = o.comp_l;
        const eigen::BandGrid grid = eigen::band_sweep(spec, o.grid, o.threads);
        csv << "m1,m2,j,energy\n";
        for (int m1 = 1; m1 <= o.grid; ++m1)
            for (int m2 = 1; m2 <= o.grid; ++m2) {
                const auto& es = grid.at(m1, m2);
                for (std::size_t j = 0; j < es.size(); ++j) {
                    csv << m1 << ',' << m2 << ',' << j + 1 << ','
                        << format_double(es[j]) << '\n';
                    max_e = std::max(max_e, es[j]);
                    ++rows;
                }
            }
    } else { // am
        if (o.grid < 1) throw ValidationError("grid must be >= 1");
        csv << "m1,j,energy\n";
        for (int m1 = 1; m1 <= o.grid; ++m1) {
            const auto xi = std::polar(1.0, 2.0 * M_PI * m1 / o.grid);
            const auto dec = eigen::eigen_hermitian(
                lattice::build_am_matrix(o.a, o.alpha, o.comp_l, xi));
            for (std::size_t j = 0; j < dec.values.size(); ++j) {
                csv << m1 << ',' << j + 1 << ',' << format_double(dec.values[j])
                    << '\n';
                max_e = std::max(max_e, dec.values[j]);
                ++rows;
            }
        }
    }
    write_file(o.out, csv.str());
    summary(o.out, rows, max_e, start);
    return 0;
}

int cmd_dos(const Options& o)
{
    const auto start = Clock::now();
    dos::DosCurve curve;
    if (o.dos_method == "elliptic") {
        curve = dos::dos_curve_elliptic(o.a, o.b, o.steps);
    } else if (o.dos_method == "counting") {
        lattice::OperatorSpec spec;
        spec.a = o.a; spec.b = o.b;
        spec.alpha = o.alpha; spec.beta = o.beta;
        spec.comp_k = o.comp_k; spec.comp_l = o.comp_l;
        curve = dos::dos_counting_derivative(spec, o.n, o.bins, o.threads);
    } else { // am
        curve = dos::dos_curve_am(o.a, o.alpha, o.window, o.steps);
    }
    std::ostringstream csv;
    curve.write_csv(csv);
    write_file(o.out, csv.str());
    double max_v = 0.0;
    for (std::size_t i = 0; i < curve.values.size(); ++i)
        if (curve.flags[i] == dos::Flag::ok)
            max_v = std::max(max_v, curve.values[i]);
    summary(o.out, curve.values.size(), max_v, start);
    return 0;
}

int cmd_zeta(const Options& o)
{
    const auto start = Clock::now();
    spectral::ZetaTable table;
    if (o.zeta_model == "harper") {
        for (int s = 0; s <= o.max_order; ++s)
            table.entries.push_back({s, spectral::zeta_harper(s, o.a, o.b),
                                     spectral::Method::harper_elliptic, "-"});
    } else { // am: one row per component (l, j) and order
        for (int s = 0; s <= o.max_order; ++s)
            for (int l : o.window)
                for (int j = 1; j <= o.a; ++j) {
                    std::ostringstream comp;
                    comp << l << ':' << j;
                    table.entries.push_back(
                        {s, spectral::zeta_am_winding(s, o.a, o.alpha, l, j),
                         spectral::Method::am_winding, comp.str()});
                }
    }
    std::ostringstream csv;
    table.write_csv(csv);
    write_file(o.out, csv.str());
    double max_v = 0.0;
    for (const auto& e : table.entries) max_v = std::max(max_v, std::abs(e.value));
    summary(o.out, table.entries.size(), max_v, start);
    return 0;
}

int cmd_partition(const Options& o)
{
    const auto start = Clock::now();
    spectral::PartitionResult r{};
    if (o.partition_model == "harper")
        r = spectral::partition_harper(o.t, o.part_a, o.part_b, o.order);
    else
        r = spectral::partition_am(o.t, o.part_a, o.alpha, o.window, o.order);
    std::cout << "Z(" << format_double(o.t) << ") = " << format_double(r.value)
              << " (truncation " << format_double(r.truncation) << ", "
              << (r.converged ? "converged" : "NOT converged") << ", elapsed "
              << format_double(elapsed_ms(start)) << " ms)\n";
    return r.converged ? 0 : 2;
}

int cmd_butterfly(const Options& o)
{
    const auto start = Clock::now();
    const butterfly::ButterflyRaster raster =
        butterfly::render_butterfly(o.qmax, o.bins, o.threads);
    std::ostringstream pgm;
    raster.write_pgm(pgm);
    write_file(o.out, pgm.str());
    if (!o.bands_out.empty()) {
        std::vector<butterfly::BandSet> sets;
        sets.reserve(raster.fluxes.size());
        for (const auto& f : raster.fluxes)
            sets.push_back(butterfly::bands_rational(f.first, f.second));
        std::ostringstream csv;
        butterfly::write_band_csv(csv, sets);
        write_file(o.bands_out, csv.str());
    }
    std::cout << "wrote " << o.out << ": " << raster.width() << "x"
              << raster.energy_bins << " raster (" << raster.fluxes.size()
              << " fluxes), elapsed " << format_double(elapsed_ms(start))
              << " ms\n";
    return 0;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int cmd_verify(const Options& o)
{
    const bool quick = o.quick;
    std::vector<Check> checks;
    auto record = [&](const std::string& name, bool pass,
                      const std::string& detail) {
        checks.push_back({name, pass, detail});
    };

    using elliptic::EllipticModulus;

    {
        const double r = std::abs(elliptic::complete_k(EllipticModulus(0.0)) -
                                  M_PI / 2.0);
        record("complete-k-at-zero", r < 1e-12, "residual " + format_double(r));
    }
    {
        double worst = 0.0;
        for (int i = 1; i <= 9; ++i)
            worst = std::max(
                worst, elliptic::landen_check(EllipticModulus(0.1 * i)));
        record("landen-identity", worst < 1e-10, "max residual " + format_double(worst));
    }
    {
        const int pts = quick ? 5 : 20;
        double worst = 0.0;
        for (int i = 0; i < pts; ++i) {
            const double k =
                0.01 * std::pow(99.0, double(i) / (pts - 1)); // 0.01 .. 0.99
            const auto [tk, ti] = periods::tau_invariant(EllipticModulus(k));
            worst = std::max(worst, std::abs(tk - ti));
        }
        record("tau-invariance", worst < 1e-8, "max |tau_k - tau_inv| " + format_double(worst));
    }
    {
        const int pts = quick ? 10 : 50;
        double worst = 0.0;
        for (int i = 1; i <= pts; ++i) {
            const double lambda = 4.0 * i / (pts + 1);
            const double hp = periods::dos_from_half_periods(lambda, 3, 5);
            const double cf = dos::dos_elliptic(lambda, 3, 5).value;
            worst = std::max(worst, std::abs(hp / cf - 1.0));
        }
        record("half-period-representation", worst < 1e-8,
               "max relative deviation " + format_double(worst));
    }
    {
        const double z0 = spectral::zeta_harper(0, 3, 5);
        const double r = std::abs(z0 * 2.0 * 15.0 - 1.0);
        record("zeta-total-mass", r < 1e-8, "|2ab zeta(0) - 1| = " + format_double(r));
    }
    {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0.0;
        const int trials = quick ? 3 : 10;
        const int max_n = quick ? 8 : 12;
        for (int trial = 0; trial < trials; ++trial) {
            const double alpha = uni(rng);
            const int a = 2 + int(uni(rng) * 6);
            const int j = 1 + int(uni(rng) * a);
            const int l = int(uni(rng) * 3) - 1;
            for (int n = 0; n <= max_n; ++n)
                worst = std::max(
                    worst,
                    std::abs(spectral::zeta_am_winding(n, a, alpha, l, j) -
                             spectral::zeta_am_quadrature(n, a, alpha, l, j)));
        }
        record("winding-vs-quadrature", worst < 1e-9, "max deviation " + format_double(worst));
    }
    {
        lattice::OperatorSpec spec; // a=3, b=5, zero flux
        const auto rep = lattice::factorization_report(spec, quick ? 2 : 4);
        record("factorization-zero-flux", rep.max_dev < 1e-10,
               "max deviation " + format_double(rep.max_dev));
    }
    {
        lattice::OperatorSpec spec;
        spec.alpha = 0.3;
        spec.beta = 0.1;
        const auto rep = lattice::factorization_report(spec, quick ? 2 : 4);
        record("factorization-report(0.3,0.1)", true,
               "measured max " + format_double(rep.max_dev) + ", mean " +
                   format_double(rep.mean_dev) + " (reported, not asserted)");
    }

    bool all = true;
    for (const Check& c : checks) {
        std::printf("%s  %-32s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 2;
}

} // namespace

int run(int argc, const char* const* argv)
{
    CLI::App app{"Spectral toolkit for Harper and almost Mathieu operators"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads,
                   "parallel sweep width (0 = available parallelism)");

    auto* bands = app.add_subcommand("bands", "band energies over a boundary-phase grid");
    bands->add_option("--model", o.bands_model, "harper2d or am")
        ->check(CLI::IsMember({"harper2d", "am"}));
    bands->add_option("--a", o.a, "period a (harper2d: odd prime; am: ring size)");
    bands->add_option("--b", o.b, "period b (odd prime, harper2d only)");
    bands->add_option("--alpha", o.alpha, "flux parameter alpha");
    bands->add_option("--beta", o.beta, "flux parameter beta (harper2d only)");
    bands->add_option("--k", o.comp_k, "component index k");
    bands->add_option("--l", o.comp_l, "component index l");
    bands->add_option("--grid", o.grid, "phase grid resolution per axis");
    bands->add_option("--out", o.out, "output CSV path")->required();

    auto* dos_cmd = app.add_subcommand("dos", "density of states");
    dos_cmd->add_option("--method", o.dos_method, "elliptic, counting or am")
        ->check(CLI::IsMember({"elliptic", "counting", "am"}));
    dos_cmd->add_option("--a", o.a, "period a");
    dos_cmd->add_option("--b", o.b, "period b");
    dos_cmd->add_option("--alpha", o.alpha, "flux parameter alpha");
    dos_cmd->add_option("--beta", o.beta, "flux parameter beta");
    dos_cmd->add_option("--n", o.n, "phase grid resolution (counting)");
    dos_cmd->add_option("--bins", o.bins, "histogram bins (counting)");
    dos_cmd->add_option("--steps", o.steps, "lambda grid points (elliptic/am)");
    dos_cmd->add_option("--window", o.window, "component indices l (am)")
        ->delimiter(',');
    dos_cmd->add_option("--out", o.out, "output CSV path")->required();

    auto* zeta = app.add_subcommand("zeta", "spectral zeta moments");
    zeta->add_option("--model", o.zeta_model, "harper or am")
        ->check(CLI::IsMember({"harper", "am"}));
    zeta->add_option("--max-order", o.max_order, "largest moment order");
    zeta->add_option("--a", o.a, "period a");
    zeta->add_option("--b", o.b, "period b (harper)");
    zeta->add_option("--alpha", o.alpha, "flux parameter alpha (am)");
    zeta->add_option("--window", o.window, "component indices l (am)")
        ->delimiter(',');
    zeta->add_option("--out", o.out, "output CSV path")->required();

    auto* part = app.add_subcommand("partition", "partition function");
    part->add_option("--model", o.partition_model, "harper or am")
        ->check(CLI::IsMember({"harper", "am"}));
    part->add_option("--t", o.t, "inverse-temperature argument, |t| <= 10");
    part->add_option("--order", o.order, "series terms");
    part->add_option("--a", o.part_a, "period a");
    part->add_option("--b", o.part_b, "period b");
    part->add_option("--alpha", o.alpha, "flux parameter alpha (am)");
    part->add_option("--window", o.window, "component indices l (am)")
        ->delimiter(',');

    auto* btf = app.add_subcommand("butterfly", "flux-energy occupancy raster");
    btf->add_option("--qmax", o.qmax, "largest flux denominator (<= 60)");
    btf->add_option("--bins", o.bins, "energy bins (<= 4096)")->default_val(800);
    btf->add_option("--out", o.out, "output PGM path")->required();
    btf->add_option("--bands-out", o.bands_out, "optional band-interval CSV path");

    auto* verify = app.add_subcommand("verify", "run the numerical self-checks");
    verify->add_flag("--quick", o.quick, "smaller grids and fewer sample points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (bands->parsed()) return cmd_bands(o);
        if (dos_cmd->parsed()) return cmd_dos(o);
        if (zeta->parsed()) return cmd_zeta(o);
        if (part->parsed()) return cmd_partition(o);
        if (btf->parsed()) return cmd_butterfly(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

} // namespace harper::cli
