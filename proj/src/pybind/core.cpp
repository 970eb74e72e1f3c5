#include "harper/butterfly.hpp"
#include "harper/dos.hpp"
#include "harper/eigen.hpp"
#include "harper/elliptic.hpp"
#include "harper/lattice.hpp"
#include "harper/periods.hpp"
#include "harper/spectral.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

namespace py = pybind11;

namespace {

using harper::lattice::cdouble;
using harper::lattice::HermitianMatrix;
using harper::lattice::OperatorSpec;

OperatorSpec make_spec(int a, int b, double alpha, double beta, int k, int l,
                       cdouble xi1, cdouble xi2)
{
    OperatorSpec spec;
    spec.a = a; spec.b = b;
    spec.alpha = alpha; spec.beta = beta;
    spec.comp_k = k; spec.comp_l = l;
    spec.xi1 = xi1; spec.xi2 = xi2;
    return spec;
}

py::array_t<cdouble> to_array(const HermitianMatrix& m)
{
    const int n = m.dim();
    py::array_t<cdouble> out({n, n});
    auto r = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(i, j);
    return out;
}

HermitianMatrix from_array(const py::array_t<cdouble>& arr)
{
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw harper::ValidationError("expected a square matrix");
    const int n = static_cast<int>(arr.shape(0));
    auto r = arr.unchecked<2>();
    HermitianMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, r(i, j)); // lower triangle
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Harper / almost Mathieu spectral toolkit";

    py::register_exception<harper::ValidationError>(m, "ValidationError",
                                                    PyExc_ValueError);
    py::register_exception<harper::NumericalError>(m, "NumericalError",
                                                   PyExc_ArithmeticError);

    using harper::elliptic::EllipticModulus;
    m.def("complete_k",
          [](double k) { return harper::elliptic::complete_k(EllipticModulus(k)); },
          py::arg("k"));
    m.def("incomplete_f",
          [](double x, double k) {
              return harper::elliptic::incomplete_f(x, EllipticModulus(k));
          },
          py::arg("x"), py::arg("k"));
    m.def("landen_check",
          [](double k) { return harper::elliptic::landen_check(EllipticModulus(k)); },
          py::arg("k"));

    m.def("period_gamma",
          [](double k) { return harper::periods::period_gamma(EllipticModulus(k)); },
          py::arg("k"));
    m.def("tau_invariant",
          [](double k) { return harper::periods::tau_invariant(EllipticModulus(k)); },
          py::arg("k"));
    m.def("dos_from_half_periods", &harper::periods::dos_from_half_periods,
          py::arg("lam"), py::arg("a") = 1, py::arg("b") = 1);

    m.def("harper_matrix",
          [](int a, int b, double alpha, double beta, int k, int l, cdouble xi1,
             cdouble xi2) {
              return to_array(harper::lattice::build_harper_matrix(
                  make_spec(a, b, alpha, beta, k, l, xi1, xi2)));
          },
          py::arg("a") = 3, py::arg("b") = 5, py::arg("alpha") = 0.0,
          py::arg("beta") = 0.0, py::arg("k") = 0, py::arg("l") = 0,
          py::arg("xi1") = cdouble{1.0, 0.0}, py::arg("xi2") = cdouble{1.0, 0.0});
    m.def("am_matrix",
          [](int a, double alpha, int l, cdouble xi, double theta) {
              return to_array(
                  harper::lattice::build_am_matrix(a, alpha, l, xi, theta));
          },
          py::arg("a"), py::arg("alpha"), py::arg("l") = 0,
          py::arg("xi") = cdouble{1.0, 0.0}, py::arg("theta") = 0.0);
    m.def("char_poly_am", &harper::lattice::char_poly_am, py::arg("a"),
          py::arg("alpha"), py::arg("l"), py::arg("lam"));
    m.def("fourier_mode_value",
          [](int a, int b, double alpha, double beta, int k, int l, int m_,
             int n_, int p_, int q_, cdouble z1, cdouble z2) {
              return harper::lattice::fourier_mode_value(
                  make_spec(a, b, alpha, beta, k, l, {1.0, 0.0}, {1.0, 0.0}),
                  {m_, n_, p_, q_}, z1, z2);
          },
          py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"),
          py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"), py::arg("p"),
          py::arg("q"), py::arg("z1"), py::arg("z2"));
    m.def("factorization_report",
          [](int a, int b, double alpha, double beta, int k, int l, int grid) {
              const auto rep = harper::lattice::factorization_report(
                  make_spec(a, b, alpha, beta, k, l, {1.0, 0.0}, {1.0, 0.0}),
                  grid);
              return std::make_pair(rep.max_dev, rep.mean_dev);
          },
          py::arg("a") = 3, py::arg("b") = 5, py::arg("alpha") = 0.0,
          py::arg("beta") = 0.0, py::arg("k") = 0, py::arg("l") = 0,
          py::arg("grid") = 4);

    m.def("eigenvalues",
          [](const py::array_t<cdouble>& arr) {
              const auto dec = harper::eigen::eigen_hermitian(from_array(arr));
              return py::make_tuple(py::cast(dec.values), dec.residual);
          },
          py::arg("matrix"),
          "Eigenvalues (ascending) and residual; uses the lower triangle.");
    m.def("band_sweep",
          [](int a, int b, double alpha, double beta, int k, int l, int grid_n,
             unsigned threads) {
              const auto grid = harper::eigen::band_sweep(
                  make_spec(a, b, alpha, beta, k, l, {1.0, 0.0}, {1.0, 0.0}),
                  grid_n, threads);
              py::array_t<double> out({grid_n, grid_n, grid.matrix_dim});
              auto r = out.mutable_unchecked<3>();
              for (int m1 = 1; m1 <= grid_n; ++m1)
                  for (int m2 = 1; m2 <= grid_n; ++m2) {
                      const auto& es = grid.at(m1, m2);
                      for (int j = 0; j < grid.matrix_dim; ++j)
                          r(m1 - 1, m2 - 1, j) = es[j];
                  }
              return out;
          },
          py::arg("a") = 3, py::arg("b") = 5, py::arg("alpha") = 0.0,
          py::arg("beta") = 0.0, py::arg("k") = 0, py::arg("l") = 0,
          py::arg("grid_n") = 4, py::arg("threads") = 1);

    m.def("ids_counting",
          [](int a, int b, double alpha, double beta, int n, double lam,
             unsigned threads) {
              return harper::dos::ids_counting(
                  make_spec(a, b, alpha, beta, 0, 0, {1.0, 0.0}, {1.0, 0.0}), n,
                  lam, threads);
          },
          py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"),
          py::arg("n"), py::arg("lam"), py::arg("threads") = 1);
    m.def("dos_elliptic",
          [](double lam, int a, int b) {
              const auto pt = harper::dos::dos_elliptic(lam, a, b);
              return py::make_tuple(pt.value, harper::dos::flag_name(pt.flag));
          },
          py::arg("lam"), py::arg("a") = 1, py::arg("b") = 1);
    m.def("dos_am",
          [](double lam, int a, double alpha, const std::vector<int>& window) {
              const auto pt = harper::dos::dos_am(lam, a, alpha, window);
              return py::make_tuple(pt.value, harper::dos::flag_name(pt.flag));
          },
          py::arg("lam"), py::arg("a"), py::arg("alpha"),
          py::arg("window") = std::vector<int>{0});
    m.def("dos_counting_derivative",
          [](int a, int b, double alpha, double beta, int n, int bins,
             unsigned threads) {
              const auto curve = harper::dos::dos_counting_derivative(
                  make_spec(a, b, alpha, beta, 0, 0, {1.0, 0.0}, {1.0, 0.0}), n,
                  bins, threads);
              return py::make_tuple(py::cast(curve.lambdas),
                                    py::cast(curve.values));
          },
          py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"),
          py::arg("n"), py::arg("bins"), py::arg("threads") = 1);

    m.def("zeta_harper", &harper::spectral::zeta_harper, py::arg("s"),
          py::arg("a") = 1, py::arg("b") = 1);
    m.def("partition_harper",
          [](double t, int a, int b, int order) {
              const auto r = harper::spectral::partition_harper(t, a, b, order);
              return py::make_tuple(r.value, r.truncation, r.converged);
          },
          py::arg("t"), py::arg("a") = 1, py::arg("b") = 1,
          py::arg("order") = 12);
    m.def("zeta_am_winding", &harper::spectral::zeta_am_winding, py::arg("n"),
          py::arg("a"), py::arg("alpha"), py::arg("l") = 0, py::arg("j") = 1);
    m.def("zeta_am_quadrature", &harper::spectral::zeta_am_quadrature,
          py::arg("n"), py::arg("a"), py::arg("alpha"), py::arg("l") = 0,
          py::arg("j") = 1);
    m.def("zeta_am_window", &harper::spectral::zeta_am_window, py::arg("n"),
          py::arg("a"), py::arg("alpha"),
          py::arg("window") = std::vector<int>{0});
    m.def("partition_am",
          [](double t, int a, double alpha, const std::vector<int>& window,
             int order) {
              const auto r =
                  harper::spectral::partition_am(t, a, alpha, window, order);
              return py::make_tuple(r.value, r.truncation, r.converged);
          },
          py::arg("t"), py::arg("a"), py::arg("alpha"),
          py::arg("window") = std::vector<int>{0}, py::arg("order") = 20);

    m.def("convergents",
          [](double alpha, int count) {
              std::vector<std::pair<long long, long long>> out;
              for (const auto& c : harper::butterfly::convergents(alpha, count))
                  out.emplace_back(c.p, c.q);
              return out;
          },
          py::arg("alpha"), py::arg("count") = 12);
    m.def("bands_rational",
          [](long long p, long long q) {
              std::vector<std::pair<double, double>> out;
              for (const auto& iv : harper::butterfly::bands_rational(p, q).intervals)
                  out.emplace_back(iv.lo, iv.hi);
              return out;
          },
          py::arg("p"), py::arg("q"));
    m.def("family_discriminant", &harper::butterfly::family_discriminant,
          py::arg("p"), py::arg("q"), py::arg("lam"));
    m.def("render_butterfly",
          [](int q_max, int bins, unsigned threads) {
              const auto raster =
                  harper::butterfly::render_butterfly(q_max, bins, threads);
              py::array_t<std::uint8_t> img({bins, raster.width()});
              auto r = img.mutable_unchecked<2>();
              for (int row = 0; row < bins; ++row)
                  for (int col = 0; col < raster.width(); ++col)
                      r(row, col) = raster.at(row, col);
              return py::make_tuple(py::cast(raster.fluxes), img);
          },
          py::arg("q_max") = 30, py::arg("bins") = 800, py::arg("threads") = 1);
}
