#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "liscount/asym.hpp"
#include "liscount/bigint.hpp"
#include "liscount/contour.hpp"
#include "liscount/exact.hpp"
#include "liscount/partition.hpp"
#include "liscount/saddle.hpp"

namespace py = pybind11;
using namespace liscount;

namespace {

// Exact counts cross the boundary as native python ints, via their decimal
// representation; no precision is lost at any size.
py::object to_py_int(const Count& c) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(c).c_str(), nullptr, 10));
}

QuadratureSpec make_spec(int points, const std::vector<double>& radii) {
    QuadratureSpec q;
    q.points_per_dim = points;
    q.radii = radii;
    return q;
}

DeviationVector make_dev(const std::vector<double>& z, int r, long long n) {
    DeviationVector dv;
    dv.z = z;
    dv.r = r;
    dv.n = static_cast<int>(n);
    return dv;
}

}  // namespace

PYBIND11_MODULE(_liscount, m) {
    m.doc() = "exact and asymptotic counting of r-uniform words with bounded increasing subsequences";

    py::class_<ContourResult>(m, "ContourResult")
        .def_readonly("value", &ContourResult::value)
        .def_readonly("imag", &ContourResult::imag)
        .def_readonly("points_per_dim", &ContourResult::points_per_dim)
        .def_readonly("radii", &ContourResult::radii)
        .def_readonly("evaluations", &ContourResult::evaluations);

    py::class_<SaddlePoint>(m, "SaddlePoint")
        .def_readonly("y", &SaddlePoint::y)
        .def_readonly("x0", &SaddlePoint::x0)
        .def_readonly("residual", &SaddlePoint::residual)
        .def_readonly("iterations", &SaddlePoint::iterations)
        .def_readonly("outside_ball", &SaddlePoint::outside_ball);

    py::class_<LocalModel>(m, "LocalModel")
        .def_readonly("d", &LocalModel::d)
        .def_readonly("r", &LocalModel::r)
        .def_readonly("alpha", &LocalModel::alpha)
        .def_readonly("beta", &LocalModel::beta)
        .def_readonly("alpha_prime", &LocalModel::alpha_prime)
        .def_readonly("hessian", &LocalModel::hessian);

    py::class_<KostkaEstimate>(m, "KostkaEstimate")
        .def_readonly("value_log", &KostkaEstimate::value_log)
        .def_readonly("sign", &KostkaEstimate::sign)
        .def_readonly("gaussian_exponent", &KostkaEstimate::gaussian_exponent)
        .def_readonly("vandermonde", &KostkaEstimate::vandermonde)
        .def_readonly("valid_gap", &KostkaEstimate::valid_gap)
        .def_readonly("in_validity_region", &KostkaEstimate::in_validity_region);

    py::class_<ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("n", &ConvergenceRow::n)
        .def_readonly("log_exact", &ConvergenceRow::log_exact)
        .def_readonly("log_asym", &ConvergenceRow::log_asym)
        .def_readonly("ratio", &ConvergenceRow::ratio)
        .def_readonly("error", &ConvergenceRow::error);

    py::class_<ProfileBin>(m, "ProfileBin")
        .def_readonly("lo", &ProfileBin::lo)
        .def_readonly("hi", &ProfileBin::hi)
        .def_readonly("share", &ProfileBin::share)
        .def_property_readonly("mass", [](const ProfileBin& b) { return to_py_int(b.mass); });

    py::class_<ShapeProfile>(m, "ShapeProfile")
        .def_readonly("bins", &ShapeProfile::bins)
        .def_property_readonly("total", [](const ShapeProfile& p) { return to_py_int(p.total); });

    m.def(
        "count_syt", [](const std::vector<int>& shape) { return to_py_int(count_syt(Partition(shape))); },
        py::arg("shape"), "number of standard Young tableaux of the shape");
    m.def(
        "kostka",
        [](const std::vector<int>& shape, int r, int n) {
            return to_py_int(kostka_rect_content(Partition(shape), r, n));
        },
        py::arg("shape"), py::arg("r"), py::arg("n"), "K_{shape, r^n} by the strip DP");
    m.def(
        "kostka_jacobi_trudi",
        [](const std::vector<int>& shape, int r, int n, int pad) {
            return to_py_int(kostka_via_jacobi_trudi(Partition(shape), r, n, pad));
        },
        py::arg("shape"), py::arg("r"), py::arg("n"), py::arg("pad") = 0);
    m.def(
        "rsk_word_count",
        [](int d, int r, int n, int threads) { return to_py_int(rsk_word_count(d, r, n, threads)); },
        py::arg("d"), py::arg("r"), py::arg("n"), py::arg("threads") = 0,
        "words 1^r..n^r with no strictly increasing subsequence of length d+1");
    m.def(
        "brute_force_word_count",
        [](int d, int r, int n, int cap) { return to_py_int(brute_force_word_count(d, r, n, cap)); },
        py::arg("d"), py::arg("r"), py::arg("n"), py::arg("cap") = kBruteForceDefaultCap);
    m.def("longest_strictly_increasing_subsequence", &longest_strictly_increasing_subsequence,
          py::arg("word"));
    m.def(
        "partitions_bounded",
        [](long long total, int max_parts) {
            std::vector<std::vector<int>> out;
            for (const Partition& p : partitions_bounded(total, max_parts)) out.push_back(p.parts());
            return out;
        },
        py::arg("total"), py::arg("max_parts"));
    m.def(
        "hook_lengths",
        [](const std::vector<int>& shape) { return hook_lengths(Partition(shape)); }, py::arg("shape"));
    m.def(
        "deviation_vector",
        [](const std::vector<int>& shape, int d, int r, int n) {
            return deviation_vector(Partition(shape), d, r, n).z;
        },
        py::arg("shape"), py::arg("d"), py::arg("r"), py::arg("n"));

    m.def(
        "kostka_contour_full",
        [](const std::vector<int>& shape, int r, int n, int points, const std::vector<double>& radii,
           int d, int threads) {
            return kostka_contour_full(Partition(shape), r, n, make_spec(points, radii), d, threads);
        },
        py::arg("shape"), py::arg("r"), py::arg("n"), py::arg("points_per_dim") = 0,
        py::arg("radii") = std::vector<double>{}, py::arg("d") = 0, py::arg("threads") = 0);
    m.def(
        "kostka_contour_reduced",
        [](const std::vector<int>& shape, int r, int n, int points, const std::vector<double>& radii,
           int d, int threads) {
            return kostka_contour_reduced(Partition(shape), r, n, make_spec(points, radii), d, threads);
        },
        py::arg("shape"), py::arg("r"), py::arg("n"), py::arg("points_per_dim") = 0,
        py::arg("radii") = std::vector<double>{}, py::arg("d") = 0, py::arg("threads") = 0);

    m.def("phi", &phi, py::arg("x"), py::arg("r"));
    m.def("jacobian_phi", &jacobian_phi, py::arg("x"), py::arg("r"));
    m.def("solve_saddle", &solve_saddle, py::arg("y"), py::arg("r"), py::arg("tol") = 1e-12,
          py::arg("ball_radius") = -1.0);
    m.def("hessian_log_g", &hessian_log_g, py::arg("x0"), py::arg("y"), py::arg("r"));
    m.def("local_model", &local_model, py::arg("d"), py::arg("r"));
    m.def(
        "local_expansion_error",
        [](const std::vector<double>& z, int r, long long n) {
            return local_expansion_error(make_dev(z, r, n), r, n);
        },
        py::arg("z"), py::arg("r"), py::arg("n"));

    m.def(
        "growth_base", [](int d, int r) { return to_py_int(growth_base(d, r)); }, py::arg("d"),
        py::arg("r"));
    m.def("constant_C", &constant_C, py::arg("d"), py::arg("r"));
    m.def("asym_log_A", &asym_log_A, py::arg("d"), py::arg("r"), py::arg("n"));
    m.def(
        "kostka_estimate",
        [](const std::vector<double>& z, int d, int r, long long n) {
            return kostka_estimate(make_dev(z, r, n), d, r, n);
        },
        py::arg("z"), py::arg("d"), py::arg("r"), py::arg("n"));
    m.def("regev_integral_closed", &regev_integral_closed, py::arg("d"));
    m.def("regev_integral_quadrature", &regev_integral_quadrature, py::arg("d"), py::arg("grid") = 0);
    m.def("convergence_table", &convergence_table, py::arg("d"), py::arg("r"), py::arg("n_list"),
          py::arg("threads") = 0);
    m.def("shape_contribution_profile", &shape_contribution_profile, py::arg("d"), py::arg("r"),
          py::arg("n"), py::arg("num_bins"), py::arg("threads") = 0);
}
