#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "liscount/partition.hpp"

namespace liscount {

// h_r(x_1..x_d), complete homogeneous symmetric function, via the recurrence
// h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
template <class Scalar>
Scalar h_eval(const std::vector<Scalar>& x, int r) {
    if (r < 0) throw std::invalid_argument("h_eval: r must be nonnegative");
    std::vector<Scalar> h(static_cast<size_t>(r) + 1, Scalar(0));
    h[0] = Scalar(1);
    for (const Scalar& xm : x)
        for (int k = 1; k <= r; ++k) h[static_cast<size_t>(k)] += xm * h[static_cast<size_t>(k) - 1];
    return h[static_cast<size_t>(r)];
}

// Partial derivatives: d(h_r)/dx_j = h_{r-1} of the multiset x with x_j repeated.
template <class Scalar>
std::vector<Scalar> h_grad(const std::vector<Scalar>& x, int r) {
    if (r < 1) throw std::invalid_argument("h_grad: r must be positive");
    std::vector<Scalar> out(x.size());
    std::vector<Scalar> aug(x);
    aug.push_back(Scalar(0));
    for (size_t j = 0; j < x.size(); ++j) {
        aug.back() = x[j];
        out[j] = h_eval(aug, r - 1);
    }
    return out;
}

// Second partials: d2(h_r)/dx_i dx_j = h_{r-2} of x with x_i and x_j repeated,
// doubled on the diagonal.
template <class Scalar>
std::vector<std::vector<Scalar>> h_hessian(const std::vector<Scalar>& x, int r) {
    if (r < 0) throw std::invalid_argument("h_hessian: r must be nonnegative");
    const size_t d = x.size();
    std::vector<std::vector<Scalar>> out(d, std::vector<Scalar>(d, Scalar(0)));
    if (r < 2) return out;
    std::vector<Scalar> aug(x);
    aug.push_back(Scalar(0));
    aug.push_back(Scalar(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
            aug[d] = x[i];
            aug[d + 1] = x[j];
            Scalar v = h_eval(aug, r - 2);
            if (i == j) v *= Scalar(2);
            out[i][j] = v;
            out[j][i] = v;
        }
    return out;
}

// V(x) = prod_{i<j} (1 - x_j/x_i).
template <class Scalar>
Scalar vandermonde_factor(const std::vector<Scalar>& p) {
    for (const Scalar& c : p)
        if (std::abs(c) == 0.0) throw std::invalid_argument("vandermonde_factor: zero coordinate");
    Scalar v(1);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) v *= Scalar(1) - p[j] / p[i];
    return v;
}

struct QuadratureSpec {
    int points_per_dim = 0;     // 0 picks the exactness default for the inputs
    std::vector<double> radii;  // empty means all-ones
};

struct ContourResult {
    double value = 0;           // real part of the quadrature sum
    double imag = 0;            // imaginary residue, diagnostic (should be ~0)
    int points_per_dim = 0;
    std::vector<double> radii;
    long long evaluations = 0;
};

// d-fold torus quadrature of the contour formula for K_{lambda, r^n}.
ContourResult kostka_contour_full(const Partition& lambda, int r, int n,
                                  const QuadratureSpec& q = {}, int d = 0, int threads = 0);

// (d-1)-dimensional form: free angles theta_1..theta_{d-1}, the last angle is
// minus their sum, prefactor 1/(2pi)^{d-1}.
ContourResult kostka_contour_reduced(const Partition& lambda, int r, int n,
                                     const QuadratureSpec& q = {}, int d = 0, int threads = 0);

}  // namespace liscount
