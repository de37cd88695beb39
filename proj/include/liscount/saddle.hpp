#pragma once

#include <vector>

#include "liscount/partition.hpp"

namespace liscount {

struct SaddlePoint {
    std::vector<double> y;
    std::vector<double> x0;  // gauge: last coordinate fixed to 1
    double residual = 0;     // max-norm defect of phi(x0) - y
    int iterations = 0;
    bool outside_ball = false;  // y left the default trust ball; uniqueness not guaranteed
};

struct LocalModel {
    int d = 0;
    int r = 0;
    double alpha = 0;        // diagonal of the rectangular-point Hessian
    double beta = 0;         // off-diagonal
    double alpha_prime = 0;  // d(d+1)/(r(d+r)) = 1/(alpha-beta)
    std::vector<std::vector<double>> hessian;
};

// Content map phi_j(x) = x_j (dh_r/dx_j) / h_r; degree-0 homogeneous, sums to r.
std::vector<double> phi(const std::vector<double>& x, int r);

// Analytic Jacobian of phi; entry (j,i) is dphi_j/dx_i.
std::vector<std::vector<double>> jacobian_phi(const std::vector<double>& x, int r);

// Newton solve of phi(x) = y in the gauge x_d = 1, starting from all-ones.
// ball_radius < 0 picks the default r/(2d) max-norm ball around (r/d,...,r/d).
SaddlePoint solve_saddle(const std::vector<double>& y, int r, double tol = 1e-12,
                         double ball_radius = -1.0);

// G_{ij} = (x_i x_j / g) d2g/dx_i dx_j at the saddle, g(x) = h_r(x)/prod x_i^{y_i}.
std::vector<std::vector<double>> hessian_log_g(const std::vector<double>& x0,
                                               const std::vector<double>& y, int r);

LocalModel local_model(int d, int r);

// Max-norm gap between the solved saddle (geometric-mean gauge) and the local
// expansion 1 + alpha' z / sqrt(n); a convergence diagnostic, not an assertion.
double local_expansion_error(const DeviationVector& z, int r, long long n);

}  // namespace liscount
