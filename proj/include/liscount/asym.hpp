#pragma once

#include <string>
#include <vector>

#include "liscount/bigint.hpp"
#include "liscount/partition.hpp"

namespace liscount {

struct AsymptoticModel {
    int d = 0;
    int r = 0;
    Count base;             // d^r * binom(r+d-1, d-1)
    double poly_exponent;   // -(d+1)(d-1)/2
    double constant;        // C_{d+1,r}
};

struct KostkaEstimate {
    double value_log = 0;          // log of the estimate's magnitude
    int sign = 1;                  // orientation of the Vandermonde product
    double gaussian_exponent = 0;  // Q(z) = alpha' * sum z_i^2
    double vandermonde = 0;        // prod_{i<j} (z_j - z_i), signed
    double valid_gap = 0;          // min pairwise |z_i - z_j|
    bool in_validity_region = false;
};

struct ConvergenceRow {
    long long n = 0;
    double log_exact = 0;
    double log_asym = 0;
    double ratio = 0;
    std::string error;  // nonempty when this n was infeasible
};

struct ProfileBin {
    double lo = 0;
    double hi = 0;
    Count mass;    // exact sum of f_lambda * K over shapes in the bin
    double share = 0;
};

struct ShapeProfile {
    std::vector<ProfileBin> bins;
    Count total;
};

Count growth_base(int d, int r);
double constant_C(int d, int r);
AsymptoticModel asymptotic_model(int d, int r);
double asym_log_A(int d, int r, long long n);

KostkaEstimate kostka_estimate(const DeviationVector& z, int d, int r, long long n);

double regev_integral_closed(int d);
double regev_integral_quadrature(int d, int grid = 0);

std::vector<ConvergenceRow> convergence_table(int d, int r, const std::vector<long long>& n_list,
                                              int threads = 0);

ShapeProfile shape_contribution_profile(int d, int r, int n, int num_bins, int threads = 0);

}  // namespace liscount
