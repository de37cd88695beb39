#include "liscount/asym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liscount/exact.hpp"
#include "liscount/parallel.hpp"

namespace liscount {

namespace {

constexpr double kPi = std::numbers::pi;

double log_constant_C(int d, int r) {
    if (d < 2 || r < 1) throw std::invalid_argument("constant_C: need d >= 2, r >= 1");
    const double dd = d, rr = r;
    double lc = 0.5 * std::log(dd);
    for (int i = 1; i <= d - 1; ++i) lc += std::lgamma(i + 1.0);
    lc -= 0.5 * (dd - 1.0) * std::log(2.0 * kPi);
    lc += 0.5 * (dd - 1.0) * (dd + 1.0) * std::log(dd * (dd + 1.0) / (rr * (2.0 * dd + rr + 1.0)));
    return lc;
}

// Rough operation count of the horizontal-strip DP behind rsk_word_count.
double estimated_dp_cost(int d, int r, long long n) {
    const double rn = static_cast<double>(r) * static_cast<double>(n);
    double states = 1;
    for (int i = 1; i < d; ++i) states *= (rn + 1) / i;
    double fanout = 1;
    for (int i = 1; i < d; ++i) fanout *= (static_cast<double>(r) + i) / i;
    return static_cast<double>(n) * states * fanout;
}

constexpr double kDpCostLimit = 2e9;

}  // namespace

Count growth_base(int d, int r) {
    if (d < 2 || r < 1) throw std::invalid_argument("growth_base: need d >= 2, r >= 1");
    Count b;
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
    return b * binomial(static_cast<unsigned long>(r + d - 1), static_cast<unsigned long>(d - 1));
}

double constant_C(int d, int r) { return std::exp(log_constant_C(d, r)); }

AsymptoticModel asymptotic_model(int d, int r) {
    AsymptoticModel m;
    m.d = d;
    m.r = r;
    m.base = growth_base(d, r);
    m.poly_exponent = -0.5 * (static_cast<double>(d) + 1.0) * (static_cast<double>(d) - 1.0);
    m.constant = constant_C(d, r);
    return m;
}

double asym_log_A(int d, int r, long long n) {
    if (n < 1) throw std::invalid_argument("asym_log_A: n must be positive");
    return static_cast<double>(n) * log_count(growth_base(d, r)) +
           (-0.5 * (static_cast<double>(d) + 1.0) * (static_cast<double>(d) - 1.0)) *
               std::log(static_cast<double>(n)) +
           log_constant_C(d, r);
}

KostkaEstimate kostka_estimate(const DeviationVector& z, int d, int r, long long n) {
    if (d < 1 || r < 1 || n < 1) throw std::invalid_argument("kostka_estimate: bad inputs");
    if (static_cast<int>(z.z.size()) != d)
        throw std::invalid_argument("kostka_estimate: z must have d entries");
    double zsum = 0;
    for (double v : z.z) zsum += v;
    if (std::abs(zsum) > 1e-9) throw std::invalid_argument("kostka_estimate: z must sum to 0");

    const double dd = d, rr = r;
    const double alpha_prime = dd * (dd + 1.0) / (rr * (dd + rr));

    KostkaEstimate est;
    double z2 = 0, zmax = 0;
    for (double v : z.z) {
        z2 += v * v;
        zmax = std::max(zmax, std::abs(v));
    }
    est.gaussian_exponent = alpha_prime * z2;

    double vdm = 1.0;
    double gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            vdm *= z.z[static_cast<size_t>(j)] - z.z[static_cast<size_t>(i)];
            gap = std::min(gap, std::abs(z.z[static_cast<size_t>(j)] - z.z[static_cast<size_t>(i)]));
        }
    est.vandermonde = vdm;
    est.valid_gap = d > 1 ? gap : 0.0;
    est.sign = vdm > 0 ? 1 : (vdm < 0 ? -1 : 0);
    est.in_validity_region =
        (d == 1 || gap > 0) && zmax < std::pow(static_cast<double>(n), 0.125);

    est.value_log = 0.5 * std::log(dd) +
                    0.5 * (dd + 1.0) * (dd - 1.0) * std::log(alpha_prime) +
                    static_cast<double>(n) *
                        log_count(binomial(static_cast<unsigned long>(d + r - 1),
                                           static_cast<unsigned long>(d - 1))) -
                    0.25 * (dd + 2.0) * (dd - 1.0) * std::log(static_cast<double>(n)) -
                    0.5 * (dd - 1.0) * std::log(2.0 * kPi) - 0.5 * est.gaussian_exponent +
                    (vdm == 0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(vdm)));
    return est;
}

double regev_integral_closed(int d) {
    if (d < 1) throw std::invalid_argument("regev_integral_closed: d must be positive");
    const double dd = d;
    double lv = -std::lgamma(dd + 1.0) - 0.5 * std::log(kPi * dd) +
                0.5 * dd * std::log(2.0 * kPi) - 0.5 * dd * dd * std::log(2.0);
    for (int i = 1; i <= d; ++i) lv += std::lgamma(i + 1.0);
    return std::exp(lv);
}

double regev_integral_quadrature(int d, int grid) {
    if (d != 2 && d != 3)
        throw std::invalid_argument("regev_integral_quadrature: only d in {2,3} is supported");
    const double lo = -8.0, hi = 8.0;
    if (grid == 0) grid = d == 2 ? 8001 : 1601;
    if (grid < 2) throw std::invalid_argument("regev_integral_quadrature: grid too small");
    const double h = (hi - lo) / grid;

    if (d == 2) {
        double sum = 0;
        for (int k = 0; k < grid; ++k) {
            const double z1 = lo + (k + 0.5) * h;
            const double z2 = -z1;
            if (z1 < z2) sum += (z1 - z2) * (z1 - z2) * std::exp(-(z1 * z1 + z2 * z2));
        }
        return sum * h;
    }
    double sum = 0;
    for (int k1 = 0; k1 < grid; ++k1) {
        const double z1 = lo + (k1 + 0.5) * h;
        double row = 0;
        for (int k2 = 0; k2 < grid; ++k2) {
            const double z2 = lo + (k2 + 0.5) * h;
            const double z3 = -z1 - z2;
            if (z1 < z2 && z2 < z3) {
                const double v = (z1 - z2) * (z1 - z3) * (z2 - z3);
                row += v * v * std::exp(-(z1 * z1 + z2 * z2 + z3 * z3));
            }
        }
        sum += row;
    }
    return sum * h * h;
}

std::vector<ConvergenceRow> convergence_table(int d, int r, const std::vector<long long>& n_list,
                                              int threads) {
    if (d < 2 || r < 1) throw std::invalid_argument("convergence_table: need d >= 2, r >= 1");
    auto rows = parallel_map_indexed<ConvergenceRow>(n_list.size(), threads, [&](size_t i) {
        ConvergenceRow row;
        row.n = n_list[i];
        if (row.n < 1) {
            row.error = "n must be positive";
            return row;
        }
        const double cost = estimated_dp_cost(d, r, row.n);
        if (cost > kDpCostLimit) {
            row.error = "infeasible: estimated strip-DP cost " + std::to_string(cost) +
                        " exceeds " + std::to_string(kDpCostLimit);
            return row;
        }
        row.log_exact = log_count(rsk_word_count(d, r, static_cast<int>(row.n), 1));
        row.log_asym = asym_log_A(d, r, row.n);
        row.ratio = std::exp(row.log_exact - row.log_asym);
        return row;
    });
    return rows;
}

ShapeProfile shape_contribution_profile(int d, int r, int n, int num_bins, int threads) {
    if (d < 1 || r < 1 || n < 1 || num_bins < 1)
        throw std::invalid_argument("shape_contribution_profile: bad inputs");
    if (estimated_dp_cost(d, r, n) > kDpCostLimit)
        throw std::runtime_error("shape_contribution_profile: n infeasible for the exact DP");

    const long long rn = static_cast<long long>(r) * n;
    const auto kostka = kostka_rect_all(r, n, d);
    const auto shapes = partitions_bounded(rn, d);
    auto masses = parallel_map_indexed<Count>(shapes.size(), threads, [&](size_t i) {
        auto it = kostka.find(shapes[i]);
        if (it == kostka.end() || it->second == 0) return Count(0);
        return Count(count_syt(shapes[i]) * it->second);
    });

    // Bins cover [0, dev_max] where dev_max is attained by the single-row shape.
    double dev_max = d >= 2 ? static_cast<double>(rn) * (1.0 - 1.0 / d) / std::sqrt(static_cast<double>(n)) : 1.0;
    const double width = dev_max / num_bins;

    ShapeProfile profile;
    profile.total = 0;
    profile.bins.resize(static_cast<size_t>(num_bins));
    for (int b = 0; b < num_bins; ++b) {
        profile.bins[static_cast<size_t>(b)].lo = b * width;
        profile.bins[static_cast<size_t>(b)].hi = (b + 1) * width;
        profile.bins[static_cast<size_t>(b)].mass = 0;
    }
    for (size_t i = 0; i < shapes.size(); ++i) {
        if (masses[i] == 0) continue;
        const auto dv = deviation_vector(shapes[i], d, r, n);
        double dev = 0;
        for (double v : dv.z) dev = std::max(dev, std::abs(v));
        int b = std::min(static_cast<int>(dev / width), num_bins - 1);
        profile.bins[static_cast<size_t>(b)].mass += masses[i];
        profile.total += masses[i];
    }
    for (auto& bin : profile.bins) {
        mpq_class q(bin.mass, profile.total);
        q.canonicalize();
        bin.share = q.get_d();
    }
    return profile;
}

}  // namespace liscount
