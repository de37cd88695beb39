#include "liscount/contour.hpp"

#include <numbers>

#include "liscount/parallel.hpp"

namespace liscount {

namespace {

using Complex = std::complex<double>;

struct GridSetup {
    int d = 0;
    int npts = 0;
    std::vector<double> radii;
    std::vector<int> lam;  // lambda padded to d parts
};

GridSetup prepare(const Partition& lambda, int r, int n, const QuadratureSpec& q, int d,
                  int default_npts_for(const GridSetup&, int, int)) {
    if (r < 1 || n < 1) throw std::invalid_argument("r and n must be positive");
    if (lambda.weight() != static_cast<long long>(r) * n)
        throw std::invalid_argument("partition weight does not equal r*n");
    GridSetup g;
    g.d = d > 0 ? d : std::max(lambda.length(), 1);
    if (lambda.length() > g.d) throw std::invalid_argument("partition has more than d parts");
    if (!q.radii.empty()) {
        if (static_cast<int>(q.radii.size()) != g.d)
            throw std::invalid_argument("radii size does not equal d");
        for (double rho : q.radii)
            if (!(rho > 0)) throw std::invalid_argument("radii must be positive");
        g.radii = q.radii;
    } else {
        g.radii.assign(static_cast<size_t>(g.d), 1.0);
    }
    g.lam = lambda.padded(g.d);
    g.npts = q.points_per_dim > 0 ? q.points_per_dim : default_npts_for(g, r, n);

    // Magnitude guard: the integrand's modulus never exceeds
    // h_r(radii)^n * prod radii^{-lambda}, which must stay inside double range.
    double bound = n * std::log(h_eval(g.radii, r));
    for (int i = 0; i < g.d; ++i) bound += g.lam[static_cast<size_t>(i)] * std::abs(std::log(g.radii[static_cast<size_t>(i)]));
    if (bound > 700.0)
        throw std::runtime_error(
            "contour integrand magnitude out of double range (log bound " + std::to_string(bound) +
            " > 700); use a smaller n, the reduced form with saddle radii, or the exact DP");
    return g;
}

// One integrand evaluation: h_r(x)^n * prod x_j^{-lambda_j} * V(x), with the
// integer powers taken through exp of the complex log (exact for integers).
Complex integrand(const std::vector<Complex>& x, const std::vector<int>& lam, int r, int n) {
    Complex h = h_eval(x, r);
    if (std::abs(h) == 0.0) return Complex(0, 0);
    Complex w = static_cast<double>(n) * std::log(h);
    for (size_t j = 0; j < x.size(); ++j) w -= static_cast<double>(lam[j]) * std::log(x[j]);
    return std::exp(w) * vandermonde_factor(x);
}

long long ipow(long long b, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

}  // namespace

ContourResult kostka_contour_full(const Partition& lambda, int r, int n, const QuadratureSpec& q,
                                  int d, int threads) {
    GridSetup g = prepare(lambda, r, n, q, d,
                          [](const GridSetup& s, int rr, int nn) { return rr * nn + s.lam[0] + s.d + 1; });
    const int N = g.npts;
    const double step = 2.0 * std::numbers::pi / N;
    const long long inner = ipow(N, g.d - 1);

    // Row k0 fixes the first angle; inner angles run row-major.
    auto rows = parallel_map_indexed<Complex>(static_cast<size_t>(N), threads, [&](size_t k0) {
        std::vector<Complex> x(static_cast<size_t>(g.d));
        std::vector<int> idx(static_cast<size_t>(g.d), 0);
        x[0] = g.radii[0] * std::polar(1.0, step * static_cast<double>(k0));
        Complex sum(0, 0);
        for (long long t = 0; t < inner; ++t) {
            for (int j = 1; j < g.d; ++j)
                x[static_cast<size_t>(j)] =
                    g.radii[static_cast<size_t>(j)] * std::polar(1.0, step * idx[static_cast<size_t>(j)]);
            sum += integrand(x, g.lam, r, n);
            for (int j = g.d - 1; j >= 1; --j) {
                if (++idx[static_cast<size_t>(j)] < N) break;
                idx[static_cast<size_t>(j)] = 0;
            }
        }
        return sum;
    });
    Complex total(0, 0);
    for (const Complex& row : rows) total += row;
    total /= static_cast<double>(ipow(N, g.d));

    return ContourResult{total.real(), total.imag(), N, g.radii,
                         static_cast<long long>(N) * inner};
}

ContourResult kostka_contour_reduced(const Partition& lambda, int r, int n, const QuadratureSpec& q,
                                     int d, int threads) {
    GridSetup g = prepare(lambda, r, n, q, d,
                          [](const GridSetup& s, int rr, int nn) { return 2 * (rr * nn + s.lam[0] + s.d) + 1; });
    const int N = g.npts;

    if (g.d == 1) {
        // Zero-dimensional integral: a single evaluation at the radius.
        std::vector<Complex> x{Complex(g.radii[0], 0)};
        Complex v = integrand(x, g.lam, r, n);
        return ContourResult{v.real(), v.imag(), N, g.radii, 1};
    }

    const double step = 2.0 * std::numbers::pi / N;
    const long long inner = ipow(N, g.d - 2);
    auto rows = parallel_map_indexed<Complex>(static_cast<size_t>(N), threads, [&](size_t k0) {
        std::vector<Complex> x(static_cast<size_t>(g.d));
        std::vector<int> idx(static_cast<size_t>(g.d) - 1, 0);
        idx[0] = static_cast<int>(k0);
        Complex sum(0, 0);
        for (long long t = 0; t < inner; ++t) {
            long long total_idx = 0;
            for (int j = 0; j < g.d - 1; ++j) {
                total_idx += idx[static_cast<size_t>(j)];
                x[static_cast<size_t>(j)] =
                    g.radii[static_cast<size_t>(j)] * std::polar(1.0, step * idx[static_cast<size_t>(j)]);
            }
            x[static_cast<size_t>(g.d) - 1] =
                g.radii[static_cast<size_t>(g.d) - 1] * std::polar(1.0, -step * static_cast<double>(total_idx));
            sum += integrand(x, g.lam, r, n);
            for (int j = g.d - 2; j >= 1; --j) {
                if (++idx[static_cast<size_t>(j)] < N) break;
                idx[static_cast<size_t>(j)] = 0;
            }
        }
        return sum;
    });
    Complex total(0, 0);
    for (const Complex& row : rows) total += row;
    total /= static_cast<double>(ipow(N, g.d - 1));

    return ContourResult{total.real(), total.imag(), N, g.radii,
                         static_cast<long long>(N) * inner};
}

}  // namespace liscount
