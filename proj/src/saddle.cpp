#include "liscount/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "liscount/contour.hpp"

namespace liscount {

namespace {

void check_positive(const std::vector<double>& x) {
    for (double v : x)
        if (!(v > 0)) throw std::invalid_argument("coordinates must be positive");
}

// Gaussian elimination with partial pivoting; a is destroyed.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int m = static_cast<int>(b.size());
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int row = col + 1; row < m; ++row)
            if (std::abs(a[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
                std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
                pivot = row;
        if (a[static_cast<size_t>(pivot)][static_cast<size_t>(col)] == 0.0)
            throw std::runtime_error("singular Newton system");
        std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
        std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        for (int row = col + 1; row < m; ++row) {
            double f = a[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                       a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            if (f == 0.0) continue;
            for (int k = col; k < m; ++k)
                a[static_cast<size_t>(row)][static_cast<size_t>(k)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(k)];
            b[static_cast<size_t>(row)] -= f * b[static_cast<size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<size_t>(m), 0.0);
    for (int row = m - 1; row >= 0; --row) {
        double s = b[static_cast<size_t>(row)];
        for (int k = row + 1; k < m; ++k)
            s -= a[static_cast<size_t>(row)][static_cast<size_t>(k)] * x[static_cast<size_t>(k)];
        x[static_cast<size_t>(row)] = s / a[static_cast<size_t>(row)][static_cast<size_t>(row)];
    }
    return x;
}

}  // namespace

std::vector<double> phi(const std::vector<double>& x, int r) {
    if (r < 1) throw std::invalid_argument("phi: r must be positive");
    check_positive(x);
    const double h = h_eval(x, r);
    const auto grad = h_grad(x, r);
    std::vector<double> out(x.size());
    for (size_t j = 0; j < x.size(); ++j) out[j] = x[j] * grad[j] / h;
    return out;
}

std::vector<std::vector<double>> jacobian_phi(const std::vector<double>& x, int r) {
    if (r < 1) throw std::invalid_argument("jacobian_phi: r must be positive");
    check_positive(x);
    const size_t d = x.size();
    const double h = h_eval(x, r);
    const auto g = h_grad(x, r);
    const auto hh = h_hessian(x, r);
    std::vector<std::vector<double>> jac(d, std::vector<double>(d, 0.0));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) {
            if (i == j)
                jac[j][i] = ((g[j] + x[j] * hh[j][j]) * h - x[j] * g[j] * g[j]) / (h * h);
            else
                jac[j][i] = (x[j] * hh[i][j] * h - x[j] * g[i] * g[j]) / (h * h);
        }
    return jac;
}

SaddlePoint solve_saddle(const std::vector<double>& y, int r, double tol, double ball_radius) {
    const int d = static_cast<int>(y.size());
    if (d < 1) throw std::invalid_argument("solve_saddle: empty y");
    if (r < 1) throw std::invalid_argument("solve_saddle: r must be positive");
    check_positive(y);
    double sum = 0;
    for (double v : y) sum += v;
    if (std::abs(sum - r) > 1e-12 * std::max(1.0, static_cast<double>(r)))
        throw std::invalid_argument("solve_saddle: y does not sum to r");

    SaddlePoint sp;
    sp.y = y;
    if (ball_radius < 0) ball_radius = static_cast<double>(r) / (2.0 * d);
    for (double v : y)
        if (std::abs(v - static_cast<double>(r) / d) > ball_radius) sp.outside_ball = true;

    std::vector<double> x(static_cast<size_t>(d), 1.0);
    auto residual_of = [&](const std::vector<double>& pt) {
        const auto p = phi(pt, r);
        double m = 0;
        for (int j = 0; j < d; ++j) m = std::max(m, std::abs(p[static_cast<size_t>(j)] - y[static_cast<size_t>(j)]));
        return m;
    };
    double res = residual_of(x);
    if (res <= tol) {  // rectangular contents return the all-ones point untouched
        sp.x0 = x;
        sp.residual = res;
        return sp;
    }

    const int m = d - 1;  // unknowns; x_d pinned to 1
    for (int iter = 1; iter <= 50; ++iter) {
        const auto p = phi(x, r);
        const auto jac = jacobian_phi(x, r);
        std::vector<std::vector<double>> a(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m)));
        std::vector<double> rhs(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            rhs[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] - p[static_cast<size_t>(j)];
            for (int i = 0; i < m; ++i) a[static_cast<size_t>(j)][static_cast<size_t>(i)] = jac[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        const auto delta = solve_linear(std::move(a), std::move(rhs));

        double scale = 1.0;
        std::vector<double> trial = x;
        double trial_res = res;
        while (true) {
            bool positive = true;
            for (int j = 0; j < m; ++j) {
                trial[static_cast<size_t>(j)] = x[static_cast<size_t>(j)] + scale * delta[static_cast<size_t>(j)];
                if (trial[static_cast<size_t>(j)] <= 0) positive = false;
            }
            if (positive) {
                trial_res = residual_of(trial);
                if (trial_res < res) break;
            }
            scale *= 0.5;
            if (scale < 0x1p-20) break;  // accept the tiny step; the cap below decides
        }
        x = trial;
        res = trial_res;
        sp.iterations = iter;
        if (res <= tol) {
            sp.x0 = x;
            sp.residual = res;
            return sp;
        }
    }
    throw std::runtime_error("solve_saddle: no convergence after 50 iterations; last residual " +
                             std::to_string(res));
}

std::vector<std::vector<double>> hessian_log_g(const std::vector<double>& x0,
                                               const std::vector<double>& y, int r) {
    if (x0.size() != y.size()) throw std::invalid_argument("hessian_log_g: size mismatch");
    check_positive(x0);
    const size_t d = x0.size();
    const auto p = phi(x0, r);
    for (size_t j = 0; j < d; ++j)
        if (std::abs(p[j] - y[j]) > 1e-10)
            throw std::invalid_argument("hessian_log_g: (x0, y) violate the saddle system by " +
                                        std::to_string(std::abs(p[j] - y[j])));
    const double h = h_eval(x0, r);
    const auto hh = h_hessian(x0, r);
    std::vector<std::vector<double>> G(d, std::vector<double>(d, 0.0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (i == j)
                G[i][i] = (y[i] * (1.0 - y[i]) * h + x0[i] * x0[i] * hh[i][i]) / h;
            else
                G[i][j] = (x0[i] * x0[j] * hh[i][j] - y[i] * y[j] * h) / h;
        }
    return G;
}

LocalModel local_model(int d, int r) {
    if (d < 1 || r < 1) throw std::invalid_argument("local_model: d, r must be positive");
    LocalModel lm;
    lm.d = d;
    lm.r = r;
    const double dd = d, rr = r;
    lm.alpha = rr * (dd - 1.0) * (dd + rr) / (dd * dd * (dd + 1.0));
    lm.beta = -rr * (dd + rr) / (dd * dd * (dd + 1.0));
    lm.alpha_prime = dd * (dd + 1.0) / (rr * (dd + rr));
    lm.hessian = hessian_log_g(std::vector<double>(static_cast<size_t>(d), 1.0),
                               std::vector<double>(static_cast<size_t>(d), rr / dd), r);
    return lm;
}

double local_expansion_error(const DeviationVector& z, int r, long long n) {
    const int d = static_cast<int>(z.z.size());
    if (d < 1 || r < 1 || n < 1) throw std::invalid_argument("local_expansion_error: bad inputs");
    double zsum = 0;
    for (double v : z.z) zsum += v;
    if (std::abs(zsum) > 1e-9) throw std::invalid_argument("local_expansion_error: z must sum to 0");

    const double sq = std::sqrt(static_cast<double>(n));
    std::vector<double> y(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) y[static_cast<size_t>(i)] = static_cast<double>(r) / d + z.z[static_cast<size_t>(i)] / sq;
    const auto sp = solve_saddle(y, r);

    double log_mean = 0;
    for (double v : sp.x0) log_mean += std::log(v);
    const double gm = std::exp(log_mean / d);

    const double ap = local_model(d, r).alpha_prime;
    double err = 0;
    for (int i = 0; i < d; ++i) {
        const double predicted = 1.0 + ap * z.z[static_cast<size_t>(i)] / sq;
        err = std::max(err, std::abs(sp.x0[static_cast<size_t>(i)] / gm - predicted));
    }
    return err;
}

}  // namespace liscount
