#include "liscount/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liscount/asym.hpp"
#include "liscount/contour.hpp"
#include "liscount/exact.hpp"
#include "liscount/saddle.hpp"

namespace liscount {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Doubles destined for JSON are rounded to the declared 12 significant digits
// so the printed form round-trips at that precision.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

std::string join12(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt12(v[i]);
    }
    return s;
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed --n-list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("--n-list is empty");
    return out;
}

enum class Format { text, json_fmt, csv };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::text;
    if (f == "json") return Format::json_fmt;
    if (f == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "must be text, json, or csv");
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

int infer_n(const Partition& shape, int r, int n) {
    if (n > 0) {
        require(shape.weight() == static_cast<long long>(r) * n, "shape weight must equal r*n");
        return n;
    }
    require(r >= 1 && shape.weight() % r == 0, "shape weight must be divisible by r");
    return static_cast<int>(shape.weight() / r);
}

// ---------------------------------------------------------------------------
// verify subcommand: named invariant checks at quick or full scale.

struct Check {
    std::string name;
    std::function<bool(std::ostream&)> fn;
};

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

std::vector<Check> build_checks(bool full, int threads) {
    std::vector<Check> checks;

    checks.push_back({"catalan-column", [=](std::ostream&) {
        const int nmax = full ? 40 : 15;
        for (int n = 1; n <= nmax; ++n) {
            Count catalan = binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)) / (n + 1);
            if (rsk_word_count(2, 1, n, threads) != catalan) return false;
        }
        return true;
    }});

    checks.push_back({"rsk-vs-brute", [=](std::ostream&) {
        const int rmax = full ? 3 : 2;
        const int cap = full ? 10 : 8;
        for (int d = 2; d <= 3; ++d)
            for (int r = 1; r <= rmax; ++r)
                for (int n = 1; r * n <= cap; ++n)
                    if (rsk_word_count(d, r, n, threads) != brute_force_word_count(d, r, n)) return false;
        return true;
    }});

    checks.push_back({"kostka-dp-vs-jt", [=](std::ostream&) {
        const int wmax = full ? 16 : 8;
        const int dmax = full ? 4 : 3;
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; r * n <= wmax; ++n)
                for (int d = 1; d <= dmax; ++d)
                    for (const auto& lam : partitions_bounded(static_cast<long long>(r) * n, d))
                        if (kostka_rect_content(lam, r, n) != kostka_via_jacobi_trudi(lam, r, n, d))
                            return false;
        return true;
    }});

    checks.push_back({"syt-hook-vs-kostka", [=](std::ostream&) {
        const int wmax = full ? 16 : 10;
        for (int m = 1; m <= wmax; ++m)
            for (const auto& lam : partitions_bounded(m, m))
                if (count_syt(lam) != kostka_rect_content(lam, 1, m)) return false;
        return true;
    }});

    checks.push_back({"contour-vs-dp", [=](std::ostream&) {
        const int wmax = full ? 12 : 8;
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; r * n <= wmax; ++n)
                for (int d = 1; d <= 3; ++d)
                    for (const auto& lam : partitions_bounded(static_cast<long long>(r) * n, d)) {
                        const double exact = mpz_get_d(kostka_rect_content(lam, r, n).get_mpz_t());
                        const double tol = 1e-8 * std::max(1.0, exact);
                        if (std::abs(kostka_contour_full(lam, r, n, {}, d, threads).value - exact) > tol)
                            return false;
                        if (std::abs(kostka_contour_reduced(lam, r, n, {}, d, threads).value - exact) > tol)
                            return false;
                    }
        return true;
    }});

    checks.push_back({"euler-homogeneity", [=](std::ostream&) {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> u(0.2, 3.0);
        for (int d = 1; d <= 4; ++d)
            for (int r = 1; r <= 4; ++r)
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<double> x(static_cast<size_t>(d));
                    for (auto& v : x) v = u(rng);
                    const auto p = phi(x, r);
                    double s = 0;
                    for (double v : p) s += v;
                    if (std::abs(s - r) > 1e-10 * r) return false;
                }
        return true;
    }});

    checks.push_back({"saddle-closed-forms", [=](std::ostream&) {
        const auto rect = solve_saddle({0.5, 0.5}, 1);
        if (rect.x0 != std::vector<double>{1.0, 1.0} || rect.iterations != 0) return false;
        const auto sp = solve_saddle({0.6, 0.4}, 1);
        if (!approx(sp.x0[0], 1.5, 1e-10)) return false;
        for (int d = 2; d <= 4; ++d)
            for (int r = 1; r <= 3; ++r) {
                const auto lm = local_model(d, r);
                const auto jac = jacobian_phi(std::vector<double>(static_cast<size_t>(d), 1.0), r);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        const double want = i == j ? lm.alpha : lm.beta;
                        if (std::abs(jac[static_cast<size_t>(i)][static_cast<size_t>(j)] - want) > 1e-10)
                            return false;
                        if (std::abs(lm.hessian[static_cast<size_t>(i)][static_cast<size_t>(j)] - want) > 1e-10)
                            return false;
                    }
            }
        return true;
    }});

    checks.push_back({"hessian-eigenstructure", [=](std::ostream&) {
        for (int d = 2; d <= 4; ++d)
            for (int r = 1; r <= 3; ++r) {
                const auto lm = local_model(d, r);
                // G annihilates the diagonal line and scales zero-sum vectors by alpha-beta.
                for (int i = 0; i < d; ++i) {
                    double row = 0;
                    for (int j = 0; j < d; ++j) row += lm.hessian[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (std::abs(row) > 1e-10) return false;
                }
                std::vector<double> v(static_cast<size_t>(d), 0.0);
                v[0] = 1.0;
                v[static_cast<size_t>(d) - 1] = -1.0;
                for (int i = 0; i < d; ++i) {
                    double got = 0;
                    for (int j = 0; j < d; ++j)
                        got += lm.hessian[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
                    if (std::abs(got - (lm.alpha - lm.beta) * v[static_cast<size_t>(i)]) > 1e-10) return false;
                }
                if (!approx(lm.alpha - lm.beta, 1.0 / lm.alpha_prime, 1e-12)) return false;
            }
        return true;
    }});

    checks.push_back({"regev-closed-vs-quadrature", [=](std::ostream&) {
        for (int d = 2; d <= 3; ++d) {
            const int grid = full ? 0 : (d == 2 ? 2001 : 501);
            if (!approx(regev_integral_closed(d), regev_integral_quadrature(d, grid), 1e-3)) return false;
        }
        return true;
    }});

    checks.push_back({"asym-log-increment", [=](std::ostream&) {
        const double diff = asym_log_A(2, 1, 1000000) - asym_log_A(2, 1, 999999);
        return std::abs(diff - log_count(growth_base(2, 1))) < 1e-3;
    }});

    checks.push_back({"estimate-vs-exact", [=](std::ostream&) {
        const long long n = full ? 400 : 100;
        const double band = full ? 0.15 : 0.2;
        for (int r = 1; r <= 2; ++r) {
            const long long rn = r * n;
            const long long sq = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
            const Partition lam({static_cast<int>(rn / 2 + sq), static_cast<int>(rn / 2 - sq)});
            const auto est = kostka_estimate(deviation_vector(lam, 2, r, static_cast<int>(n)), 2, r, n);
            const Count exact = kostka_rect_content(lam, r, static_cast<int>(n));
            const double ratio = std::exp(log_count(exact) - est.value_log);
            if (std::abs(ratio - 1.0) > band) return false;
        }
        return true;
    }});

    checks.push_back({"estimate-antisymmetry", [=](std::ostream&) {
        const DeviationVector inc{{-1.5, 0.5, 1.0}, 0, 0};
        const DeviationVector swapped{{0.5, -1.5, 1.0}, 0, 0};
        const auto a = kostka_estimate(inc, 3, 2, 50);
        const auto b = kostka_estimate(swapped, 3, 2, 50);
        return a.sign == 1 && b.sign == -1 && approx(a.value_log, b.value_log, 1e-12);
    }});

    checks.push_back({"profile-shares", [=](std::ostream&) {
        const int n = full ? 100 : 30;
        const auto prof = shape_contribution_profile(2, 1, n, 20, threads);
        Count mass_sum = 0;
        double share_sum = 0;
        for (const auto& b : prof.bins) {
            mass_sum += b.mass;
            share_sum += b.share;
        }
        return mass_sum == prof.total && std::abs(share_sum - 1.0) < 1e-9;
    }});

    if (full) {
        checks.push_back({"convergence-trend", [=](std::ostream&) {
            const auto rows = convergence_table(2, 1, {25, 100}, threads);
            return rows[0].error.empty() && rows[1].error.empty() &&
                   rows[1].ratio >= 0.97 && rows[1].ratio <= 1.00 &&
                   std::abs(rows[1].ratio - 1.0) < std::abs(rows[0].ratio - 1.0);
        }});
    }

    return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and asymptotic counting of fixed-content words without long strictly increasing subsequences"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::function<void()> action;

    // Shared option storage; each subcommand binds the flags it uses.
    int d = 0, r = 0, n = 0, threads = 0, quad_points = 0, bins = 20, pad = 0;
    double tol = 1e-12;
    std::string shape_str, method, kostka_method, n_list_str, format_str = "text", suite = "quick";

    // --- exact ---------------------------------------------------------------
    auto* exact_cmd = app.add_subcommand("exact", "count words by RSK sum and/or brute force");
    exact_cmd->add_option("--d", d, "maximum strictly increasing run allowed is d")->required();
    exact_cmd->add_option("--r", r, "copies of each letter")->required();
    exact_cmd->add_option("--n", n, "number of distinct letters")->required();
    exact_cmd->add_option("--method", method, "rsk | brute | both")->default_val("rsk");
    exact_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    exact_cmd->add_option("--format", format_str, "text | json");
    exact_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            std::string rsk, brute;
            if (method == "rsk" || method == "both") rsk = to_decimal(rsk_word_count(d, r, n, threads));
            if (method == "brute" || method == "both") brute = to_decimal(brute_force_word_count(d, r, n));
            if (method != "rsk" && method != "brute" && method != "both")
                throw std::invalid_argument("--method must be rsk, brute, or both");
            const bool agree = method != "both" || rsk == brute;
            if (fmt == Format::json_fmt) {
                json j{{"d", d}, {"r", r}, {"n", n}, {"method", method}};
                if (!rsk.empty()) j["rsk"] = rsk;
                if (!brute.empty()) j["brute"] = brute;
                if (method == "both") j["agree"] = agree;
                else j["count"] = rsk.empty() ? brute : rsk;
                out << j.dump() << "\n";
            } else if (fmt == Format::text) {
                if (method == "both") {
                    out << "rsk " << rsk << "\n" << "brute " << brute << "\n";
                    out << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
                } else {
                    out << (rsk.empty() ? brute : rsk) << "\n";
                }
            } else {
                throw std::invalid_argument("csv format not supported for scalar output");
            }
            if (!agree) exit_code = 2;
        };
    });

    // --- kostka --------------------------------------------------------------
    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number K_{lambda, r^n} by several methods");
    kostka_cmd->add_option("--shape", shape_str, "partition, e.g. 5,3,1")->required();
    kostka_cmd->add_option("--r", r, "content multiplicity")->required();
    kostka_cmd->add_option("--n", n, "number of letters (default: weight/r)");
    kostka_cmd->add_option("--d", pad, "number of variables / padded length");
    kostka_cmd->add_option("--method", kostka_method, "dp | jt | contour-full | contour-reduced")->default_val("dp");
    kostka_cmd->add_option("--quad-points", quad_points, "points per dimension for the contour rules");
    kostka_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    kostka_cmd->add_option("--format", format_str, "text | json");
    kostka_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const Partition lam = Partition::parse(shape_str);
            const int nn = infer_n(lam, r, n);
            if (kostka_method == "dp" || kostka_method == "jt") {
                const Count k = kostka_method == "dp" ? kostka_rect_content(lam, r, nn)
                                               : kostka_via_jacobi_trudi(lam, r, nn, pad);
                if (fmt == Format::json_fmt) {
                    out << json{{"shape", lam.to_string()}, {"r", r}, {"n", nn},
                                {"method", kostka_method}, {"count", to_decimal(k)}}.dump() << "\n";
                } else if (fmt == Format::text) {
                    out << to_decimal(k) << "\n";
                } else {
                    throw std::invalid_argument("csv format not supported for scalar output");
                }
                return;
            }
            if (kostka_method != "contour-full" && kostka_method != "contour-reduced")
                throw std::invalid_argument("--method must be dp, jt, contour-full, or contour-reduced");
            QuadratureSpec q;
            q.points_per_dim = quad_points;
            const ContourResult res = kostka_method == "contour-full"
                                          ? kostka_contour_full(lam, r, nn, q, pad, threads)
                                          : kostka_contour_reduced(lam, r, nn, q, pad, threads);
            const double nearest = std::round(res.value);
            if (fmt == Format::json_fmt) {
                out << json{{"shape", lam.to_string()}, {"r", r}, {"n", nn}, {"method", kostka_method},
                            {"value", round12(res.value)}, {"imag_residue", round12(res.imag)},
                            {"nearest_integer", nearest},
                            {"distance", round12(std::abs(res.value - nearest))},
                            {"points_per_dim", res.points_per_dim},
                            {"radii", res.radii}}.dump() << "\n";
            } else if (fmt == Format::text) {
                out << "value " << fmt12(res.value) << "\n";
                out << "imag_residue " << fmt12(res.imag) << "\n";
                out << "nearest_integer " << fmt12(nearest) << "\n";
                out << "distance " << fmt12(std::abs(res.value - nearest)) << "\n";
                out << "points_per_dim " << res.points_per_dim << "\n";
                out << "radii " << join12(res.radii) << "\n";
            } else {
                throw std::invalid_argument("csv format not supported for scalar output");
            }
        };
    });

    // --- syt -----------------------------------------------------------------
    auto* syt_cmd = app.add_subcommand("syt", "number of standard Young tableaux of a shape");
    syt_cmd->add_option("--shape", shape_str, "partition, e.g. 4,3,1")->required();
    syt_cmd->add_option("--format", format_str, "text | json");
    syt_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const Partition lam = Partition::parse(shape_str);
            const Count f = count_syt(lam);
            if (fmt == Format::json_fmt)
                out << json{{"shape", lam.to_string()}, {"count", to_decimal(f)}}.dump() << "\n";
            else if (fmt == Format::text)
                out << to_decimal(f) << "\n";
            else
                throw std::invalid_argument("csv format not supported for scalar output");
        };
    });

    // --- saddle ----------------------------------------------------------------
    auto* saddle_cmd = app.add_subcommand("saddle", "solve the saddle system for y = shape/n");
    saddle_cmd->add_option("--shape", shape_str, "partition defining y = shape/n")->required();
    saddle_cmd->add_option("--n", n, "number of letters")->required();
    saddle_cmd->add_option("--r", r, "content multiplicity")->required();
    saddle_cmd->add_option("--d", pad, "pad the shape to d coordinates");
    saddle_cmd->add_option("--tol", tol, "Newton residual tolerance");
    saddle_cmd->add_option("--format", format_str, "text | json");
    saddle_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const Partition lam = Partition::parse(shape_str);
            const int dd = pad > 0 ? pad : std::max(lam.length(), 1);
            const auto padded = lam.padded(dd);
            std::vector<double> y(padded.size());
            for (size_t i = 0; i < padded.size(); ++i) y[i] = static_cast<double>(padded[i]) / n;
            const auto sp = solve_saddle(y, r, tol);
            if (fmt == Format::json_fmt) {
                std::vector<double> x0r(sp.x0.size()), yr(sp.y.size());
                for (size_t i = 0; i < sp.x0.size(); ++i) x0r[i] = round12(sp.x0[i]);
                for (size_t i = 0; i < sp.y.size(); ++i) yr[i] = round12(sp.y[i]);
                out << json{{"y", yr}, {"x0", x0r}, {"residual", round12(sp.residual)},
                            {"iterations", sp.iterations}, {"outside_ball", sp.outside_ball}}.dump()
                    << "\n";
            } else if (fmt == Format::text) {
                out << "y " << join12(sp.y) << "\n";
                out << "x0 " << join12(sp.x0) << "\n";
                out << "residual " << fmt12(sp.residual) << "\n";
                out << "iterations " << sp.iterations << "\n";
                out << "outside_ball " << (sp.outside_ball ? "true" : "false") << "\n";
            } else {
                throw std::invalid_argument("csv format not supported for scalar output");
            }
        };
    });

    // --- asym ------------------------------------------------------------------
    auto* asym_cmd = app.add_subcommand("asym", "asymptotic model: base, constant, log of the estimate");
    asym_cmd->add_option("--d", d, "maximum strictly increasing run allowed is d")->required();
    asym_cmd->add_option("--r", r, "copies of each letter")->required();
    asym_cmd->add_option("--n", n, "number of distinct letters")->required();
    asym_cmd->add_option("--format", format_str, "text | json");
    asym_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const auto model = asymptotic_model(d, r);
            const double la = asym_log_A(d, r, n);
            if (fmt == Format::json_fmt) {
                out << json{{"d", d}, {"r", r}, {"n", n}, {"base", to_decimal(model.base)},
                            {"poly_exponent", model.poly_exponent},
                            {"constant", round12(model.constant)}, {"log_asym", round12(la)}}.dump()
                    << "\n";
            } else if (fmt == Format::text) {
                out << "base " << to_decimal(model.base) << "\n";
                out << "poly_exponent " << fmt12(model.poly_exponent) << "\n";
                out << "constant " << fmt12(model.constant) << "\n";
                out << "log_asym " << fmt12(la) << "\n";
            } else {
                throw std::invalid_argument("csv format not supported for scalar output");
            }
        };
    });

    // --- converge ----------------------------------------------------------------
    auto* conv_cmd = app.add_subcommand("converge", "exact/asymptotic ratio table over a list of n");
    conv_cmd->add_option("--d", d, "maximum strictly increasing run allowed is d")->required();
    conv_cmd->add_option("--r", r, "copies of each letter")->required();
    conv_cmd->add_option("--n-list", n_list_str, "comma-separated n values")->required();
    conv_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    conv_cmd->add_option("--format", format_str, "text | json | csv");
    conv_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const auto rows = convergence_table(d, r, parse_n_list(n_list_str), threads);
            if (fmt == Format::json_fmt) {
                json arr = json::array();
                for (const auto& row : rows) {
                    json j{{"n", row.n}};
                    if (row.error.empty()) {
                        j["log_exact"] = round12(row.log_exact);
                        j["log_asym"] = round12(row.log_asym);
                        j["ratio"] = round12(row.ratio);
                    } else {
                        j["error"] = row.error;
                    }
                    arr.push_back(j);
                }
                out << arr.dump() << "\n";
            } else if (fmt == Format::csv) {
                out << "n,log_exact,log_asym,ratio\n";
                for (const auto& row : rows) {
                    if (row.error.empty())
                        out << row.n << "," << fmt12(row.log_exact) << "," << fmt12(row.log_asym)
                            << "," << fmt12(row.ratio) << "\n";
                    else {
                        out << row.n << ",,,\n";
                        err << "n=" << row.n << ": " << row.error << "\n";
                    }
                }
            } else {
                for (const auto& row : rows) {
                    if (row.error.empty())
                        out << "n=" << row.n << " log_exact=" << fmt12(row.log_exact)
                            << " log_asym=" << fmt12(row.log_asym) << " ratio=" << fmt12(row.ratio)
                            << "\n";
                    else
                        out << "n=" << row.n << " error: " << row.error << "\n";
                }
            }
        };
    });

    // --- profile -----------------------------------------------------------------
    auto* prof_cmd = app.add_subcommand("profile", "mass of the RSK sum by shape deviation from rectangular");
    prof_cmd->add_option("--d", d, "maximum strictly increasing run allowed is d")->required();
    prof_cmd->add_option("--r", r, "copies of each letter")->required();
    prof_cmd->add_option("--n", n, "number of distinct letters")->required();
    prof_cmd->add_option("--bins", bins, "number of deviation buckets")->default_val(20);
    prof_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    prof_cmd->add_option("--format", format_str, "text | json | csv");
    prof_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const auto prof = shape_contribution_profile(d, r, n, bins, threads);
            if (fmt == Format::json_fmt) {
                json arr = json::array();
                for (const auto& b : prof.bins)
                    arr.push_back(json{{"lo", round12(b.lo)}, {"hi", round12(b.hi)},
                                       {"mass", to_decimal(b.mass)}, {"share", round12(b.share)}});
                out << json{{"total", to_decimal(prof.total)}, {"bins", arr}}.dump() << "\n";
            } else if (fmt == Format::csv) {
                out << "lo,hi,mass,share\n";
                for (const auto& b : prof.bins)
                    out << fmt12(b.lo) << "," << fmt12(b.hi) << "," << to_decimal(b.mass) << ","
                        << fmt12(b.share) << "\n";
            } else {
                out << "total " << to_decimal(prof.total) << "\n";
                for (const auto& b : prof.bins)
                    out << "[" << fmt12(b.lo) << "," << fmt12(b.hi) << ") share " << fmt12(b.share)
                        << "\n";
            }
        };
    });

    // --- regev -------------------------------------------------------------------
    auto* regev_cmd = app.add_subcommand("regev", "Gaussian-Vandermonde integral, closed form vs quadrature");
    regev_cmd->add_option("--d", d, "dimension")->required();
    regev_cmd->add_option("--quad-points", quad_points, "grid resolution per free coordinate");
    regev_cmd->add_option("--format", format_str, "text | json");
    regev_cmd->callback([&] {
        action = [&] {
            const Format fmt = parse_format(format_str);
            const double closed = regev_integral_closed(d);
            const double quad = regev_integral_quadrature(d, quad_points);
            const double rel = std::abs(closed - quad) / closed;
            if (fmt == Format::json_fmt)
                out << json{{"d", d}, {"closed", round12(closed)}, {"quadrature", round12(quad)},
                            {"rel_error", round12(rel)}}.dump() << "\n";
            else if (fmt == Format::text)
                out << "closed " << fmt12(closed) << "\nquadrature " << fmt12(quad)
                    << "\nrel_error " << fmt12(rel) << "\n";
            else
                throw std::invalid_argument("csv format not supported for scalar output");
        };
    });

    // --- verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--suite", suite, "quick | full")->default_val("quick");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify_cmd->callback([&] {
        action = [&] {
            if (suite != "quick" && suite != "full")
                throw std::invalid_argument("--suite must be quick or full");
            const auto checks = build_checks(suite == "full", threads);
            int failed = 0;
            for (const auto& check : checks) {
                bool ok = false;
                std::string detail;
                try {
                    ok = check.fn(out);
                } catch (const std::exception& e) {
                    detail = e.what();
                }
                if (ok) {
                    out << "ok " << check.name << "\n";
                } else {
                    ++failed;
                    out << "FAIL " << check.name;
                    if (!detail.empty()) out << " (" << detail << ")";
                    out << "\n";
                }
            }
            out << (failed == 0 ? "verification passed" : "verification FAILED") << " ("
                << (checks.size() - static_cast<size_t>(failed)) << "/" << checks.size() << ")\n";
            if (failed > 0) exit_code = 2;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace liscount
