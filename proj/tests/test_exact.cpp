#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "liscount/exact.hpp"

using namespace liscount;

namespace {

// Oracle: count standard Young tableaux by backtracking placement of 1..m.
Count syt_by_backtracking(const Partition& lam) {
    const int rows = lam.length();
    std::vector<int> filled(static_cast<size_t>(std::max(rows, 1)), 0);
    std::function<Count(int)> place = [&](int next) -> Count {
        if (next > lam.weight()) return 1;
        Count total = 0;
        for (int i = 0; i < rows; ++i) {
            if (filled[static_cast<size_t>(i)] >= lam.part(i)) continue;
            if (i > 0 && filled[static_cast<size_t>(i)] >= filled[static_cast<size_t>(i) - 1]) continue;
            ++filled[static_cast<size_t>(i)];
            total += place(next + 1);
            --filled[static_cast<size_t>(i)];
        }
        return total;
    };
    return place(1);
}

// Oracle: count SSYT of shape lam and content r^n by filling cells row by row.
Count ssyt_by_backtracking(const Partition& lam, int r, int n) {
    const int rows = lam.length();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) t[static_cast<size_t>(i)].assign(static_cast<size_t>(lam.part(i)), 0);
    std::vector<int> used(static_cast<size_t>(n) + 1, 0);
    std::function<Count(int, int)> fill = [&](int i, int j) -> Count {
        if (i == rows) return 1;
        int ni = i, nj = j + 1;
        if (nj >= lam.part(i)) { ni = i + 1; nj = 0; }
        Count total = 0;
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[static_cast<size_t>(i)][static_cast<size_t>(j) - 1]);       // rows weakly increase
        if (i > 0) lo = std::max(lo, t[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] + 1);   // columns strictly increase
        for (int v = lo; v <= n; ++v) {
            if (used[static_cast<size_t>(v)] == r) continue;
            ++used[static_cast<size_t>(v)];
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            total += fill(ni, nj);
            --used[static_cast<size_t>(v)];
        }
        return total;
    };
    return fill(0, 0);
}

// Oracle: quadratic LIS (strictly increasing).
int lis_quadratic(const std::vector<int>& w) {
    std::vector<int> best(w.size(), 1);
    int ans = w.empty() ? 0 : 1;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
        ans = std::max(ans, best[i]);
    }
    return ans;
}

// Oracle: sparse polynomial power for coeff_power_hr on small inputs.
Count coeff_by_poly_mult(const std::vector<int>& k, int r, int n, int d) {
    std::map<std::vector<int>, Count> poly{{std::vector<int>(static_cast<size_t>(d), 0), Count(1)}};
    std::vector<std::vector<int>> monos;
    std::vector<int> mono(static_cast<size_t>(d), 0);
    std::function<void(int, int)> gen = [&](int idx, int rem) {
        if (idx == d - 1) { mono[static_cast<size_t>(idx)] = rem; monos.push_back(mono); return; }
        for (int v = 0; v <= rem; ++v) { mono[static_cast<size_t>(idx)] = v; gen(idx + 1, rem - v); }
    };
    gen(0, r);
    for (int step = 0; step < n; ++step) {
        std::map<std::vector<int>, Count> next;
        for (const auto& [e, c] : poly)
            for (const auto& m : monos) {
                std::vector<int> t(e);
                for (int i = 0; i < d; ++i) t[static_cast<size_t>(i)] += m[static_cast<size_t>(i)];
                next[t] += c;
            }
        poly = std::move(next);
    }
    auto it = poly.find(k);
    return it == poly.end() ? Count(0) : it->second;
}

}  // namespace

TEST_CASE("count_syt matches backtracking enumeration") {
    for (long long m : {1LL, 3LL, 5LL, 7LL, 8LL})
        for (const auto& lam : partitions_bounded(m, static_cast<int>(m)))
            CHECK(count_syt(lam) == syt_by_backtracking(lam));
    CHECK(count_syt(Partition({4, 3, 1})) == 70);
    CHECK(count_syt(Partition(std::vector<int>{})) == 1);
}

TEST_CASE("kostka_rect_content matches SSYT enumeration") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; r * n <= 8; ++n)
            for (const auto& lam : partitions_bounded(static_cast<long long>(r) * n, r * n))
                CHECK(kostka_rect_content(lam, r, n) == ssyt_by_backtracking(lam, r, n));
    CHECK_THROWS(kostka_rect_content(Partition({3, 1}), 2, 3));  // weight mismatch
}

TEST_CASE("kostka_rect_all agrees with per-shape DP and finds every nonzero shape") {
    for (int r : {1, 2, 3})
        for (int n : {2, 3})
            for (int d : {2, 3}) {
                auto all = kostka_rect_all(r, n, d);
                for (const auto& lam : partitions_bounded(static_cast<long long>(r) * n, d)) {
                    Count want = kostka_rect_content(lam, r, n);
                    auto it = all.find(lam);
                    if (it == all.end())
                        CHECK(want == 0);
                    else
                        CHECK(it->second == want);
                }
            }
}

TEST_CASE("coeff_power_hr") {
    // r=1 collapses to the multinomial theorem.
    CHECK(coeff_power_hr({2, 2, 1}, 1, 5, 3) == 30);
    CHECK(coeff_power_hr({5, 0, 0}, 1, 5, 3) == 1);
    // Sparse-multiplication oracle on generic small inputs.
    for (const auto& [k, r, n] :
         std::initializer_list<std::tuple<std::vector<int>, int, int>>{
             {{4, 2}, 2, 3}, {{3, 3}, 3, 2}, {{6, 2, 1}, 3, 3}, {{2, 2, 2, 2}, 2, 4}}) {
        const int d = static_cast<int>(k.size());
        CHECK(coeff_power_hr(k, r, n, d) == coeff_by_poly_mult(k, r, n, d));
    }
    // h_0^n = 1.
    CHECK(coeff_power_hr({0, 0}, 0, 4, 2) == 1);
    CHECK_THROWS(coeff_power_hr({1, 1}, 2, 2, 2));   // sum != r*n
    CHECK_THROWS(coeff_power_hr({1, -1}, 0, 1, 2));  // negative exponent
}

TEST_CASE("Jacobi-Trudi agrees with the strip DP, any padding") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; r * n <= 9; ++n)
            for (const auto& lam : partitions_bounded(static_cast<long long>(r) * n, 3)) {
                Count dp = kostka_rect_content(lam, r, n);
                CHECK(kostka_via_jacobi_trudi(lam, r, n) == dp);
                CHECK(kostka_via_jacobi_trudi(lam, r, n, 4) == dp);  // padding is immaterial
            }
    CHECK_THROWS(kostka_via_jacobi_trudi(Partition({3, 2, 1}), 2, 3, 2));  // pad < length
}

TEST_CASE("longest strictly increasing subsequence") {
    CHECK(longest_strictly_increasing_subsequence({}) == 0);
    CHECK(longest_strictly_increasing_subsequence({5, 5, 5}) == 1);
    CHECK(longest_strictly_increasing_subsequence({1, 2, 3, 4}) == 4);
    CHECK(longest_strictly_increasing_subsequence({3, 1, 2, 1, 4}) == 3);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> w(static_cast<size_t>(trial % 30));
        for (auto& x : w) x = val(rng);
        CHECK(longest_strictly_increasing_subsequence(w) == lis_quadratic(w));
    }
}

TEST_CASE("brute force refuses past its cap and handles edge content") {
    CHECK_THROWS_WITH_AS(brute_force_word_count(2, 3, 5), doctest::Contains("cap of 12"),
                         std::runtime_error);
    CHECK(brute_force_word_count(2, 3, 5, 15) > 0);  // explicit cap override
    // d=1 admits only the weakly decreasing arrangement.
    CHECK(brute_force_word_count(1, 2, 4) == 1);
    CHECK(rsk_word_count(1, 2, 4) == 1);
}

TEST_CASE("rsk_word_count equals brute force and known columns") {
    for (int d = 2; d <= 3; ++d)
        for (int r = 1; r <= 2; ++r)
            for (int n = 1; r * n <= 8; ++n)
                CHECK(rsk_word_count(d, r, n) == brute_force_word_count(d, r, n));
    // d >= rn puts no constraint at all: every arrangement counts.
    CHECK(rsk_word_count(8, 2, 3) == multiset_permutations(2, 3));
    CHECK(rsk_word_count(6, 1, 5) == 120);
    // Thread count cannot change the exact sum.
    CHECK(rsk_word_count(3, 2, 5, 1) == rsk_word_count(3, 2, 5, 4));
}
