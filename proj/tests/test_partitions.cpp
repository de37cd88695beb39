#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "liscount/partition.hpp"

using namespace liscount;

namespace {

// Independent counting oracle: p(total, max_parts, max_part) by a recursion
// unrelated to the generator's.
long long count_partitions(long long total, int max_parts, long long max_part) {
    if (total == 0) return 1;
    if (max_parts == 0 || max_part == 0) return 0;
    long long c = 0;
    for (long long p = std::min<long long>(total, max_part); p >= 1; --p)
        c += count_partitions(total - p, max_parts - 1, p);
    return c;
}

// Cell-level hook oracle: scan the arm and leg explicitly.
std::vector<int> hooks_by_scanning(const Partition& lam) {
    std::vector<int> out;
    const auto& rows = lam.parts();
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < rows[static_cast<size_t>(i)]; ++j) {
            int arm = rows[static_cast<size_t>(i)] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < static_cast<int>(rows.size()); ++k)
                if (rows[static_cast<size_t>(k)] > j) ++leg;
            out.push_back(arm + leg + 1);
        }
    return out;
}

// Cell-level strip oracle: containment plus at most one new cell per column.
bool strip_by_cells(const Partition& lam, const Partition& mu) {
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lam.part(i)) return false;
    int max_col = lam.length() ? lam.part(0) : 0;
    for (int col = 0; col < max_col; ++col) {
        int tall_lam = 0, tall_mu = 0;
        for (int i = 0; i < lam.length(); ++i) {
            if (lam.part(i) > col) ++tall_lam;
            if (mu.part(i) > col) ++tall_mu;
        }
        if (tall_lam - tall_mu > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse and to_string") {
    CHECK(Partition::parse("5,3,1").to_string() == "5,3,1");
    CHECK(Partition::parse("").to_string() == "");
    CHECK(Partition::parse("7").parts() == std::vector<int>{7});
    CHECK(Partition::parse("4,4,0,0").to_string() == "4,4");  // trailing zeros dropped
    CHECK_THROWS(Partition::parse("1,2"));    // increasing
    CHECK_THROWS(Partition::parse("3,,1"));
    CHECK_THROWS(Partition::parse("a"));
    CHECK_THROWS(Partition::parse("3,-1"));
}

TEST_CASE("basic accessors") {
    Partition lam({5, 3, 1});
    CHECK(lam.length() == 3);
    CHECK(lam.weight() == 9);
    CHECK(lam.part(0) == 5);
    CHECK(lam.part(7) == 0);  // zero-padded access past the end
    CHECK(lam.padded(4) == std::vector<int>{5, 3, 1, 0});
    CHECK_THROWS(lam.padded(2));
    CHECK(lam.conjugate() == std::vector<int>{3, 2, 2, 1, 1});
    CHECK(Partition(std::vector<int>{}).empty());
    CHECK_THROWS(Partition({1, 3}));
}

TEST_CASE("partitions_bounded matches an independent counter and is decreasing-lex") {
    for (long long total : {0LL, 1LL, 5LL, 9LL, 12LL}) {
        for (int parts : {1, 2, 3, 5}) {
            auto got = partitions_bounded(total, parts);
            CHECK(static_cast<long long>(got.size()) == count_partitions(total, parts, total));
            std::set<std::vector<int>> seen;
            for (size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].weight() == total);
                CHECK(got[i].length() <= parts);
                CHECK(seen.insert(got[i].parts()).second);  // no duplicates
                if (i > 0) CHECK(got[i - 1].parts() > got[i].parts());  // decreasing lex
            }
        }
    }
    // Hand-checked listing.
    auto p43 = partitions_bounded(4, 3);
    REQUIRE(p43.size() == 4);
    CHECK(p43[0].to_string() == "4");
    CHECK(p43[1].to_string() == "3,1");
    CHECK(p43[2].to_string() == "2,2");
    CHECK(p43[3].to_string() == "2,1,1");
}

TEST_CASE("hook lengths match the scanning oracle") {
    for (long long m : {1LL, 4LL, 7LL, 10LL})
        for (const auto& lam : partitions_bounded(m, static_cast<int>(m)))
            CHECK(hook_lengths(lam) == hooks_by_scanning(lam));
    // The classic staircase example.
    CHECK(hook_lengths(Partition({2, 1})) == std::vector<int>{3, 1, 1});
}

TEST_CASE("horizontal strip predicate matches the cell oracle") {
    for (long long wl : {0LL, 1LL, 3LL, 5LL, 6LL})
        for (long long wm : {0LL, 1LL, 3LL, 5LL, 6LL})
            for (const auto& lam : partitions_bounded(wl, std::max(static_cast<int>(wl), 1)))
                for (const auto& mu : partitions_bounded(wm, std::max(static_cast<int>(wm), 1)))
                    CHECK(is_horizontal_strip(lam, mu) == strip_by_cells(lam, mu));
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({1, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));  // two cells in column 1
}

TEST_CASE("deviation vectors") {
    auto dv = deviation_vector(Partition({6, 2}), 2, 2, 4);
    REQUIRE(dv.z.size() == 2);
    CHECK(dv.z[0] == doctest::Approx(1.0));
    CHECK(dv.z[1] == doctest::Approx(-1.0));
    CHECK(dv.n == 4);
    CHECK(dv.r == 2);

    // Padding contributes zero parts.
    auto dv3 = deviation_vector(Partition({6}), 3, 2, 3);
    CHECK(dv3.z[2] == doctest::Approx(-2.0 / std::sqrt(3.0)));

    // Components always sum to ~0 when the weight matches.
    for (const auto& lam : partitions_bounded(12, 3)) {
        auto v = deviation_vector(lam, 3, 3, 4);
        double s = 0;
        for (double x : v.z) s += x;
        CHECK(std::abs(s) < 1e-12);
    }

    CHECK_THROWS(deviation_vector(Partition({5, 2}), 2, 2, 4));     // weight != rn
    CHECK_THROWS(deviation_vector(Partition({4, 2, 2}), 2, 2, 4));  // more parts than d
}
