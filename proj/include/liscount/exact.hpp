#pragma once

#include <map>
#include <vector>

#include "liscount/bigint.hpp"
#include "liscount/partition.hpp"

namespace liscount {

// Number of standard Young tableaux of shape lambda, by the hook-length
// formula: weight! / prod(hooks). Exact.
Count count_syt(const Partition& lambda);

// Kostka number K_{lambda, r^n}: semistandard tableaux of shape lambda and
// content r^n. Forward DP over chains of horizontal strips of size r,
// restricted to shapes contained in lambda.
Count kostka_rect_content(const Partition& lambda, int r, int n);

// K_{lambda, r^n} for every lambda of weight r*n with at most d parts, in one
// forward DP pass. Keys are the partitions from partitions_bounded(r*n, d).
std::map<Partition, Count> kostka_rect_all(int r, int n, int d);

// Coefficient of x_1^{k_1} ... x_d^{k_d} in (h_r(x_1..x_d))^n, by truncated
// polynomial powering with exponents capped at k. Requires sum(k) = r*n.
Count coeff_power_hr(const std::vector<int>& k, int r, int n, int d);

// K_{lambda, r^n} via the Jacobi-Trudi determinant, expanded over all d!
// permutations. pad = 0 uses the partition length; larger pads give the same
// value. Oracle-scale only (d! terms).
Count kostka_via_jacobi_trudi(const Partition& lambda, int r, int n, int pad = 0);

// Length of the longest strictly increasing subsequence, patience style.
int longest_strictly_increasing_subsequence(const std::vector<int>& word);

inline constexpr int kBruteForceDefaultCap = 12;

// Counts words 1^r 2^r ... n^r with no strictly increasing subsequence of
// length d+1, by enumerating all multiset permutations. Refuses when
// r*n exceeds the cap.
Count brute_force_word_count(int d, int r, int n, int cap = kBruteForceDefaultCap);

// Same count through the tableau bijection: sum of f_lambda * K_{lambda,r^n}
// over partitions of r*n with at most d parts. threads = 0 uses all cores;
// the result is identical for every thread count.
Count rsk_word_count(int d, int r, int n, int threads = 0);

}  // namespace liscount
