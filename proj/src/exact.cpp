#include "liscount/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "liscount/parallel.hpp"

namespace liscount {

Count count_syt(const Partition& lambda) {
    const auto hooks = hook_lengths(lambda);
    Count numerator = factorial(static_cast<unsigned long>(lambda.weight()));
    Count denom = 1;
    for (int h : hooks) denom *= h;
    mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
    return numerator;
}

namespace {

using ShapeKey = std::vector<int>;  // padded to a fixed row count
using Layer = std::map<ShapeKey, Count>;

// Adds every horizontal-strip extension of `base` by exactly `cells` cells to
// `out`, scaled by `value`. Row i may grow up to row_caps[i] (and never past
// the previous row's old length).
void extend_by_strip(const ShapeKey& base, const std::vector<int>& row_caps, int cells,
                     const Count& value, Layer& out) {
    const int rows = static_cast<int>(base.size());
    ShapeKey shape = base;
    std::function<void(int, int)> walk = [&](int row, int remaining) {
        if (row == rows) {
            if (remaining == 0) {
                auto [it, inserted] = out.try_emplace(shape, value);
                if (!inserted) it->second += value;
            }
            return;
        }
        int ub = row_caps[static_cast<size_t>(row)];
        if (row > 0) ub = std::min(ub, base[static_cast<size_t>(row - 1)]);
        ub = std::min(ub, base[static_cast<size_t>(row)] + remaining);
        for (int len = base[static_cast<size_t>(row)]; len <= ub; ++len) {
            shape[static_cast<size_t>(row)] = len;
            walk(row + 1, remaining - (len - base[static_cast<size_t>(row)]));
        }
        shape[static_cast<size_t>(row)] = base[static_cast<size_t>(row)];
    };
    walk(0, cells);
    return;
}

Layer strip_chain_dp(const std::vector<int>& row_caps, int r, int n) {
    const int rows = static_cast<int>(row_caps.size());
    Layer layer;
    layer.emplace(ShapeKey(static_cast<size_t>(rows), 0), Count(1));
    for (int step = 0; step < n; ++step) {
        Layer next;
        for (const auto& [shape, value] : layer)
            extend_by_strip(shape, row_caps, r, value, next);
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

Count kostka_rect_content(const Partition& lambda, int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("r must be positive and n nonnegative");
    if (lambda.weight() != static_cast<long long>(r) * n)
        throw std::invalid_argument("partition weight does not equal r*n");
    if (lambda.empty()) return 1;
    const int rows = lambda.length();
    Layer layer = strip_chain_dp(lambda.padded(rows), r, n);
    auto it = layer.find(lambda.padded(rows));
    return it == layer.end() ? Count(0) : it->second;
}

std::map<Partition, Count> kostka_rect_all(int r, int n, int d) {
    if (r < 1 || n < 0 || d < 1) throw std::invalid_argument("r, d must be positive, n nonnegative");
    const long long rn = static_cast<long long>(r) * n;
    std::vector<int> caps(static_cast<size_t>(d), static_cast<int>(std::min<long long>(rn, INT32_MAX)));
    Layer layer = strip_chain_dp(caps, r, n);
    std::map<Partition, Count> out;
    for (auto& [shape, value] : layer) out.emplace(Partition(shape), std::move(value));
    return out;
}

namespace {

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(parts), 0);
    std::function<void(int, int)> walk = [&](int idx, int remaining) {
        if (idx == parts - 1) {
            cur[static_cast<size_t>(idx)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(idx)] = v;
            walk(idx + 1, remaining - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    walk(0, total);
    return out;
}

}  // namespace

Count coeff_power_hr(const std::vector<int>& k, int r, int n, int d) {
    if (d < 1 || static_cast<int>(k.size()) != d)
        throw std::invalid_argument("k must have exactly d entries");
    if (r < 0 || n < 0) throw std::invalid_argument("r and n must be nonnegative");
    long long sum = 0;
    for (int v : k) {
        if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
        sum += v;
    }
    if (sum != static_cast<long long>(r) * n)
        throw std::invalid_argument("exponent sum does not equal r*n");

    // Dense table over the capped exponent box.
    std::vector<size_t> stride(static_cast<size_t>(d));
    size_t box = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride[static_cast<size_t>(i)] = box;
        box *= static_cast<size_t>(k[static_cast<size_t>(i)] + 1);
    }
    const auto monomials = compositions(r, d);

    std::vector<Count> cur(box), next(box);
    cur[0] = 1;
    std::vector<int> expo(static_cast<size_t>(d), 0);
    for (int step = 0; step < n; ++step) {
        for (auto& c : next) c = 0;
        std::fill(expo.begin(), expo.end(), 0);
        for (size_t idx = 0; idx < box; ++idx) {
            if (cur[idx] != 0) {
                for (const auto& mono : monomials) {
                    size_t target = idx;
                    bool ok = true;
                    for (int i = 0; i < d; ++i) {
                        int e = expo[static_cast<size_t>(i)] + mono[static_cast<size_t>(i)];
                        if (e > k[static_cast<size_t>(i)]) { ok = false; break; }
                        target += stride[static_cast<size_t>(i)] * static_cast<size_t>(mono[static_cast<size_t>(i)]);
                    }
                    if (ok) next[target] += cur[idx];
                }
            }
            // odometer increment of expo
            for (int i = d - 1; i >= 0; --i) {
                if (++expo[static_cast<size_t>(i)] <= k[static_cast<size_t>(i)]) break;
                expo[static_cast<size_t>(i)] = 0;
            }
        }
        std::swap(cur, next);
    }
    return cur[box - 1];
}

Count kostka_via_jacobi_trudi(const Partition& lambda, int r, int n, int pad) {
    if (r < 1 || n < 0) throw std::invalid_argument("r must be positive and n nonnegative");
    if (lambda.weight() != static_cast<long long>(r) * n)
        throw std::invalid_argument("partition weight does not equal r*n");
    const int d = pad == 0 ? std::max(lambda.length(), 1) : pad;
    if (d < lambda.length()) throw std::invalid_argument("pad smaller than partition length");

    const auto padded = lambda.padded(d);
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    Count total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        std::vector<int> expo(static_cast<size_t>(d));
        bool valid = true;
        for (int i = 0; i < d; ++i) {
            expo[static_cast<size_t>(i)] = padded[static_cast<size_t>(i)] + perm[static_cast<size_t>(i)] - i;
            if (expo[static_cast<size_t>(i)] < 0) { valid = false; break; }
        }
        if (!valid) continue;  // a negative exponent contributes nothing
        Count term = coeff_power_hr(expo, r, n, d);
        if (inversions % 2 == 0) total += term; else total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

int longest_strictly_increasing_subsequence(const std::vector<int>& word) {
    std::vector<int> tails;
    for (int x : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x); else *it = x;
    }
    return static_cast<int>(tails.size());
}

namespace {

// True iff the word has a strictly increasing subsequence of length > d.
bool lis_exceeds(const std::vector<int>& word, int d, std::vector<int>& tails) {
    tails.clear();
    for (int x : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) {
            tails.push_back(x);
            if (static_cast<int>(tails.size()) > d) return true;
        } else {
            *it = x;
        }
    }
    return false;
}

}  // namespace

Count brute_force_word_count(int d, int r, int n, int cap) {
    if (d < 1 || r < 1 || n < 1) throw std::invalid_argument("d, r, n must be positive");
    const long long rn = static_cast<long long>(r) * n;
    if (rn > cap)
        throw std::runtime_error("brute-force enumeration refused: r*n = " + std::to_string(rn) +
                                 " exceeds the cap of " + std::to_string(cap));
    std::vector<int> word;
    word.reserve(static_cast<size_t>(rn));
    for (int letter = 1; letter <= n; ++letter)
        for (int copy = 0; copy < r; ++copy) word.push_back(letter);
    Count total = 0;
    std::vector<int> tails;
    tails.reserve(static_cast<size_t>(rn));
    do {
        if (!lis_exceeds(word, d, tails)) total += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    return total;
}

Count rsk_word_count(int d, int r, int n, int threads) {
    if (d < 1 || r < 1 || n < 1) throw std::invalid_argument("d, r, n must be positive");
    const auto kostka = kostka_rect_all(r, n, d);
    const auto shapes = partitions_bounded(static_cast<long long>(r) * n, d);
    auto terms = parallel_map_indexed<Count>(shapes.size(), threads, [&](size_t i) {
        const Partition& shape = shapes[i];
        auto it = kostka.find(shape);
        if (it == kostka.end() || it->second == 0) return Count(0);
        return Count(count_syt(shape) * it->second);
    });
    Count total = 0;
    for (const auto& term : terms) total += term;
    return total;
}

}  // namespace liscount
