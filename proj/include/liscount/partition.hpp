#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace liscount {

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros. A fixed-length zero-padded view is available for code
// that works with a part-count bound d.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "5,3,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    // part(i) is zero beyond the stored parts, matching zero padding.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    // Zero-padded copy of length d; d must be >= length().
    std::vector<int> padded(int d) const;

    std::vector<int> conjugate() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of `total` with at most `max_parts` parts, in decreasing
// lexicographic order. total = 0 yields just the empty partition.
std::vector<Partition> partitions_bounded(long long total, int max_parts);

// One hook length per cell, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

// True iff mu is contained in lambda and lambda/mu has at most one cell per
// column, i.e. lambda_i >= mu_i >= lambda_{i+1} for all i.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

// Deviation coordinates of a partition around the d-row rectangle rn/d,
// at scale sqrt(n): lambda_i = rn/d + z_i * sqrt(n).
struct DeviationVector {
    std::vector<double> z;
    int n = 0;
    int r = 0;
};

DeviationVector deviation_vector(const Partition& lambda, int d, int r, int n);

}  // namespace liscount
