#include "liscount/partition.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace liscount {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition part must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
        if (ec != std::errc() || ptr != text.data() + comma)
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<int> Partition::padded(int d) const {
    if (d < length()) throw std::invalid_argument("pad length smaller than partition length");
    std::vector<int> out = parts_;
    out.resize(static_cast<size_t>(d), 0);
    return out;
}

std::vector<int> Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int row = 0; row < length(); ++row)
        for (int col = 0; col < parts_[static_cast<size_t>(row)]; ++col)
            ++conj[static_cast<size_t>(col)];
    return conj;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void emit_partitions(long long remaining, int max_part, int slots_left,
                     std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (slots_left == 0) return;
    // Smallest admissible next part: ceil(remaining / slots_left).
    long long low = (remaining + slots_left - 1) / slots_left;
    long long high = std::min<long long>(max_part, remaining);
    for (long long p = high; p >= low; --p) {
        stack.push_back(static_cast<int>(p));
        emit_partitions(remaining - p, static_cast<int>(p), slots_left - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_bounded(long long total, int max_parts) {
    if (total < 0) throw std::invalid_argument("total must be nonnegative");
    if (max_parts < 1) throw std::invalid_argument("max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> stack;
    long long cap = total > 0 ? total : 1;
    if (cap > INT32_MAX) throw std::invalid_argument("total too large");
    emit_partitions(total, static_cast<int>(cap), max_parts, stack, out);
    return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
    std::vector<int> conj = lambda.conjugate();
    std::vector<int> hooks;
    hooks.reserve(static_cast<size_t>(lambda.weight()));
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.parts()[static_cast<size_t>(i)]; ++j) {
            int arm = lambda.parts()[static_cast<size_t>(i)] - (j + 1);
            int leg = conj[static_cast<size_t>(j)] - (i + 1);
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    int rows = std::max(lambda.length(), mu.length());
    for (int i = 0; i < rows; ++i) {
        if (lambda.part(i) < mu.part(i)) return false;   // containment
        if (mu.part(i) < lambda.part(i + 1)) return false;  // one cell per column
    }
    return true;
}

DeviationVector deviation_vector(const Partition& lambda, int d, int r, int n) {
    if (d < 1 || r < 1 || n < 1) throw std::invalid_argument("d, r, n must be positive");
    if (lambda.length() > d) throw std::invalid_argument("partition has more than d parts");
    long long rn = static_cast<long long>(r) * n;
    if (lambda.weight() != rn)
        throw std::invalid_argument("partition weight does not equal r*n");
    DeviationVector dev;
    dev.n = n;
    dev.r = r;
    const double center = static_cast<double>(rn) / d;
    const double scale = std::sqrt(static_cast<double>(n));
    dev.z.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        dev.z.push_back((static_cast<double>(lambda.part(i)) - center) / scale);
    return dev;
}

}  // namespace liscount
