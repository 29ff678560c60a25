#include "sandpiles/coding.hpp"

namespace sandpiles {

DifferenceCoding difference_coding(const Heights& partition) {
    if (!is_partition(partition)) throw BadInput("difference coding is defined on partitions");
    DifferenceCoding d;
    d.diffs.reserve(partition.size());
    for (std::size_t i = 0; i < partition.size(); ++i) {
        Height next = i + 1 < partition.size() ? partition[i + 1] : 0;
        d.diffs.push_back(partition[i] - next);
    }
    return d;
}

Heights partition_from_coding(const DifferenceCoding& d) {
    for (std::int64_t x : d.diffs)
        if (x < 0) throw BadInput("difference coding entries must be non-negative");
    if (!d.diffs.empty() && d.diffs.back() < 1)
        throw BadInput("the last coding entry is the last column height and must be positive");
    Heights out(d.diffs.size());
    std::int64_t running = 0;
    for (std::size_t i = d.diffs.size(); i-- > 0;) {
        running += d.diffs[i];
        out[i] = running;
    }
    return out;
}

DifferenceCoding pspm_step_coded(const DifferenceCoding& d) {
    const std::size_t k = d.diffs.size();
    std::vector<std::int64_t> next(k + 1, 0);
    std::copy(d.diffs.begin(), d.diffs.end(), next.begin());
    for (std::size_t i = 0; i < k; ++i) {
        if (d.diffs[i] < 2) continue;
        next[i] -= 2;
        if (i > 0) next[i - 1] += 1;
        next[i + 1] += 1;
    }
    while (!next.empty() && next.back() == 0) next.pop_back();
    return DifferenceCoding{std::move(next)};
}

std::string to_literal(const DifferenceCoding& d) { return to_literal(d.diffs); }

}  // namespace sandpiles
