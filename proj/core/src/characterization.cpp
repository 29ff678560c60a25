#include "sandpiles/characterization.hpp"

#include <algorithm>
#include <cmath>

namespace sandpiles {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw BadInput("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_spm_reachable(const Heights& partition) {
    if (!is_partition(partition)) throw BadInput("right-only reachability is defined on partitions");
    const std::size_t k = partition.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (partition[i] != partition[i + 1]) continue;
        // Doubled value found; forbidden if a unit staircase leads to another
        // doubled value (the degenerate case is a triple).
        std::size_t j = i + 1;
        while (j + 1 < k) {
            if (partition[j + 1] == partition[j]) return false;
            if (partition[j + 1] != partition[j] - 1) break;
            ++j;
        }
    }
    return true;
}

Heights spm_fixed_point(std::int64_t n) {
    if (n < 1) throw BadInput("fixed points exist for weight >= 1");
    const std::int64_t p = (isqrt(8 * n + 1) - 1) / 2;  // largest p with p(p+1)/2 <= n
    const std::int64_t q = n - p * (p + 1) / 2;
    Heights out;
    out.reserve(static_cast<std::size_t>(p + 1));
    for (std::int64_t v = p; v >= 1; --v) {
        out.push_back(v);
        if (v == q) out.push_back(v);
    }
    return out;
}

bool is_sspm_form(const Heights& unimodal) {
    if (!is_unimodal(unimodal)) throw BadInput("form membership is defined on unimodal sequences");
    const std::size_t k = unimodal.size();
    auto nondecreasing_prefix = [&](std::size_t end) {
        for (std::size_t i = 1; i < end; ++i)
            if (unimodal[i - 1] > unimodal[i]) return false;
        return true;
    };
    auto nonincreasing_suffix = [&](std::size_t begin) {
        for (std::size_t i = begin + 1; i < k; ++i)
            if (unimodal[i - 1] < unimodal[i]) return false;
        return true;
    };
    for (std::size_t split = 0; split < k; ++split) {
        if (!nondecreasing_prefix(split) || !nonincreasing_suffix(split)) continue;
        Heights suffix(unimodal.begin() + static_cast<std::ptrdiff_t>(split), unimodal.end());
        Heights prefix_rev(unimodal.rend() - static_cast<std::ptrdiff_t>(split), unimodal.rend());
        if (is_spm_reachable(suffix) && is_spm_reachable(prefix_rev)) return true;
    }
    return false;
}

namespace {

// Height of the right-only fixed point of weight w, 0 for w = 0.
std::int64_t fixed_point_height(std::int64_t w) {
    return (isqrt(8 * w + 1) - 1) / 2;
}

}  // namespace

std::set<Form> enumerate_fixed_point_forms(std::int64_t n) {
    if (n < 1) throw BadInput("fixed-point forms exist for weight >= 1");
    // Every stable reachable form splits into two right-only fixed points,
    // one reversed; conversely any such junction with a height gap <= 1 and
    // unit outer columns is stable and reachable. Walking the split weight
    // and pre-filtering on heights keeps the materialized candidates O(sqrt n).
    std::set<Form> out;
    for (std::int64_t left = 0; left <= n; ++left) {
        const std::int64_t right = n - left;
        const std::int64_t hl = fixed_point_height(left);
        const std::int64_t hr = fixed_point_height(right);
        if (hl - hr > 1 || hr - hl > 1) continue;
        if (left == 0 && hr > 1) continue;   // window must open at height 1
        if (right == 0 && hl > 1) continue;  // and close at height 1
        Heights u = left > 0 ? reversed(spm_fixed_point(left)) : Heights{};
        if (right > 0) {
            Heights b = spm_fixed_point(right);
            u.insert(u.end(), b.begin(), b.end());
        }
        out.insert(Form{std::move(u)});
    }
    return out;
}

SeparatorReport div_profile(const Form& p) {
    const Heights& s = p.heights;
    if (s.empty()) throw BadInput("imbalance profile of an empty form");
    const std::int64_t total = weight(s);
    const Height peak = height(s);
    SeparatorReport report;
    report.profile.reserve(s.size());
    std::int64_t before = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::int64_t after = total - before - s[i];
        report.profile.push_back(std::abs(after - before));
        before += s[i];
    }
    report.div_value = *std::min_element(report.profile.begin(), report.profile.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (report.profile[i] == report.div_value)
            report.separators.push_back(static_cast<std::int64_t>(i));
        if (!report.center && s[i] == peak && report.profile[i] <= peak)
            report.center = static_cast<std::int64_t>(i);
    }
    return report;
}

}  // namespace sandpiles
