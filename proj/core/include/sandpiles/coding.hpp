#pragma once

#include "sandpiles/configuration.hpp"

namespace sandpiles {

// Difference coding of a partition: diffs[i] = a_i - a_{i+1} with a_{k+1} = 0.
// A column of a partition is right-collapsible exactly when its diff is >= 2.
struct DifferenceCoding {
    std::vector<std::int64_t> diffs;

    friend bool operator==(const DifferenceCoding&, const DifferenceCoding&) = default;
    friend auto operator<=>(const DifferenceCoding&, const DifferenceCoding&) = default;
};

DifferenceCoding difference_coding(const Heights& partition);  // throws BadInput on non-partition
Heights partition_from_coding(const DifferenceCoding& d);      // suffix sums; throws BadInput

// Parallel right-collapse step in coding space: every index with diff >= 2
// fires at once. Equivalent to pspm_step on the decoded partition.
DifferenceCoding pspm_step_coded(const DifferenceCoding& d);

std::string to_literal(const DifferenceCoding& d);

}  // namespace sandpiles
