#pragma once

#include <optional>
#include <set>

#include "sandpiles/configuration.hpp"

namespace sandpiles {

std::int64_t isqrt(std::int64_t n);  // floor square root; throws BadInput for n < 0

// Whether a partition occurs in the right-only sequential game started from a
// single column of its weight. Equivalent window test: the sequence must not
// contain (p,p,p), nor a doubled p followed by a unit staircase down to a
// doubled q with 0 < q < p.
bool is_spm_reachable(const Heights& partition);  // throws BadInput on non-partition

// The unique right-only fixed point of weight n: take p maximal with
// p(p+1)/2 <= n and q = n - p(p+1)/2; staircase p..1 with q doubled.
Heights spm_fixed_point(std::int64_t n);  // throws BadInput for n < 1

// Whether a unimodal sequence is the form of some configuration reachable in
// the symmetric sequential game from a single column. Split test: some suffix
// and the reversed strict prefix are both right-only reachable partitions.
bool is_sspm_form(const Heights& unimodal);  // throws BadInput on non-unimodal

// All forms of symmetric-game fixed points of weight n. Exactly floor(sqrt n)
// of them; every member peaks at floor(sqrt n) or floor(sqrt n) - 1.
std::set<Form> enumerate_fixed_point_forms(std::int64_t n);  // throws BadInput for n < 1

// Flank-weight imbalance per column: profile[i] = |w(P_{<i}) - w(P_{>i})|.
struct SeparatorReport {
    std::int64_t div_value = 0;               // minimum of the profile
    std::vector<std::int64_t> profile;        // one entry per column, 0-based
    std::vector<std::int64_t> separators;     // columns attaining the minimum
    std::optional<std::int64_t> center;       // leftmost peak column whose imbalance is <= the peak height
};
SeparatorReport div_profile(const Form& p);   // throws BadInput on empty

}  // namespace sandpiles
