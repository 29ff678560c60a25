#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sandpiles/configuration.hpp"
#include "sandpiles/models.hpp"

namespace sandpiles {

enum class ExploreMode { Positional, Forms };

struct ExploreOptions {
    ExploreMode mode = ExploreMode::Positional;
    std::size_t budget = 5'000'000;  // maximum distinct nodes
    unsigned workers = 1;            // frontier expansion threads
};

// Reachability graph from (n) at position 0 under one model. Nodes are sorted
// by (origin, heights); in Forms mode every node keeps origin 0 and node
// identity is the height sequence alone. Successor lists and the sink list
// are sorted, so equal spaces export byte-identically however they were
// scheduled.
struct SpaceGraph {
    Model model = Model::Spm;
    std::int64_t n = 0;
    ExploreMode mode = ExploreMode::Positional;
    std::vector<Configuration> nodes;
    std::vector<std::vector<std::uint32_t>> succ;
    std::vector<std::uint32_t> fixed;
    std::size_t edge_count = 0;
};

SpaceGraph explore(Height n, Model m, const ExploreOptions& opts = {});  // throws BudgetExceeded

std::set<Form> fixed_point_forms(const SpaceGraph& g);

// Exhaustive comparison of the three routes to the fixed-point forms of
// weight n: sequential symmetric walk, parallel symmetric walk, and the
// closed-form enumeration.
struct MainTheoremReport {
    std::int64_t n = 0;
    std::set<Form> sspm_forms;
    std::set<Form> psspm_forms;
    std::set<Form> enumerated;
    std::size_t sspm_fixed_positional = 0;
    std::size_t psspm_fixed_positional = 0;

    bool forms_equal() const { return sspm_forms == psspm_forms && sspm_forms == enumerated; }
    bool count_ok() const;                 // |forms| == floor(sqrt n)
    bool positional_containment() const {  // parallel pins fewer or equal resting places
        return psspm_fixed_positional <= sspm_fixed_positional;
    }
    bool ok() const { return forms_equal() && count_ok() && positional_containment(); }
};
MainTheoremReport verify_main_theorem(Height n, const ExploreOptions& opts = {});

// Steps to fixation from (n) for the deterministic evolutions: Pspm, or
// Psspm under a greedy policy.
struct TransientRow {
    Height n = 0;
    std::int64_t steps = 0;
};
std::vector<TransientRow> transient_stats(const std::vector<Height>& ns, Model m,
                                          std::optional<GreedyPolicy> policy = std::nullopt);

// Right-greedy fixation scan over n = (8k+4)^2: d is the distance of the
// right-most grain from the starting column, ratio = d / sqrt(n).
struct ConjectureRow {
    std::int64_t k = 0;
    Height n = 0;
    std::int64_t d = 0;
    double ratio = 0.0;
    bool plateau_free = false;
};
std::vector<ConjectureRow> conjecture_scan(std::int64_t k_max);  // throws BadInput for k_max < 1

bool plateau_free(const Heights& s);  // no two equal adjacent columns

}  // namespace sandpiles
