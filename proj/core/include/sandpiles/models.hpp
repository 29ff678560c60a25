#pragma once

#include <map>
#include <set>
#include <vector>

#include "sandpiles/configuration.hpp"

namespace sandpiles {

// One legal single-grain move: `position` drops a grain onto its neighbor in
// `direction`. A column may move when it exceeds that neighbor by at least 2;
// positions outside the window count as height 0.
struct CollapseEvent {
    Position position;
    Direction direction;

    friend bool operator==(const CollapseEvent&, const CollapseEvent&) = default;
    friend auto operator<=>(const CollapseEvent&, const CollapseEvent&) = default;
};

// All legal moves of c under model m, sorted by (position, Left before Right).
// Spm/Pspm admit Right only; Sspm/Psspm admit both directions.
std::vector<CollapseEvent> collapsible(const Configuration& c, Model m);

bool is_fixed_point(const Configuration& c, Model m);

// Applies a batch of moves simultaneously: every new height is computed from
// the old ones. Callers guarantee at most one move per source column.
Configuration apply_events(const Configuration& c, const std::vector<CollapseEvent>& events);

// Sequential models: the set of one-move successors.
std::set<Configuration> spm_successors(const Configuration& c);
std::set<Configuration> sspm_successors(const Configuration& c);   // throws BadInput if not unimodal

// Parallel right-only step; a stable configuration returns itself.
Configuration pspm_step(const Configuration& c);
Heights pspm_step(const Heights& partition_like);

// Parallel symmetric step: every collapsible column moves, and each column
// collapsible on both sides independently picks one direction. One successor
// per direction assignment, deduplicated as a set.
std::set<Configuration> psspm_successors(const Configuration& c);  // throws BadInput if not unimodal

enum class GreedyPolicy { RightGreedy, LeftGreedy };

// Deterministic parallel symmetric step under a policy for the ambivalent
// columns. A stable configuration returns itself.
Configuration psspm_step_policy(const Configuration& c, GreedyPolicy policy);
Configuration psspm_step_policy(const Configuration& c,
                                const std::map<Position, Direction>& directions);
// throws DirectionMapIncomplete when an ambivalent column has no entry

}  // namespace sandpiles
