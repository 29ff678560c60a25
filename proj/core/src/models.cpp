#include "sandpiles/models.hpp"

#include <algorithm>
#include <cassert>

namespace sandpiles {

std::vector<CollapseEvent> collapsible(const Configuration& c, Model m) {
    const bool symmetric = m == Model::Sspm || m == Model::Psspm;
    std::vector<CollapseEvent> events;
    for (std::int64_t i = 0; i < c.size(); ++i) {
        const Height h = c.heights[static_cast<std::size_t>(i)];
        const Height left = i > 0 ? c.heights[static_cast<std::size_t>(i - 1)] : 0;
        const Height right = i + 1 < c.size() ? c.heights[static_cast<std::size_t>(i + 1)] : 0;
        if (symmetric && h - left >= 2) events.push_back({c.origin + i, Direction::Left});
        if (h - right >= 2) events.push_back({c.origin + i, Direction::Right});
    }
    return events;
}

bool is_fixed_point(const Configuration& c, Model m) { return collapsible(c, m).empty(); }

Configuration apply_events(const Configuration& c, const std::vector<CollapseEvent>& events) {
    if (events.empty()) return c;
    // The window can gain at most one column per side in a single step.
    const Position lo = c.left_edge() - 1;
    Heights h(c.heights.size() + 2, 0);
    std::copy(c.heights.begin(), c.heights.end(), h.begin() + 1);
    for (const CollapseEvent& e : events) {
        assert(c.contains(e.position));
        const std::size_t i = static_cast<std::size_t>(e.position - lo);
        h[i] -= 1;
        h[e.direction == Direction::Right ? i + 1 : i - 1] += 1;
    }
    std::size_t first = 0, last = h.size();
    while (first < last && h[first] == 0) ++first;
    while (last > first && h[last - 1] == 0) --last;
    return Configuration{Heights(h.begin() + static_cast<std::ptrdiff_t>(first),
                                 h.begin() + static_cast<std::ptrdiff_t>(last)),
                         lo + static_cast<Position>(first)};
}

std::set<Configuration> spm_successors(const Configuration& c) {
    std::set<Configuration> out;
    for (const CollapseEvent& e : collapsible(c, Model::Spm)) out.insert(apply_events(c, {e}));
    return out;
}

std::set<Configuration> sspm_successors(const Configuration& c) {
    if (!is_unimodal(c.heights))
        throw BadInput("symmetric successors are defined on unimodal configurations");
    std::set<Configuration> out;
    for (const CollapseEvent& e : collapsible(c, Model::Sspm)) out.insert(apply_events(c, {e}));
    return out;
}

Configuration pspm_step(const Configuration& c) {
    auto events = collapsible(c, Model::Pspm);
    if (events.empty()) return c;
    return apply_events(c, events);
}

Heights pspm_step(const Heights& partition_like) {
    return pspm_step(Configuration{partition_like, 0}).heights;
}

namespace {

// Splits the legal moves into the forced ones and the positions free to pick
// a side. At most one column of a unimodal configuration can be ambivalent
// (it would be a strict local maximum), but nothing here relies on that.
struct MoveSplit {
    std::vector<CollapseEvent> forced;
    std::vector<Position> ambivalent;
};

MoveSplit split_moves(const std::vector<CollapseEvent>& events) {
    MoveSplit s;
    for (std::size_t i = 0; i < events.size();) {
        if (i + 1 < events.size() && events[i + 1].position == events[i].position) {
            s.ambivalent.push_back(events[i].position);
            i += 2;
        } else {
            s.forced.push_back(events[i]);
            i += 1;
        }
    }
    return s;
}

}  // namespace

std::set<Configuration> psspm_successors(const Configuration& c) {
    if (!is_unimodal(c.heights))
        throw BadInput("parallel symmetric successors are defined on unimodal configurations");
    const MoveSplit s = split_moves(collapsible(c, Model::Psspm));
    std::set<Configuration> out;
    if (s.forced.empty() && s.ambivalent.empty()) return out;
    const std::size_t a = s.ambivalent.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a); ++mask) {
        std::vector<CollapseEvent> chosen = s.forced;
        for (std::size_t b = 0; b < a; ++b)
            chosen.push_back({s.ambivalent[b],
                              (mask >> b) & 1 ? Direction::Right : Direction::Left});
        out.insert(apply_events(c, chosen));
    }
    return out;
}

Configuration psspm_step_policy(const Configuration& c, GreedyPolicy policy) {
    if (!is_unimodal(c.heights))
        throw BadInput("parallel symmetric steps are defined on unimodal configurations");
    MoveSplit s = split_moves(collapsible(c, Model::Psspm));
    if (s.forced.empty() && s.ambivalent.empty()) return c;
    const Direction d = policy == GreedyPolicy::RightGreedy ? Direction::Right : Direction::Left;
    for (Position p : s.ambivalent) s.forced.push_back({p, d});
    return apply_events(c, s.forced);
}

Configuration psspm_step_policy(const Configuration& c,
                                const std::map<Position, Direction>& directions) {
    if (!is_unimodal(c.heights))
        throw BadInput("parallel symmetric steps are defined on unimodal configurations");
    MoveSplit s = split_moves(collapsible(c, Model::Psspm));
    if (s.forced.empty() && s.ambivalent.empty()) return c;
    for (Position p : s.ambivalent) {
        auto it = directions.find(p);
        if (it == directions.end()) throw DirectionMapIncomplete(p);
        s.forced.push_back({p, it->second});
    }
    return apply_events(c, s.forced);
}

}  // namespace sandpiles
