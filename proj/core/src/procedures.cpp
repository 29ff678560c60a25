#include "sandpiles/procedures.hpp"

#include <algorithm>
#include <cassert>

#include "sandpiles/characterization.hpp"
#include "sandpiles/models.hpp"

namespace sandpiles {

Heights stair(std::int64_t k) {
    if (k < 0) throw BadInput("stair size must be non-negative");
    Heights out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t v = k; v >= 1; --v) out.push_back(v);
    return out;
}

Configuration stair_config(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 1) throw BadInput("stair configurations need n >= 1 and k >= 0");
    const std::int64_t center = n - k * k;
    if (center < k) throw BadInput("center column of s(n,k) would not be a highest column");
    Heights h;
    h.reserve(static_cast<std::size_t>(2 * k));
    for (std::int64_t v = 1; v < k; ++v) h.push_back(v);
    h.push_back(center);
    for (std::int64_t v = k; v >= 1; --v) h.push_back(v);
    return Configuration{std::move(h), k > 0 ? -(k - 1) : 0};
}

Heights atom_procedure(Heights partition, std::int64_t steps) {
    if (!is_partition(partition)) throw BadInput("the growth run starts from a partition");
    if (steps < 0) throw BadInput("step count must be non-negative");
    for (std::int64_t s = 1; s <= steps; ++s) {
        const std::size_t k = partition.size();
        Heights next(k + 1, 0);
        std::copy(partition.begin(), partition.end(), next.begin());
        for (std::size_t i = 0; i < k; ++i) {
            const Height right = i + 1 < k ? partition[i + 1] : 0;
            if (partition[i] - right >= 2) {
                next[i] -= 1;
                next[i + 1] += 1;
            }
        }
        if (s % 2 == 1) next[0] += 1;
        while (!next.empty() && next.back() == 0) next.pop_back();
        partition = std::move(next);
        assert(is_partition(partition));
    }
    return partition;
}

namespace {

DifferenceCoding repeat_pair(std::int64_t lead, bool lead_present, std::int64_t a, std::int64_t b,
                             std::int64_t pairs, std::int64_t ones) {
    DifferenceCoding d;
    if (lead_present) d.diffs.push_back(lead);
    for (std::int64_t i = 0; i < pairs; ++i) {
        d.diffs.push_back(a);
        d.diffs.push_back(b);
    }
    for (std::int64_t i = 0; i < ones; ++i) d.diffs.push_back(1);
    return d;
}

DifferenceCoding atom_coding_expected(std::int64_t k, std::int64_t t) {
    if (t <= k) {
        if (t % 2 == 0) return repeat_pair(0, false, 0, 2, t / 2, k - t);
        return repeat_pair(2, true, 0, 2, (t - 1) / 2, k - t);
    }
    if (t % 2 == 1) return repeat_pair(0, false, 2, 0, (2 * k + 1 - t) / 2, t - k);
    return repeat_pair(0, true, 2, 0, (2 * k - t) / 2, t - k);
}

DifferenceCoding atom_coding_variant(std::int64_t k, std::int64_t t) {
    if (t <= k) return atom_coding_expected(k, t);
    if (t % 2 == 1) return repeat_pair(0, true, 2, 0, k + 1 - (t - 1) / 2, t - k);
    return repeat_pair(0, false, 2, 0, k + 1 - t / 2, t - k);
}

}  // namespace

AtomFormReport atom_form_report(std::int64_t k, std::int64_t t) {
    if (k < 1) throw BadInput("the growth run closed forms need k >= 1");
    if (t < 0 || t > 2 * k + 1) throw BadInput("t must lie in [0, 2k+1]");
    AtomFormReport r;
    r.k = k;
    r.t = t;
    const Heights grown = atom_procedure(stair(k), t);
    r.simulated = difference_coding(grown);
    r.expected = atom_coding_expected(k, t);
    r.variant = atom_coding_variant(k, t);
    r.height_ok = height(grown) == (t % 2 == 1 ? k + 1 : k);
    r.matches_expected = r.simulated == r.expected;
    r.matches_variant = r.simulated == r.variant;
    return r;
}

bool atom_form_check(std::int64_t k, std::int64_t t) { return atom_form_report(k, t).passed(); }

std::string_view to_string(Phase p) {
    switch (p) {
        case Phase::PseudoAlternating: return "pseudo_alternating";
        case Phase::Alternating: return "alternating";
        case Phase::Deterministic: return "deterministic";
    }
    return "?";
}

std::int64_t ProcedureTrace::phase_steps(Phase p) const {
    return std::count_if(steps.begin(), steps.end(),
                         [p](const TraceStep& s) { return s.phase == p; });
}

namespace {

// One parallel step in which column 0 must collapse toward `dir`; every other
// column moves in its forced direction. Nullopt when column 0 cannot comply.
std::optional<Configuration> directed_center_step(const Configuration& c, Direction dir) {
    if (!is_unimodal(c.heights))
        throw BadInput("directed stepping is defined on unimodal configurations");
    std::vector<CollapseEvent> applied;
    bool center_ready = false;
    const auto events = collapsible(c, Model::Psspm);
    for (std::size_t i = 0; i < events.size(); ++i) {
        const CollapseEvent& e = events[i];
        const bool twin = i + 1 < events.size() && events[i + 1].position == e.position;
        if (e.position == 0) {
            if (e.direction == dir || (twin && events[i + 1].direction == dir)) {
                center_ready = true;
                applied.push_back({0, dir});
            }
            if (twin) ++i;
            continue;
        }
        if (twin)
            throw BadInput("column " + std::to_string(e.position) +
                           " is collapsible on both sides; only column 0 may choose");
        applied.push_back(e);
    }
    if (!center_ready) return std::nullopt;
    return apply_events(c, applied);
}

Direction alternating_direction(std::int64_t step) {
    return step % 2 == 1 ? Direction::Right : Direction::Left;
}

// Window of the restarting schedule containing 1-based step s, and the
// direction for that step: windows are (i^2, (i+1)^2], each starting Right.
Direction pseudo_direction(std::int64_t step) {
    const std::int64_t window = isqrt(step - 1);
    return alternating_direction(step - window * window);
}

using DirectionSchedule = Direction (*)(std::int64_t);

Configuration run_directed(Configuration cur, std::int64_t steps, DirectionSchedule schedule,
                           Phase label, bool pseudo, std::vector<TraceStep>* sink) {
    for (std::int64_t s = 1; s <= steps; ++s) {
        const Direction dir = schedule(s);
        auto next = directed_center_step(cur, dir);
        if (!next) {
            if (pseudo) throw PseudoStalled(s);
            throw AlternationStalled(s);
        }
        cur = std::move(*next);
        if (sink) sink->push_back({cur, label, dir});
    }
    return cur;
}

std::int64_t run_to_stall(Configuration cur, DirectionSchedule schedule) {
    std::int64_t t = 0;
    while (auto next = directed_center_step(cur, schedule(t + 1))) {
        cur = std::move(*next);
        ++t;
    }
    return t;
}

Configuration run_finish(Configuration cur, std::vector<TraceStep>* sink, std::int64_t* steps_out) {
    std::int64_t s = 0;
    while (true) {
        const auto events = collapsible(cur, Model::Psspm);
        if (events.empty()) break;
        std::optional<Direction> center_dir;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (i + 1 < events.size() && events[i + 1].position == events[i].position)
                throw AmbivalentColumn(events[i].position, s + 1);
            if (events[i].position == 0) center_dir = events[i].direction;
        }
        cur = apply_events(cur, events);
        ++s;
        if (sink) sink->push_back({cur, Phase::Deterministic, center_dir});
    }
    if (steps_out) *steps_out = s;
    return cur;
}

}  // namespace

Configuration alternating_procedure(const Configuration& c, std::int64_t steps) {
    if (steps < 0) throw BadInput("step count must be non-negative");
    return run_directed(c, steps, alternating_direction, Phase::Alternating, false, nullptr);
}

std::int64_t max_alternating_steps(const Configuration& c) {
    return run_to_stall(c, alternating_direction);
}

Configuration pseudo_alternating(const Configuration& c, std::int64_t steps) {
    if (steps < 0) throw BadInput("step count must be non-negative");
    return run_directed(c, steps, pseudo_direction, Phase::PseudoAlternating, true, nullptr);
}

Configuration pseudo_alternating(Height n, std::int64_t steps) {
    return pseudo_alternating(single_column(n), steps);
}

std::int64_t max_pseudo_alternating_steps(const Configuration& c) {
    return run_to_stall(c, pseudo_direction);
}

FinishResult deterministic_finish(const Configuration& c) {
    FinishResult r;
    r.config = run_finish(c, nullptr, &r.steps);
    return r;
}

namespace {

void mirror_in_place(ProcedureTrace& trace) {
    trace.initial = mirror(trace.initial);
    for (TraceStep& s : trace.steps) {
        s.config = mirror(s.config);
        if (s.center_direction) s.center_direction = mirror(*s.center_direction);
    }
}

}  // namespace

ProcedureTrace construct_path(Height n, const Form& target) {
    if (n < 1) throw BadInput("construction needs weight >= 1");
    if (!enumerate_fixed_point_forms(n).contains(target))
        throw NotAFixedPointForm("target " + to_literal(target) +
                                 " is not a fixed-point form of weight " + std::to_string(n));

    Form goal = target;
    auto report = div_profile(goal);
    assert(report.center.has_value());
    bool mirrored = false;
    {
        // Heavier strict flank goes to the right of the chosen center column.
        const auto ci = static_cast<std::size_t>(*report.center);
        std::int64_t before = 0;
        for (std::size_t i = 0; i < ci; ++i) before += goal.heights[i];
        const std::int64_t after = n - before - goal.heights[ci];
        if (after < before) {
            goal = mirror(goal);
            report = div_profile(goal);
            mirrored = true;
        }
    }
    const std::int64_t d = report.div_value;
    const Height h = height(goal.heights);
    const std::int64_t alternating_steps = n - h - d * d;
    if (alternating_steps < 0)
        throw Error("internal: negative alternating budget for " + to_literal(target));

    ProcedureTrace trace;
    trace.initial = single_column(n);
    Configuration cur = trace.initial;
    cur = run_directed(cur, d * d, pseudo_direction, Phase::PseudoAlternating, true, &trace.steps);
    if (d > 0 && cur != stair_config(n, d))
        throw Error("internal: stair endpoint mismatch after the windowed phase");
    cur = run_directed(cur, alternating_steps, alternating_direction, Phase::Alternating, false,
                       &trace.steps);
    if (cur.at(0) != h || height(cur) != h)
        throw Error("internal: alternating phase did not level the center at the target height");
    cur = run_finish(cur, &trace.steps, nullptr);
    if (normalize(cur) != goal)
        throw Error("internal: construction finished on a different form than " + to_literal(target));
    if (mirrored) mirror_in_place(trace);
    return trace;
}

}  // namespace sandpiles
