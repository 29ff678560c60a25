#pragma once

#include <random>
#include <vector>

#include "sandpiles/sandpiles.hpp"

namespace sandpiles::testing {

// All partitions of n, in the order produced by descending first parts.
inline void collect_partitions(Height n, Height max_part, Heights& prefix,
                               std::vector<Heights>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (Height part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        collect_partitions(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<Heights> all_partitions(Height n) {
    std::vector<Heights> out;
    Heights prefix;
    collect_partitions(n, n, prefix, out);
    return out;
}

// All compositions of n into positive parts.
inline std::vector<Heights> all_compositions(Height n) {
    std::vector<Heights> out;
    Heights prefix;
    const auto recurse = [&](auto&& self, Height left) -> void {
        if (left == 0) {
            out.push_back(prefix);
            return;
        }
        for (Height part = 1; part <= left; ++part) {
            prefix.push_back(part);
            self(self, left - part);
            prefix.pop_back();
        }
    };
    recurse(recurse, n);
    return out;
}

inline std::vector<Heights> all_unimodal(Height n) {
    std::vector<Heights> out;
    for (Heights& c : all_compositions(n))
        if (is_unimodal(c)) out.push_back(std::move(c));
    return out;
}

inline Heights random_partition(std::mt19937& rng, Height n) {
    Heights parts;
    Height left = n;
    Height cap = n;
    while (left > 0) {
        std::uniform_int_distribution<Height> pick(1, std::min(left, cap));
        const Height part = pick(rng);
        parts.push_back(part);
        cap = part;
        left -= part;
    }
    return parts;
}

// Non-decreasing run followed by a non-increasing run is always unimodal.
inline Heights random_unimodal(std::mt19937& rng, Height n) {
    std::uniform_int_distribution<Height> split_pick(0, n);
    const Height left = split_pick(rng);
    Heights rising = reversed(random_partition(rng, left));
    const Heights falling = random_partition(rng, n - left);
    rising.insert(rising.end(), falling.begin(), falling.end());
    return rising;
}

inline Configuration random_unimodal_config(std::mt19937& rng, Height n) {
    std::uniform_int_distribution<Position> origin_pick(-8, 8);
    return Configuration{random_unimodal(rng, n), origin_pick(rng)};
}

// The collapse batches that one parallel symmetric step may apply from c,
// reconstructed from the public move list: ambivalent columns contribute one
// choice each.
inline std::vector<std::vector<CollapseEvent>> psspm_event_choices(const Configuration& c) {
    const auto events = collapsible(c, Model::Psspm);
    std::vector<CollapseEvent> forced;
    std::vector<Position> ambivalent;
    for (std::size_t i = 0; i < events.size();) {
        if (i + 1 < events.size() && events[i + 1].position == events[i].position) {
            ambivalent.push_back(events[i].position);
            i += 2;
        } else {
            forced.push_back(events[i]);
            i += 1;
        }
    }
    std::vector<std::vector<CollapseEvent>> out;
    const std::size_t count = std::size_t{1} << ambivalent.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<CollapseEvent> batch = forced;
        for (std::size_t b = 0; b < ambivalent.size(); ++b)
            batch.push_back(
                {ambivalent[b], (mask >> b) & 1 ? Direction::Right : Direction::Left});
        out.push_back(std::move(batch));
    }
    return out;
}

// Whether the batch can be ordered so that every move is individually legal
// under the sequential symmetric rule when its turn comes. Bitmask dynamic
// program over applied subsets.
inline bool decomposes_sequentially(const Configuration& base,
                                    const std::vector<CollapseEvent>& batch) {
    const std::size_t k = batch.size();
    std::vector<char> reachable(std::size_t{1} << k, 0);
    reachable[0] = 1;
    std::vector<Configuration> partial(std::size_t{1} << k);
    partial[0] = base;
    for (std::size_t mask = 0; mask < reachable.size(); ++mask) {
        if (!reachable[mask]) continue;
        if (!is_unimodal(partial[mask].heights)) continue;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask & (std::size_t{1} << b)) continue;
            const auto legal = collapsible(partial[mask], Model::Sspm);
            bool found = false;
            for (const CollapseEvent& e : legal)
                if (e == batch[b]) found = true;
            if (!found) continue;
            const std::size_t next = mask | (std::size_t{1} << b);
            if (!reachable[next]) {
                reachable[next] = 1;
                partial[next] = apply_events(partial[mask], {batch[b]});
            }
        }
    }
    return reachable.back() != 0;
}

}  // namespace sandpiles::testing
