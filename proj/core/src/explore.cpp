#include "sandpiles/explore.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "sandpiles/characterization.hpp"

namespace sandpiles {

namespace {

std::vector<Configuration> successors_of(const Configuration& c, Model m) {
    switch (m) {
        case Model::Spm: {
            auto s = spm_successors(c);
            return {s.begin(), s.end()};
        }
        case Model::Sspm: {
            auto s = sspm_successors(c);
            return {s.begin(), s.end()};
        }
        case Model::Pspm: {
            if (is_fixed_point(c, Model::Pspm)) return {};
            return {pspm_step(c)};
        }
        case Model::Psspm: {
            auto s = psspm_successors(c);
            return {s.begin(), s.end()};
        }
    }
    return {};
}

// In Forms mode the node is the translation class, pinned at origin 0.
Configuration canonical_node(Configuration c, ExploreMode mode) {
    if (mode == ExploreMode::Forms) c.origin = 0;
    return c;
}

struct BfsState {
    // Exact ordered keys: deduplication must never depend on a hash.
    std::map<Configuration, std::uint32_t> index;
    std::vector<Configuration> nodes;
    std::vector<std::vector<std::uint32_t>> succ;
    std::deque<std::uint32_t> frontier;
    std::size_t budget = 0;

    std::uint32_t intern(const Configuration& c) {
        auto it = index.find(c);
        if (it != index.end()) return it->second;
        if (nodes.size() >= budget) throw BudgetExceeded(budget);
        const auto id = static_cast<std::uint32_t>(nodes.size());
        index.emplace(c, id);
        nodes.push_back(c);
        succ.emplace_back();
        frontier.push_back(id);
        return id;
    }
};

void expand_serial(BfsState& st, Model m, ExploreMode mode) {
    while (!st.frontier.empty()) {
        const std::uint32_t id = st.frontier.front();
        st.frontier.pop_front();
        const Configuration cur = st.nodes[id];
        for (const Configuration& raw : successors_of(cur, m)) {
            const std::uint32_t t = st.intern(canonical_node(raw, mode));
            st.succ[id].push_back(t);
        }
    }
}

void expand_pool(BfsState& st, Model m, ExploreMode mode, unsigned workers) {
    std::mutex mtx;
    std::condition_variable cv;
    unsigned active = 0;
    std::exception_ptr error;

    const auto body = [&] {
        std::unique_lock lk(mtx);
        while (true) {
            cv.wait(lk, [&] { return error || !st.frontier.empty() || active == 0; });
            if (error || (st.frontier.empty() && active == 0)) return;
            const std::uint32_t id = st.frontier.front();
            st.frontier.pop_front();
            ++active;
            const Configuration cur = st.nodes[id];
            lk.unlock();
            std::vector<Configuration> next;
            try {
                for (const Configuration& raw : successors_of(cur, m))
                    next.push_back(canonical_node(raw, mode));
                lk.lock();
                for (const Configuration& s : next) {
                    const std::uint32_t t = st.intern(s);
                    st.succ[id].push_back(t);
                }
            } catch (...) {
                if (!lk.owns_lock()) lk.lock();
                if (!error) error = std::current_exception();
            }
            --active;
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SpaceGraph finalize(BfsState&& st, Model m, Height n, ExploreMode mode) {
    const std::size_t count = st.nodes.size();
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return st.nodes[a] < st.nodes[b]; });
    std::vector<std::uint32_t> rank(count);
    for (std::size_t i = 0; i < count; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);

    SpaceGraph g;
    g.model = m;
    g.n = n;
    g.mode = mode;
    g.nodes.reserve(count);
    g.succ.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t old = order[i];
        g.nodes.push_back(std::move(st.nodes[old]));
        auto& out = g.succ[i];
        out.reserve(st.succ[old].size());
        for (std::uint32_t t : st.succ[old]) out.push_back(rank[t]);
        std::sort(out.begin(), out.end());
        g.edge_count += out.size();
        if (is_fixed_point(g.nodes.back(), m)) g.fixed.push_back(static_cast<std::uint32_t>(i));
    }
    return g;
}

}  // namespace

SpaceGraph explore(Height n, Model m, const ExploreOptions& opts) {
    if (opts.budget == 0 || opts.budget > std::numeric_limits<std::uint32_t>::max())
        throw BadInput("node budget must lie in [1, 2^32)");
    BfsState st;
    st.budget = opts.budget;
    st.intern(canonical_node(single_column(n), opts.mode));
    if (opts.workers <= 1)
        expand_serial(st, m, opts.mode);
    else
        expand_pool(st, m, opts.mode, opts.workers);
    return finalize(std::move(st), m, n, opts.mode);
}

std::set<Form> fixed_point_forms(const SpaceGraph& g) {
    std::set<Form> out;
    for (std::uint32_t i : g.fixed) out.insert(normalize(g.nodes[i]));
    return out;
}

bool MainTheoremReport::count_ok() const {
    return static_cast<std::int64_t>(sspm_forms.size()) == isqrt(n);
}

MainTheoremReport verify_main_theorem(Height n, const ExploreOptions& opts) {
    ExploreOptions positional = opts;
    positional.mode = ExploreMode::Positional;
    MainTheoremReport r;
    r.n = n;
    const SpaceGraph seq = explore(n, Model::Sspm, positional);
    const SpaceGraph par = explore(n, Model::Psspm, positional);
    r.sspm_forms = fixed_point_forms(seq);
    r.psspm_forms = fixed_point_forms(par);
    r.enumerated = enumerate_fixed_point_forms(n);
    r.sspm_fixed_positional = seq.fixed.size();
    r.psspm_fixed_positional = par.fixed.size();
    return r;
}

std::vector<TransientRow> transient_stats(const std::vector<Height>& ns, Model m,
                                          std::optional<GreedyPolicy> policy) {
    const bool right_only = m == Model::Pspm && !policy;
    const bool symmetric = m == Model::Psspm && policy.has_value();
    if (!right_only && !symmetric)
        throw BadInput("transients are measured for pspm, or for psspm under a policy");
    std::vector<TransientRow> rows;
    rows.reserve(ns.size());
    for (Height n : ns) {
        Configuration cur = single_column(n);
        std::int64_t steps = 0;
        while (true) {
            Configuration next =
                right_only ? pspm_step(cur) : psspm_step_policy(cur, *policy);
            if (next == cur) break;
            cur = std::move(next);
            ++steps;
        }
        rows.push_back({n, steps});
    }
    return rows;
}

bool plateau_free(const Heights& s) {
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::vector<ConjectureRow> conjecture_scan(std::int64_t k_max) {
    if (k_max < 1) throw BadInput("the scan needs k_max >= 1");
    std::vector<ConjectureRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t side = 8 * k + 4;
        const Height n = side * side;
        Configuration cur = single_column(n);
        while (true) {
            Configuration next = psspm_step_policy(cur, GreedyPolicy::RightGreedy);
            if (next == cur) break;
            cur = std::move(next);
        }
        ConjectureRow row;
        row.k = k;
        row.n = n;
        row.d = cur.right_edge();
        row.ratio = static_cast<double>(row.d) / static_cast<double>(side);
        row.plateau_free = plateau_free(cur.heights);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sandpiles
