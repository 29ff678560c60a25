#include <doctest.h>

#include "sandpiles/characterization.hpp"
#include "sandpiles/models.hpp"
#include "sandpiles/procedures.hpp"

using namespace sandpiles;

namespace {

Configuration symmetric_flanks(std::int64_t n, std::int64_t k) {
    Heights h;
    for (std::int64_t v = 1; v < k; ++v) h.push_back(v);
    h.push_back(n - k * k + k);
    for (std::int64_t v = k - 1; v >= 1; --v) h.push_back(v);
    return Configuration{std::move(h), -(k - 1)};
}

}  // namespace

TEST_SUITE("procedures") {
    TEST_CASE("stairs") {
        CHECK(stair(0) == Heights{});
        CHECK(stair(4) == Heights{4, 3, 2, 1});
        CHECK_THROWS_AS(stair(-1), BadInput);
        CHECK(stair_config(20, 4) == Configuration{{1, 2, 3, 4, 4, 3, 2, 1}, -3});
        CHECK(stair_config(13, 3) == Configuration{{1, 2, 4, 3, 2, 1}, -2});
        CHECK(stair_config(7, 0) == Configuration{{7}, 0});
        CHECK(stair_config(6, 2) == Configuration{{1, 2, 2, 1}, -1});
        CHECK_THROWS_AS(stair_config(11, 3), BadInput);
        CHECK_THROWS_AS(stair_config(5, -1), BadInput);
    }

    TEST_CASE("growth run small steps") {
        CHECK(atom_procedure(Heights{1}, 1) == Heights{2});
        CHECK(atom_procedure(Heights{2, 1}, 1) == Heights{3, 1});
        CHECK(atom_procedure(Heights{2, 1}, 2) == Heights{2, 2});
        // The injected grain never feeds the same step's collapse.
        CHECK(atom_procedure(Heights{2}, 1) == Heights{2, 1});
        CHECK_THROWS_AS(atom_procedure(Heights{1, 2}, 1), BadInput);
        CHECK_THROWS_AS(atom_procedure(Heights{1}, -1), BadInput);
    }

    TEST_CASE("growth run turns one stair into the next") {
        for (std::int64_t k = 1; k <= 30; ++k)
            CHECK(atom_procedure(stair(k), 2 * k + 1) == stair(k + 1));
    }

    TEST_CASE("growth run closed form holds where the height clause does") {
        std::int64_t variant_mismatches = 0;
        for (std::int64_t k = 1; k <= 16; ++k)
            for (std::int64_t t = 0; t <= 2 * k + 1; ++t) {
                const AtomFormReport r = atom_form_report(k, t);
                CHECK(r.height_ok);
                CHECK(r.matches_expected);
                CHECK(r.passed());
                if (!r.matches_variant) ++variant_mismatches;
            }
        CHECK(variant_mismatches > 0);
        CHECK_THROWS_AS(atom_form_report(3, 8), BadInput);
        CHECK_THROWS_AS(atom_form_report(0, 0), BadInput);
    }

    TEST_CASE("alternating run from (9)") {
        const Configuration nine = single_column(9);
        CHECK(max_alternating_steps(nine) == 6);
        CHECK(alternating_procedure(nine, 6) == Configuration{{1, 2, 3, 2, 1}, -2});
        CHECK(alternating_procedure(nine, 0) == nine);
        try {
            alternating_procedure(nine, 7);
            FAIL("expected the run to stall");
        } catch (const AlternationStalled& e) {
            CHECK(e.step == 7);
        }
    }

    TEST_CASE("alternating run levels the column into symmetric flanks") {
        for (std::int64_t n = 1; n <= 60; ++n)
            for (std::int64_t k = 1; k * k <= n; ++k)
                CHECK(alternating_procedure(single_column(n), k * k - k) ==
                      symmetric_flanks(n, k));
    }

    TEST_CASE("alternating run climbs from stair to stair") {
        for (std::int64_t k = 1; k <= 12; ++k)
            for (std::int64_t n = (k + 1) * (k + 1) + (k + 1); n <= 60; ++n)
                CHECK(alternating_procedure(stair_config(n, k), 2 * k + 1) ==
                      stair_config(n, k + 1));
    }

    TEST_CASE("windowed run from (13)") {
        const Configuration thirteen = single_column(13);
        CHECK(pseudo_alternating(13, 9) == Configuration{{1, 2, 4, 3, 2, 1}, -2});
        CHECK(max_pseudo_alternating_steps(thirteen) == 9);
        try {
            pseudo_alternating(thirteen, 10);
            FAIL("expected the run to stall");
        } catch (const PseudoStalled& e) {
            CHECK(e.step == 10);
        }
    }

    TEST_CASE("windowed run reaches every stair") {
        for (std::int64_t k = 0; k <= 6; ++k)
            for (std::int64_t n = (k + 1) * (k + 1) + (k + 1); n <= 60; ++n)
                CHECK(pseudo_alternating(n, (k + 1) * (k + 1)) == stair_config(n, k + 1));
    }

    TEST_CASE("choice-free finish") {
        const FinishResult r = deterministic_finish(Configuration{{1, 2, 4, 4, 3, 3, 2, 1}, -3});
        CHECK(r.steps == 3);
        CHECK(r.config == Configuration{{1, 1, 2, 3, 4, 3, 3, 2, 1}, -4});
        const FinishResult stable = deterministic_finish(Configuration{{1, 2, 1}, 0});
        CHECK(stable.steps == 0);
        CHECK(stable.config == Configuration{{1, 2, 1}, 0});
        CHECK_THROWS_AS(deterministic_finish(Configuration{{1, 3, 1}, 0}), AmbivalentColumn);
    }

    TEST_CASE("construction reproduces the length-19 path") {
        const ProcedureTrace tr = construct_path(20, Form{{1, 1, 2, 3, 4, 3, 3, 2, 1}});
        CHECK(tr.length() == 19);
        CHECK(tr.phase_steps(Phase::PseudoAlternating) == 4);
        CHECK(tr.phase_steps(Phase::Alternating) == 12);
        CHECK(tr.phase_steps(Phase::Deterministic) == 3);
        CHECK(tr.initial == single_column(20));
        CHECK(tr.final_config() == Configuration{{1, 1, 2, 3, 4, 3, 3, 2, 1}, -4});
        CHECK(normalize(tr.final_config()) == Form{{1, 1, 2, 3, 4, 3, 3, 2, 1}});
    }

    TEST_CASE("construction follows the windowed schedule first") {
        const ProcedureTrace tr = construct_path(10, Form{{1, 2, 2, 2, 2, 1}});
        CHECK(tr.length() == 8);
        CHECK(tr.phase_steps(Phase::PseudoAlternating) == 4);
        CHECK(tr.phase_steps(Phase::Alternating) == 4);
        CHECK(tr.phase_steps(Phase::Deterministic) == 0);
        REQUIRE(tr.steps.size() >= 4);
        CHECK(tr.steps[0].center_direction == Direction::Right);
        CHECK(tr.steps[1].center_direction == Direction::Right);
        CHECK(tr.steps[2].center_direction == Direction::Left);
        CHECK(tr.steps[3].center_direction == Direction::Right);
    }

    TEST_CASE("construction handles mirrored targets") {
        const ProcedureTrace tr = construct_path(10, Form{{1, 2, 3, 2, 1, 1}});
        CHECK(normalize(tr.final_config()) == Form{{1, 2, 3, 2, 1, 1}});
        for (const TraceStep& s : tr.steps) CHECK(weight(s.config) == 10);
    }

    TEST_CASE("construction length bounds hold across small weights") {
        for (Height n = 1; n <= 60; ++n)
            for (const Form& target : enumerate_fixed_point_forms(n)) {
                const ProcedureTrace tr = construct_path(n, target);
                CHECK(normalize(tr.final_config()) == target);
                CHECK(tr.length() >= n - isqrt(n));
                CHECK(tr.length() <= n);
            }
    }

    TEST_CASE("construction rejects non-forms") {
        CHECK_THROWS_AS(construct_path(10, Form{{5, 5}}), NotAFixedPointForm);
        CHECK_THROWS_AS(construct_path(10, Form{{1, 2, 3, 2, 1}}), NotAFixedPointForm);
        CHECK_THROWS_AS(construct_path(0, Form{{1}}), BadInput);
    }

    TEST_CASE("every constructed step is a legal parallel symmetric move") {
        for (Height n : {7, 12, 18, 25}) {
            for (const Form& target : enumerate_fixed_point_forms(n)) {
                const ProcedureTrace tr = construct_path(n, target);
                Configuration prev = tr.initial;
                for (const TraceStep& s : tr.steps) {
                    CHECK(psspm_successors(prev).contains(s.config));
                    prev = s.config;
                }
            }
        }
    }
}
