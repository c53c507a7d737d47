#include <doctest.h>

#include "logsynth/automaton.hpp"
#include "logsynth/errors.hpp"
#include "logsynth/model_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace logsynth;

namespace {

ModelBundle example_model() {
    return load_model_file(test::fixture_path("example_model.json"));
}

Word word_of(const BehaviourModel& model, std::initializer_list<const char*> names) {
    Word word;
    for (const auto* n : names) word.push_back(*model.alphabet().find(n));
    return word;
}

}  // namespace

TEST_CASE("example model loads with the documented shape") {
    const auto bundle = example_model();
    CHECK(bundle.model.state_count() == 4);
    CHECK(bundle.model.alphabet().size() == 4);
    CHECK(bundle.model.accepting_count() == 1);
    CHECK(bundle.model.transition_count() == 12);
    CHECK(bundle.catalog.size() == 4);
    CHECK(*bundle.catalog.text("a") == "sent block * in *");
}

TEST_CASE("extended transition traces the example model") {
    const auto bundle = example_model();
    const auto& m = bundle.model;

    CHECK(m.state_name(*extended_transition(m, word_of(m, {"c", "d"}))) == "q3");
    CHECK(m.state_name(*extended_transition(m, word_of(m, {"c", "a"}))) == "q0");
    CHECK(m.state_name(*extended_transition(m, Word{})) == "q0");  // delta*(q, eps) = q

    // Undefined step rejects: q3 has no outgoing transitions.
    CHECK(!extended_transition(m, word_of(m, {"c", "d", "a"})));

    // A symbol outside the alphabet rejects rather than erroring.
    const std::vector<std::string> foreign{"c", "zzz"};
    CHECK(!extended_transition(m, std::span<const std::string>(foreign)));
}

TEST_CASE("acceptance on the example model") {
    const auto bundle = example_model();
    const auto& m = bundle.model;
    CHECK(accepts(m, word_of(m, {"c", "d"})));
    CHECK(!accepts(m, word_of(m, {"c", "a"})));
    CHECK(accepts(m, word_of(m, {"c", "a", "b", "d", "d"})));
    CHECK(!accepts(m, Word{}));
}

TEST_CASE("s values of the example model") {
    const auto bundle = example_model();
    const auto svalues = compute_s_values(bundle.model);
    const auto at = [&](const char* name) {
        return *svalues.value(*bundle.model.state_index(name));
    };
    CHECK(at("q0") == 2);
    CHECK(at("q1") == 1);
    CHECK(at("q2") == 1);
    CHECK(at("q3") == 0);
}

TEST_CASE("accepting initial state has s value zero") {
    BehaviourModel::Builder builder;
    builder.add_state("a").add_state("b").add_symbol("t");
    builder.set_initial("a").add_accepting("a");
    builder.add_transition("a", "t", "b");
    const auto model = builder.build();
    CHECK(*compute_s_values(model).value(model.initial()) == 0);
}

TEST_CASE("degenerate model: initial state cannot reach acceptance") {
    BehaviourModel::Builder builder;
    builder.add_state("a").add_state("b").add_symbol("t");
    builder.set_initial("a").add_accepting("b");
    // No transition from a to b.
    const auto model = builder.build();
    CHECK_THROWS_AS(compute_s_values(model), DegenerateModelError);
}

TEST_CASE("s values equal the per-state brute-force oracle on random models") {
    RandomStream rng(42);
    for (int round = 0; round < 60; ++round) {
        const auto model = test::random_model(rng);
        const auto svalues = compute_s_values(model);
        const auto oracle = test::brute_force_s_values(model);
        for (StateIndex q = 0; q < model.state_count(); ++q) {
            CAPTURE(round);
            CAPTURE(q);
            CHECK(svalues.value(q) == oracle[q]);
        }
    }
}

TEST_CASE("s values satisfy the Bellman condition and realize shortest words") {
    RandomStream rng(43);
    for (int round = 0; round < 30; ++round) {
        const auto model = test::random_model(rng);
        const auto svalues = compute_s_values(model);

        for (StateIndex q = 0; q < model.state_count(); ++q) {
            const auto value = svalues.value(q);
            if (!value) continue;
            if (model.is_accepting(q)) {
                CHECK(*value == 0);
                continue;
            }
            CHECK(*value > 0);
            std::optional<std::uint32_t> best;
            for (const auto& t : model.transitions_from(q)) {
                const auto target = svalues.value(t.target);
                if (target && (!best || *target < *best)) best = *target;
            }
            REQUIRE(best.has_value());
            CHECK(*value == *best + 1);
        }

        // Following any minimizing successor chain from a reachable state
        // spells a word of exactly sValue(q) symbols that is accepted from q.
        for (StateIndex q = 0; q < model.state_count(); ++q) {
            const auto value = svalues.value(q);
            if (!value) continue;
            StateIndex current = q;
            std::uint32_t steps = 0;
            while (!model.is_accepting(current)) {
                const auto remaining = *svalues.value(current);
                bool advanced = false;
                for (const auto& t : model.transitions_from(current)) {
                    const auto target = svalues.value(t.target);
                    if (target && *target + 1 == remaining) {
                        current = t.target;
                        ++steps;
                        advanced = true;
                        break;
                    }
                }
                REQUIRE(advanced);
            }
            CHECK(steps == *value);
        }
    }
}

TEST_CASE("isolated states are reported") {
    BehaviourModel::Builder builder;
    builder.add_state("a").add_state("lost").add_symbol("t");
    builder.set_initial("a").add_accepting("a");
    const auto model = builder.build();
    const auto isolated = model.isolated_states();
    REQUIRE(isolated.size() == 1);
    CHECK(model.state_name(isolated[0]) == "lost");
}
