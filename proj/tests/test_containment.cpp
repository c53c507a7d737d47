#include <doctest.h>

#include "logsynth/containment.hpp"
#include "logsynth/errors.hpp"
#include "logsynth/matcher.hpp"
#include "logsynth/model_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace logsynth;

namespace {

ModelBundle example_model() {
    return load_model_file(test::fixture_path("example_model.json"));
}

}  // namespace

TEST_CASE("containment on the example model") {
    const auto bundle = example_model();
    const auto& model = bundle.model;
    const auto& alphabet = model.alphabet();

    SUBCASE("c d is included") {
        const auto report = check_containment(parse_pattern("c d", alphabet), alphabet, model);
        CHECK(report.included);
        CHECK(!report.witness);
        REQUIRE(report.proper);
        CHECK(*report.proper);  // the model accepts far more than one word
    }

    SUBCASE("c a is not included; the witness is the word itself") {
        const auto report = check_containment(parse_pattern("c a", alphabet), alphabet, model);
        CHECK(!report.included);
        REQUIRE(report.witness);
        CHECK(*report.witness == std::vector<std::string>{"c", "a"});
    }

    SUBCASE("epsilon against a non-accepting initial state gives the empty witness") {
        const auto report = check_containment(parse_pattern("eps", alphabet), alphabet, model);
        CHECK(!report.included);
        REQUIRE(report.witness);
        CHECK(report.witness->empty());
    }

    SUBCASE("witnesses are shortest") {
        // c (a | d): 'c d' is accepted, 'c a' is not; the witness must have
        // length 2, not pad with extra loops.
        const auto report =
            check_containment(parse_pattern("c ( a | d ) b*", alphabet), alphabet, model);
        CHECK(!report.included);
        REQUIRE(report.witness);
        CHECK(report.witness->size() == 2);
    }

    SUBCASE("a pattern literal outside the model alphabet yields a witness with it") {
        SymbolTable wider;
        wider.add("c");
        wider.add("ghost");
        const auto report =
            check_containment(parse_pattern("c ghost", wider), wider, model);
        CHECK(!report.included);
        REQUIRE(report.witness);
        CHECK(*report.witness == std::vector<std::string>{"c", "ghost"});
    }
}

TEST_CASE("proper flag distinguishes equality from strict inclusion") {
    // Model accepting exactly { xy, xz }.
    BehaviourModel::Builder builder;
    builder.add_state("p0").add_state("p1").add_state("p2");
    builder.add_symbol("x").add_symbol("y").add_symbol("z");
    builder.set_initial("p0").add_accepting("p2");
    builder.add_transition("p0", "x", "p1");
    builder.add_transition("p1", "y", "p2");
    builder.add_transition("p1", "z", "p2");
    const auto model = builder.build();

    const auto equal_report =
        check_containment(parse_pattern("x ( y | z )", model.alphabet()), model.alphabet(), model);
    CHECK(equal_report.included);
    REQUIRE(equal_report.proper);
    CHECK(!*equal_report.proper);  // languages coincide

    const auto strict_report =
        check_containment(parse_pattern("x y", model.alphabet()), model.alphabet(), model);
    CHECK(strict_report.included);
    REQUIRE(strict_report.proper);
    CHECK(*strict_report.proper);
}

TEST_CASE("proper check respects its state budget") {
    const auto bundle = example_model();
    const auto& alphabet = bundle.model.alphabet();
    const auto pattern = parse_pattern("( a | b ) ( c | d ) ( a | b ) ( c | d )", alphabet);
    CHECK_THROWS_AS(check_containment(pattern, alphabet, bundle.model,
                                      {.check_proper = true, .determinization_budget = 2}),
                    SizeLimitError);
    // The forward inclusion alone never determinizes, so it is unaffected.
    const auto report = check_containment(pattern, alphabet, bundle.model,
                                          {.check_proper = false});
    CHECK(!report.proper);
}

TEST_CASE("containment agrees with the bounded-enumeration oracle") {
    RandomStream rng(2024);
    int checked = 0;
    while (checked < 40) {
        const auto model = test::random_model(rng, {.max_states = 12, .max_symbols = 3});
        const auto regex =
            test::random_regex(rng, static_cast<std::uint32_t>(model.alphabet().size()), 10);

        const PatternNfa nfa(regex);
        const std::size_t bound = nfa.state_count() * (model.state_count() + 1);
        const auto language = test::bounded_language(regex.root(), bound, 200000);
        if (!language.complete) continue;  // pick instances the oracle can afford
        ++checked;

        bool all_accepted = true;
        for (const auto& word : language.words) {
            if (!accepts(model, word)) {
                all_accepted = false;
                break;
            }
        }

        const auto report =
            check_containment(regex, model.alphabet(), model, {.check_proper = false});
        CAPTURE(checked);
        CHECK(report.included == all_accepted);

        if (!report.included) {
            // The witness certificate must hold on its own.
            const auto witness = to_word(*report.witness, model.alphabet());
            CHECK(matches(regex, witness));
            CHECK(!accepts(model, witness));
        }
    }
}
