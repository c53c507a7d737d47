#include <doctest.h>

#include "logsynth/containment.hpp"
#include "logsynth/model_io.hpp"
#include "logsynth/pattern.hpp"
#include "support/fixtures.hpp"

using namespace logsynth;

// The fixture set backs the acceptance suite: every model must support the
// smallest studied length bound, and every pattern must be properly
// contained in its model's language.

TEST_CASE("fixture models and patterns are sound") {
    const char* models[] = {"m1_orderflow", "m2_jobqueue", "m3_meshsvc", "example_model"};
    for (const auto* name : models) {
        CAPTURE(name);
        const auto bundle = load_model_file(test::fixture_path(std::string(name) + ".json"));
        const auto svalues = compute_s_values(bundle.model);
        CHECK(*svalues.value(bundle.model.initial()) <= 20);

        const auto patterns = load_patterns_file(
            test::fixture_path(std::string(name) + "_patterns.json"), bundle.model, bundle.id);
        CHECK(!patterns.empty());

        int finite = 0;
        int infinite = 0;
        for (const auto& pattern : patterns) {
            CAPTURE(pattern.id);
            (pattern.type == PatternType::Finite ? finite : infinite) += 1;

            const auto report =
                check_containment(pattern.ast, bundle.model.alphabet(), bundle.model);
            CHECK(report.included);
            REQUIRE(report.proper);
            CHECK(*report.proper);

            // Every pattern must be able to supply words at the smallest
            // studied bound.
            const auto words = enumerate_language(pattern.ast, 20, 100000);
            CHECK(!words.empty());
        }
        CHECK(finite >= 2);
        CHECK(infinite >= 2);
    }
}
