#include "logsynth/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "logsynth/errors.hpp"

namespace logsynth {

Word filtered_random_walk(const BehaviourModel& model, const SValueMap& svalues,
                          std::uint32_t mlsl, RandomStream& rng) {
    const auto initial_distance = svalues.value(model.initial());
    if (!initial_distance || *initial_distance > mlsl) {
        throw DegenerateModelError(
            "initial state cannot reach acceptance within the length bound of " +
            std::to_string(mlsl));
    }

    Word sequence;
    std::uint32_t budget = mlsl;
    StateIndex current = model.initial();
    std::vector<Transition> options;

    while (!model.is_accepting(current)) {
        options.clear();
        for (const auto& t : model.transitions_from(current)) {
            const auto distance = svalues.value(t.target);
            if (distance && *distance < budget) options.push_back(t);
        }
        // Invariant: sValue(current) <= budget, so a minimizing successor
        // always qualifies. An empty set here means corrupted s-values.
        if (options.empty()) {
            throw std::logic_error("filtered walk stranded at state '" +
                                   model.state_name(current) + "'");
        }
        const auto& chosen = options[rng.uniform(static_cast<std::uint32_t>(options.size()))];
        sequence.push_back(chosen.symbol);
        current = chosen.target;
        --budget;
    }
    return sequence;
}

namespace {

bool matches_any(std::span<const CompiledPattern> patterns, const Word& word) {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const CompiledPattern& p) { return p.matches(word); });
}

}  // namespace

Word generate_normal_sequence(const BehaviourModel& model, const SValueMap& svalues,
                              std::span<const CompiledPattern> patterns, const WalkConfig& config,
                              RandomStream& rng) {
    for (std::uint32_t attempt = 0; attempt < config.max_attempts; ++attempt) {
        Word sequence = filtered_random_walk(model, svalues, config.mlsl, rng);
        if (!matches_any(patterns, sequence)) return sequence;
    }
    throw AttemptsExhaustedError(
        "no pattern-free sequence after " + std::to_string(config.max_attempts) +
        " walks; the active failure patterns cover too much of the model");
}

FailurePool build_failure_pool(std::span<const FailurePattern> patterns, std::uint32_t mlsl,
                               std::uint32_t samples_per_pattern, RandomStream& rng) {
    FailurePool pool;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const auto& pattern = patterns[i];
        PatternPool entry;
        entry.pattern_id = pattern.id;
        entry.star_limit = mlsl;

        bool enumerated = false;
        if (classify(pattern.ast) == PatternType::Finite) {
            try {
                entry.words = enumerate_language(pattern.ast, mlsl, kPoolEnumerationCap);
                entry.exact = true;
                enumerated = true;
            } catch (const CapExceededError&) {
                // Language too large to cover exactly; fall back to sampling.
            }
        }
        if (!enumerated) {
            RandomStream pattern_rng = rng.derive(0x706f6f6cULL /* "pool" */, i);
            std::set<Word> drawn;
            for (std::uint32_t s = 0; s < samples_per_pattern; ++s) {
                Word word = sample_word(pattern.ast, pattern_rng, mlsl);
                if (word.size() <= mlsl) drawn.insert(std::move(word));
            }
            entry.samples_drawn = samples_per_pattern;
            entry.words.assign(std::make_move_iterator(drawn.begin()),
                               std::make_move_iterator(drawn.end()));
        }

        if (entry.words.empty()) throw EmptyPoolError(pattern.id);
        pool.pools.push_back(std::move(entry));
    }
    return pool;
}

DrawnFailure draw_failure_sequence(const FailurePool& pool, RandomStream& rng) {
    std::vector<const PatternPool*> usable;
    for (const auto& p : pool.pools) {
        if (!p.words.empty()) usable.push_back(&p);
    }
    if (usable.empty()) throw EmptyPoolError("(all patterns)");

    const auto& chosen = *usable[rng.uniform(static_cast<std::uint32_t>(usable.size()))];
    const auto& word = chosen.words[rng.uniform64(chosen.words.size())];
    return {word, chosen.pattern_id};
}

}  // namespace logsynth
