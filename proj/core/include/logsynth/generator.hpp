#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "logsynth/automaton.hpp"
#include "logsynth/matcher.hpp"
#include "logsynth/pattern.hpp"
#include "logsynth/random.hpp"

namespace logsynth {

inline constexpr std::uint32_t kDefaultMaxAttempts = 1000;
inline constexpr std::uint32_t kDefaultSamplesPerPattern = 2500;
inline constexpr std::size_t kPoolEnumerationCap = 100000;

struct WalkConfig {
    std::uint32_t mlsl;
    std::uint32_t max_attempts = kDefaultMaxAttempts;
};

/// Uniform random walk from the initial state that stops at the first
/// accepting state reached. At every step the candidate transitions are
/// filtered to those whose target can still reach acceptance within the
/// remaining budget, so the output is always accepted and never longer
/// than mlsl.
///
/// Throws DegenerateModelError when the initial state cannot reach
/// acceptance within mlsl (checked before walking). The filter invariant
/// guarantees a non-empty candidate set at every step; a violation would be
/// a library bug and raises std::logic_error.
Word filtered_random_walk(const BehaviourModel& model, const SValueMap& svalues,
                          std::uint32_t mlsl, RandomStream& rng);

/// Repeats filtered_random_walk until the walk matches none of the active
/// patterns. Throws AttemptsExhaustedError after max_attempts rejected walks
/// (the patterns cover too much of the model's bounded language).
Word generate_normal_sequence(const BehaviourModel& model, const SValueMap& svalues,
                              std::span<const CompiledPattern> patterns, const WalkConfig& config,
                              RandomStream& rng);

struct PatternPool {
    std::string pattern_id;
    std::vector<Word> words;  // deduplicated, sorted; every word has length <= mlsl
    bool exact = false;       // true when the finite language was enumerated in full
    std::uint64_t samples_drawn = 0;
    std::uint32_t star_limit = 0;
};

struct FailurePool {
    std::vector<PatternPool> pools;
};

/// Builds one word pool per pattern. Finite languages small enough to
/// enumerate are covered exactly; otherwise the pool is the deduplicated
/// yield of samples_per_pattern random draws with star_limit = mlsl (more
/// repetitions could never survive the length filter). Throws
/// EmptyPoolError when a pattern yields no word of length <= mlsl.
FailurePool build_failure_pool(std::span<const FailurePattern> patterns, std::uint32_t mlsl,
                               std::uint32_t samples_per_pattern, RandomStream& rng);

struct DrawnFailure {
    Word word;
    std::string pattern_id;
};

/// Uniformly picks a pattern among those with non-empty pools, then
/// uniformly a word from that pool; draws are with replacement.
DrawnFailure draw_failure_sequence(const FailurePool& pool, RandomStream& rng);

}  // namespace logsynth
