#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logsynth/symbols.hpp"

namespace logsynth {

using StateIndex = std::uint32_t;

/// Template ID -> template text (static text with `*` masking dynamic parts).
class TemplateCatalog {
public:
    void set(std::string template_id, std::string text);
    std::optional<std::string_view> text(std::string_view template_id) const;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

struct Transition {
    SymbolIndex symbol;
    StateIndex target;
};

/// Deterministic finite-state behaviour model over a log-template alphabet.
/// Immutable once built; all queries are safe for concurrent shared reads.
///
/// State and symbol names are interned to dense indexes. Index order follows
/// the declaration order in the source document, which makes every
/// transition-iteration order (and hence every seeded walk) reproducible.
class BehaviourModel {
public:
    class Builder {
    public:
        Builder& add_state(std::string name);
        Builder& add_symbol(std::string name);
        Builder& set_initial(std::string_view name);
        Builder& add_accepting(std::string_view name);
        Builder& add_transition(std::string_view src, std::string_view symbol, std::string_view dst);
        /// Validates all invariants; throws ValidationError with a location.
        BehaviourModel build();

    private:
        friend class BehaviourModel;
        std::vector<std::string> state_names_;
        std::map<std::string, StateIndex, std::less<>> state_index_;
        SymbolTable alphabet_;
        std::optional<StateIndex> initial_;
        std::vector<StateIndex> accepting_;
        struct RawTransition {
            StateIndex src;
            SymbolIndex symbol;
            StateIndex dst;
        };
        std::vector<RawTransition> transitions_;

        StateIndex require_state(std::string_view name, const char* context) const;
        SymbolIndex require_symbol(std::string_view name, const char* context) const;
    };

    std::size_t state_count() const noexcept { return state_names_.size(); }
    std::size_t transition_count() const noexcept { return transition_total_; }
    const SymbolTable& alphabet() const noexcept { return alphabet_; }

    StateIndex initial() const noexcept { return initial_; }
    bool is_accepting(StateIndex q) const { return accepting_mask_.at(q); }
    std::size_t accepting_count() const noexcept { return accepting_count_; }

    const std::string& state_name(StateIndex q) const { return state_names_.at(q); }
    std::optional<StateIndex> state_index(std::string_view name) const;

    /// delta(q, s); nullopt when the transition is undefined (delta is partial).
    std::optional<StateIndex> next(StateIndex q, SymbolIndex s) const;

    /// Outgoing transitions of q, sorted by symbol index.
    std::span<const Transition> transitions_from(StateIndex q) const;

    /// States with neither incoming nor outgoing transitions (excluding the
    /// initial state); reported by the validation CLI.
    std::vector<StateIndex> isolated_states() const;

private:
    BehaviourModel() = default;

    std::vector<std::string> state_names_;
    std::map<std::string, StateIndex, std::less<>> state_index_;
    SymbolTable alphabet_;
    StateIndex initial_ = 0;
    std::vector<bool> accepting_mask_;
    std::size_t accepting_count_ = 0;
    std::size_t transition_total_ = 0;

    // CSR-style adjacency plus a dense (state, symbol) lookup table.
    std::vector<std::uint32_t> row_offset_;
    std::vector<Transition> transitions_;
    std::vector<StateIndex> delta_table_;  // state * |alphabet| + symbol -> target or kNoTarget
    static constexpr StateIndex kNoTarget = static_cast<StateIndex>(-1);
};

/// delta*(q0, word); nullopt means Reject (some step undefined).
std::optional<StateIndex> extended_transition(const BehaviourModel& model,
                                              std::span<const SymbolIndex> word);

/// Name-based variant; a symbol outside the alphabet rejects (it is a value,
/// not an error).
std::optional<StateIndex> extended_transition(const BehaviourModel& model,
                                              std::span<const std::string> word);

bool accepts(const BehaviourModel& model, std::span<const SymbolIndex> word);
bool accepts(const BehaviourModel& model, std::span<const std::string> word);

/// Per-state shortest distance to an accepting state. States that cannot
/// reach acceptance carry an explicit empty value rather than a large number.
class SValueMap {
public:
    explicit SValueMap(std::vector<std::optional<std::uint32_t>> values)
        : values_(std::move(values)) {}

    std::optional<std::uint32_t> value(StateIndex q) const { return values_.at(q); }
    bool reachable(StateIndex q) const { return values_.at(q).has_value(); }
    std::size_t size() const noexcept { return values_.size(); }

    std::vector<StateIndex> unreachable_states() const;

private:
    std::vector<std::optional<std::uint32_t>> values_;
};

/// Multi-source BFS over reversed transitions from all accepting states.
/// Throws DegenerateModelError when the initial state cannot reach acceptance
/// (no log could ever be generated from this model).
SValueMap compute_s_values(const BehaviourModel& model);

}  // namespace logsynth
