#include "logsynth/automaton.hpp"

#include <algorithm>
#include <deque>

#include "logsynth/errors.hpp"

namespace logsynth {

void TemplateCatalog::set(std::string template_id, std::string text) {
    entries_[std::move(template_id)] = std::move(text);
}

std::optional<std::string_view> TemplateCatalog::text(std::string_view template_id) const {
    const auto it = entries_.find(std::string(template_id));
    if (it == entries_.end()) return std::nullopt;
    return std::string_view(it->second);
}

BehaviourModel::Builder& BehaviourModel::Builder::add_state(std::string name) {
    if (name.empty()) throw ValidationError("state name must be non-empty");
    if (state_index_.contains(name)) throw ValidationError("duplicate state '" + name + "'");
    const auto idx = static_cast<StateIndex>(state_names_.size());
    state_index_.emplace(name, idx);
    state_names_.push_back(std::move(name));
    return *this;
}

BehaviourModel::Builder& BehaviourModel::Builder::add_symbol(std::string name) {
    alphabet_.add(std::move(name));
    return *this;
}

StateIndex BehaviourModel::Builder::require_state(std::string_view name, const char* context) const {
    const auto it = state_index_.find(name);
    if (it == state_index_.end()) {
        throw ValidationError(std::string(context) + ": unknown state '" + std::string(name) + "'");
    }
    return it->second;
}

SymbolIndex BehaviourModel::Builder::require_symbol(std::string_view name, const char* context) const {
    const auto idx = alphabet_.find(name);
    if (!idx) {
        throw ValidationError(std::string(context) + ": unknown symbol '" + std::string(name) + "'");
    }
    return *idx;
}

BehaviourModel::Builder& BehaviourModel::Builder::set_initial(std::string_view name) {
    initial_ = require_state(name, "initial");
    return *this;
}

BehaviourModel::Builder& BehaviourModel::Builder::add_accepting(std::string_view name) {
    accepting_.push_back(require_state(name, "accepting"));
    return *this;
}

BehaviourModel::Builder& BehaviourModel::Builder::add_transition(std::string_view src,
                                                                 std::string_view symbol,
                                                                 std::string_view dst) {
    const auto context = "transitions[" + std::to_string(transitions_.size()) + "]";
    transitions_.push_back({require_state(src, context.c_str()),
                            require_symbol(symbol, context.c_str()),
                            require_state(dst, context.c_str())});
    return *this;
}

BehaviourModel BehaviourModel::Builder::build() {
    if (state_names_.empty()) throw ValidationError("model has no states");
    if (!initial_) throw ValidationError("model has no initial state");

    BehaviourModel model;
    model.state_names_ = std::move(state_names_);
    model.state_index_ = std::move(state_index_);
    model.alphabet_ = std::move(alphabet_);
    model.initial_ = *initial_;

    model.accepting_mask_.assign(model.state_names_.size(), false);
    for (const auto q : accepting_) {
        if (model.accepting_mask_[q]) {
            throw ValidationError("accepting: duplicate state '" + model.state_names_[q] + "'");
        }
        model.accepting_mask_[q] = true;
    }
    model.accepting_count_ = accepting_.size();

    const std::size_t n_states = model.state_names_.size();
    const std::size_t n_syms = model.alphabet_.size();

    model.delta_table_.assign(n_states * n_syms, kNoTarget);
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        const auto& t = transitions_[i];
        auto& cell = model.delta_table_[static_cast<std::size_t>(t.src) * n_syms + t.symbol];
        if (cell != kNoTarget) {
            throw ValidationError("transitions[" + std::to_string(i) + "]: non-deterministic, state '" +
                                  model.state_names_[t.src] + "' already has a transition on '" +
                                  model.alphabet_.name(t.symbol) + "'");
        }
        cell = t.dst;
    }

    model.row_offset_.assign(n_states + 1, 0);
    model.transitions_.reserve(transitions_.size());
    for (StateIndex q = 0; q < n_states; ++q) {
        model.row_offset_[q] = static_cast<std::uint32_t>(model.transitions_.size());
        for (SymbolIndex s = 0; s < n_syms; ++s) {
            const auto dst = model.delta_table_[static_cast<std::size_t>(q) * n_syms + s];
            if (dst != kNoTarget) model.transitions_.push_back({s, dst});
        }
    }
    model.row_offset_[n_states] = static_cast<std::uint32_t>(model.transitions_.size());
    model.transition_total_ = model.transitions_.size();
    return model;
}

std::optional<StateIndex> BehaviourModel::state_index(std::string_view name) const {
    const auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<StateIndex> BehaviourModel::next(StateIndex q, SymbolIndex s) const {
    if (q >= state_names_.size() || s >= alphabet_.size()) return std::nullopt;
    const auto dst = delta_table_[static_cast<std::size_t>(q) * alphabet_.size() + s];
    if (dst == kNoTarget) return std::nullopt;
    return dst;
}

std::span<const Transition> BehaviourModel::transitions_from(StateIndex q) const {
    const auto begin = row_offset_.at(q);
    const auto end = row_offset_.at(q + 1);
    return {transitions_.data() + begin, transitions_.data() + end};
}

std::vector<StateIndex> BehaviourModel::isolated_states() const {
    std::vector<bool> touched(state_names_.size(), false);
    touched[initial_] = true;
    for (StateIndex q = 0; q < state_names_.size(); ++q) {
        for (const auto& t : transitions_from(q)) {
            touched[q] = true;
            touched[t.target] = true;
        }
    }
    std::vector<StateIndex> isolated;
    for (StateIndex q = 0; q < state_names_.size(); ++q) {
        if (!touched[q]) isolated.push_back(q);
    }
    return isolated;
}

std::optional<StateIndex> extended_transition(const BehaviourModel& model,
                                              std::span<const SymbolIndex> word) {
    StateIndex q = model.initial();
    for (const auto s : word) {
        const auto nxt = model.next(q, s);
        if (!nxt) return std::nullopt;
        q = *nxt;
    }
    return q;
}

std::optional<StateIndex> extended_transition(const BehaviourModel& model,
                                              std::span<const std::string> word) {
    StateIndex q = model.initial();
    for (const auto& name : word) {
        const auto s = model.alphabet().find(name);
        if (!s) return std::nullopt;
        const auto nxt = model.next(q, *s);
        if (!nxt) return std::nullopt;
        q = *nxt;
    }
    return q;
}

bool accepts(const BehaviourModel& model, std::span<const SymbolIndex> word) {
    const auto q = extended_transition(model, word);
    return q && model.is_accepting(*q);
}

bool accepts(const BehaviourModel& model, std::span<const std::string> word) {
    const auto q = extended_transition(model, word);
    return q && model.is_accepting(*q);
}

std::vector<StateIndex> SValueMap::unreachable_states() const {
    std::vector<StateIndex> out;
    for (StateIndex q = 0; q < values_.size(); ++q) {
        if (!values_[q]) out.push_back(q);
    }
    return out;
}

SValueMap compute_s_values(const BehaviourModel& model) {
    const std::size_t n = model.state_count();

    std::vector<std::vector<StateIndex>> reverse(n);
    for (StateIndex q = 0; q < n; ++q) {
        for (const auto& t : model.transitions_from(q)) {
            reverse[t.target].push_back(q);
        }
    }

    std::vector<std::optional<std::uint32_t>> values(n);
    std::deque<StateIndex> frontier;
    for (StateIndex q = 0; q < n; ++q) {
        if (model.is_accepting(q)) {
            values[q] = 0;
            frontier.push_back(q);
        }
    }
    while (!frontier.empty()) {
        const auto q = frontier.front();
        frontier.pop_front();
        for (const auto p : reverse[q]) {
            if (!values[p]) {
                values[p] = *values[q] + 1;
                frontier.push_back(p);
            }
        }
    }

    if (!values[model.initial()]) {
        throw DegenerateModelError("initial state '" + model.state_name(model.initial()) +
                                   "' cannot reach any accepting state");
    }
    return SValueMap(std::move(values));
}

}  // namespace logsynth
