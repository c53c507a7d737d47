#include "logsynth/containment.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "logsynth/errors.hpp"
#include "logsynth/matcher.hpp"

namespace logsynth {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct ForwardResult {
    bool included;
    std::vector<std::string> witness;
};

// Reachability of (accepting NFA state, non-accepting model state) in the
// product of the pattern NFA with the sink-completed model. Epsilon edges
// cost 0 and symbol edges cost 1, so a deque-based search yields a shortest
// witness directly.
ForwardResult forward_inclusion(const PatternNfa& nfa, const SymbolTable& pattern_alphabet,
                                const BehaviourModel& model) {
    const auto n_model = static_cast<std::uint32_t>(model.state_count());
    const std::uint32_t sink = n_model;
    const auto n_nfa = static_cast<std::uint32_t>(nfa.state_count());
    const std::size_t n_nodes = static_cast<std::size_t>(n_nfa) * (n_model + 1);

    // Pattern symbol -> model symbol (or sink-only when the model lacks it).
    std::map<SymbolIndex, std::optional<SymbolIndex>> symbol_map;
    for (const auto psym : nfa.literal_symbols()) {
        symbol_map[psym] = model.alphabet().find(pattern_alphabet.name(psym));
    }

    struct NodeInfo {
        std::uint32_t dist = kUnvisited;
        std::uint32_t parent = kUnvisited;
        SymbolIndex via_symbol = 0;  // pattern-table index; valid when parent cost 1
        bool via_epsilon = false;
    };
    std::vector<NodeInfo> nodes(n_nodes);

    const auto node_id = [n_model](std::uint32_t nfa_state, std::uint32_t m_state) {
        return static_cast<std::size_t>(nfa_state) * (n_model + 1) + m_state;
    };

    // The NFA exposes epsilon edges only through closures; rebuild unit steps
    // from per-state closures for path reconstruction. A single epsilon hop
    // to the full closure of each state keeps distances correct because
    // epsilon hops are free.
    std::deque<std::size_t> queue;
    const auto start = node_id(nfa.start_state(), model.initial());
    nodes[start].dist = 0;
    queue.push_back(start);

    std::optional<std::size_t> bad_node;

    while (!queue.empty() && !bad_node) {
        const auto current = queue.front();
        queue.pop_front();
        const auto nfa_state = static_cast<std::uint32_t>(current / (n_model + 1));
        const auto m_state = static_cast<std::uint32_t>(current % (n_model + 1));

        // Free moves across the epsilon closure of the current NFA state.
        const auto& closure = nfa.closure_of(nfa_state);
        for (std::uint32_t target = 0; target < n_nfa; ++target) {
            if (target == nfa_state || !closure.test(target)) continue;
            const auto next = node_id(target, m_state);
            if (nodes[next].dist > nodes[current].dist) {
                nodes[next].dist = nodes[current].dist;
                nodes[next].parent = static_cast<std::uint32_t>(current);
                nodes[next].via_epsilon = true;
                queue.push_front(next);
            }
        }

        if (nfa.is_accept_state(nfa_state) && (m_state == sink || !model.is_accepting(m_state))) {
            bad_node = current;
            break;
        }

        const auto edge = nfa.symbol_edge_of(nfa_state);
        if (edge) {
            const auto mapped = symbol_map.at(edge->first);
            std::uint32_t m_next = sink;
            if (m_state != sink && mapped) {
                const auto target = model.next(m_state, *mapped);
                m_next = target ? *target : sink;
            }
            const auto next = node_id(edge->second, m_next);
            if (nodes[next].dist > nodes[current].dist + 1) {
                nodes[next].dist = nodes[current].dist + 1;
                nodes[next].parent = static_cast<std::uint32_t>(current);
                nodes[next].via_symbol = edge->first;
                nodes[next].via_epsilon = false;
                queue.push_back(next);
            }
        }
    }

    if (!bad_node) return {true, {}};

    std::vector<std::string> witness;
    for (std::size_t at = *bad_node; nodes[at].parent != kUnvisited;
         at = nodes[at].parent) {
        if (!nodes[at].via_epsilon) {
            witness.push_back(pattern_alphabet.name(nodes[at].via_symbol));
        }
    }
    std::reverse(witness.begin(), witness.end());
    return {false, std::move(witness)};
}

// Subset construction over the pattern NFA, product with the (partial) model:
// searches for a model-accepted word outside the pattern language.
bool model_escapes_pattern(const PatternNfa& nfa, const SymbolTable& pattern_alphabet,
                           const BehaviourModel& model, std::size_t budget) {
    // Model symbol -> pattern-table symbol, when the pattern alphabet has it.
    std::vector<std::optional<SymbolIndex>> to_pattern(model.alphabet().size());
    for (SymbolIndex m = 0; m < model.alphabet().size(); ++m) {
        to_pattern[m] = pattern_alphabet.find(model.alphabet().name(m));
    }

    std::map<StateMask, std::uint32_t> det_ids;
    std::vector<StateMask> det_states;
    std::vector<bool> det_accepting;
    const auto intern = [&](const StateMask& mask) {
        const auto it = det_ids.find(mask);
        if (it != det_ids.end()) return it->second;
        if (det_states.size() >= budget) {
            throw SizeLimitError("pattern determinization exceeded the budget of " +
                                 std::to_string(budget) + " states");
        }
        const auto id = static_cast<std::uint32_t>(det_states.size());
        det_ids.emplace(mask, id);
        det_states.push_back(mask);
        det_accepting.push_back(nfa.accepts(mask));
        return id;
    };

    const auto start_det = intern(nfa.start_mask());
    const StateMask dead(nfa.state_count());

    std::map<std::pair<StateIndex, std::uint32_t>, bool> visited;
    std::deque<std::pair<StateIndex, std::uint32_t>> queue;
    queue.push_back({model.initial(), start_det});
    visited[{model.initial(), start_det}] = true;

    while (!queue.empty()) {
        const auto [m_state, det] = queue.front();
        queue.pop_front();
        if (model.is_accepting(m_state) && !det_accepting[det]) return true;

        for (const auto& t : model.transitions_from(m_state)) {
            const auto psym = to_pattern[t.symbol];
            const StateMask next_mask =
                psym ? nfa.step(det_states[det], *psym) : dead;
            const auto next_det = intern(next_mask);
            const auto key = std::make_pair(t.target, next_det);
            if (!visited[key]) {
                visited[key] = true;
                queue.push_back(key);
            }
        }
    }
    return false;
}

}  // namespace

ContainmentReport check_containment(const Regex& pattern, const SymbolTable& pattern_alphabet,
                                    const BehaviourModel& model,
                                    const ContainmentOptions& options) {
    const PatternNfa nfa(pattern);

    ContainmentReport report;
    auto forward = forward_inclusion(nfa, pattern_alphabet, model);
    report.included = forward.included;
    if (!forward.included) report.witness = std::move(forward.witness);

    if (options.check_proper) {
        report.proper =
            model_escapes_pattern(nfa, pattern_alphabet, model, options.determinization_budget);
    }
    return report;
}

}  // namespace logsynth
