#include "logsynth/matcher.hpp"

#include <algorithm>

namespace logsynth {

std::uint32_t PatternNfa::add_state() {
    const auto idx = static_cast<std::uint32_t>(symbol_edge_.size());
    symbol_edge_.push_back({});
    eps_edges_.emplace_back();
    return idx;
}

// Builds the fragment for `node` starting at state `attach`; returns the
// fragment's accepting state.
std::uint32_t PatternNfa::build(const RegexNode& node, std::uint32_t attach) {
    switch (node.kind) {
        case RegexNode::Kind::Epsilon: {
            const auto out = add_state();
            eps_edges_[attach].push_back(out);
            return out;
        }
        case RegexNode::Kind::Literal: {
            const auto out = add_state();
            symbol_edge_[attach] = {node.symbol, out, true};
            return out;
        }
        case RegexNode::Kind::Concat: {
            const auto mid = build(*node.left, attach);
            return build(*node.right, mid);
        }
        case RegexNode::Kind::Alt: {
            const auto left_in = add_state();
            const auto right_in = add_state();
            eps_edges_[attach].push_back(left_in);
            eps_edges_[attach].push_back(right_in);
            const auto left_out = build(*node.left, left_in);
            const auto right_out = build(*node.right, right_in);
            const auto out = add_state();
            eps_edges_[left_out].push_back(out);
            eps_edges_[right_out].push_back(out);
            return out;
        }
        case RegexNode::Kind::Star: {
            const auto inner_in = add_state();
            const auto out = add_state();
            eps_edges_[attach].push_back(inner_in);
            eps_edges_[attach].push_back(out);
            const auto inner_out = build(*node.left, inner_in);
            eps_edges_[inner_out].push_back(inner_in);
            eps_edges_[inner_out].push_back(out);
            return out;
        }
    }
    return attach;
}

PatternNfa::PatternNfa(const Regex& regex) {
    start_state_ = add_state();
    accept_state_ = build(regex.root(), start_state_);

    const std::size_t n = state_count();
    closure_.assign(n, StateMask(n));
    // Closure by fixed point; fragment graphs are small, so simplicity wins.
    for (std::uint32_t s = 0; s < n; ++s) closure_[s].set(s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t s = 0; s < n; ++s) {
            StateMask before = closure_[s];
            for (const auto t : eps_edges_[s]) closure_[s].or_with(closure_[t]);
            if (!(closure_[s] == before)) changed = true;
        }
    }

    start_mask_ = closure_[start_state_];

    for (const auto& edge : symbol_edge_) {
        if (edge.present) literal_symbols_.push_back(edge.symbol);
    }
    std::sort(literal_symbols_.begin(), literal_symbols_.end());
    literal_symbols_.erase(std::unique(literal_symbols_.begin(), literal_symbols_.end()),
                           literal_symbols_.end());
}

StateMask PatternNfa::step(const StateMask& mask, SymbolIndex symbol) const {
    StateMask next(state_count());
    const auto& words = mask.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            const auto bit = static_cast<std::uint32_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            const auto s = static_cast<std::uint32_t>(w * 64 + bit);
            const auto& edge = symbol_edge_[s];
            if (edge.present && edge.symbol == symbol) next.or_with(closure_[edge.target]);
        }
    }
    return next;
}

bool CompiledPattern::matches(std::span<const SymbolIndex> word) const {
    StateMask current = nfa_.start_mask();
    for (const auto symbol : word) {
        current = nfa_.step(current, symbol);
        if (current.empty()) return false;
    }
    return nfa_.accepts(current);
}

}  // namespace logsynth
