#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "logsynth/regex.hpp"
#include "logsynth/symbols.hpp"

namespace logsynth {

/// Fixed-width bitset over NFA states.
class StateMask {
public:
    StateMask() = default;
    explicit StateMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t bit) { words_[bit >> 6] |= (1ULL << (bit & 63)); }
    bool test(std::size_t bit) const { return (words_[bit >> 6] >> (bit & 63)) & 1ULL; }

    void or_with(const StateMask& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    bool empty() const {
        for (const auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    bool operator==(const StateMask&) const = default;
    auto operator<=>(const StateMask&) const = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::size_t word_count() const noexcept { return words_.size(); }

private:
    std::vector<std::uint64_t> words_;
};

/// Thompson construction of the pattern regex. Each state has at most one
/// symbol edge and at most two epsilon edges; epsilon closures are
/// precomputed as per-state masks so a simulation step is two mask gathers.
class PatternNfa {
public:
    explicit PatternNfa(const Regex& regex);

    std::size_t state_count() const noexcept { return symbol_edge_.size(); }
    const StateMask& start_mask() const noexcept { return start_mask_; }
    bool accepts(const StateMask& mask) const { return mask.test(accept_state_); }

    /// All states reachable from `mask` by one `symbol` step plus closure.
    StateMask step(const StateMask& mask, SymbolIndex symbol) const;

    /// Symbols that appear as literals, deduplicated and sorted.
    const std::vector<SymbolIndex>& literal_symbols() const noexcept { return literal_symbols_; }

    // Per-state structure, used by the containment product construction.
    std::uint32_t start_state() const noexcept { return start_state_; }
    bool is_accept_state(std::uint32_t s) const noexcept { return s == accept_state_; }
    const StateMask& closure_of(std::uint32_t s) const { return closure_.at(s); }
    std::optional<std::pair<SymbolIndex, std::uint32_t>> symbol_edge_of(std::uint32_t s) const {
        const auto& edge = symbol_edge_.at(s);
        if (!edge.present) return std::nullopt;
        return std::make_pair(edge.symbol, edge.target);
    }

private:
    struct SymbolEdge {
        SymbolIndex symbol;
        std::uint32_t target;
        bool present = false;
    };

    std::uint32_t add_state();
    std::uint32_t build(const RegexNode& node, std::uint32_t attach);  // returns fragment accept

    std::vector<SymbolEdge> symbol_edge_;
    std::vector<std::vector<std::uint32_t>> eps_edges_;
    std::vector<StateMask> closure_;  // closure_[s] = epsilon-closure of {s}
    std::uint32_t start_state_ = 0;
    std::uint32_t accept_state_ = 0;
    StateMask start_mask_;
    std::vector<SymbolIndex> literal_symbols_;
};

/// Reusable whole-sequence matcher for one pattern.
class CompiledPattern {
public:
    explicit CompiledPattern(const Regex& regex) : nfa_(regex) {}

    bool matches(std::span<const SymbolIndex> word) const;

    const PatternNfa& nfa() const noexcept { return nfa_; }

private:
    PatternNfa nfa_;
};

}  // namespace logsynth
