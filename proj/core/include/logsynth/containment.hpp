#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "logsynth/automaton.hpp"
#include "logsynth/regex.hpp"

namespace logsynth {

struct ContainmentReport {
    /// L(pattern) is a subset of L(model).
    bool included = false;
    /// Shortest word in L(pattern) \ L(model); present exactly when not included.
    std::optional<std::vector<std::string>> witness;
    /// Whether L(model) is NOT a subset of L(pattern); together with
    /// `included` this decides proper inclusion. Absent when the check was
    /// skipped.
    std::optional<bool> proper;
};

struct ContainmentOptions {
    bool check_proper = true;
    /// State budget for the subset construction behind the proper check; the
    /// forward inclusion never determinizes the pattern.
    std::size_t determinization_budget = 4096;
};

/// Decides L(pattern) vs L(model) exactly. The forward inclusion runs a
/// product of the pattern's Thompson automaton with the completed model
/// (sink state added); emptiness is a shortest-path search, so a failing
/// check returns a shortest witness. Pattern literals that the model's
/// alphabet lacks route to the sink, so a mismatched alphabet simply shows
/// up as a witness.
///
/// Throws SizeLimitError when the proper check's subset construction
/// exceeds the configured budget.
ContainmentReport check_containment(const Regex& pattern, const SymbolTable& pattern_alphabet,
                                    const BehaviourModel& model,
                                    const ContainmentOptions& options = {});

}  // namespace logsynth
