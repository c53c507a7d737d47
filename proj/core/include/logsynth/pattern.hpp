#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "logsynth/automaton.hpp"
#include "logsynth/regex.hpp"

namespace logsynth {

/// A named failure pattern bound to one behaviour model. Construction
/// validates the declared type against the language's actual cardinality;
/// containment in the model is checked separately (it needs the model and
/// is the caller's step).
struct FailurePattern {
    std::string id;
    std::string model_ref;
    PatternType type;
    Regex ast;
    PatternMetrics metrics;
    std::string expr_text;
};

/// Parses a pattern document: one object or an array of objects of the form
///   {"id": .., "model": .., "type": "F"|"I", "expr": "x ( y | z )"}
/// Literals are resolved against the model's alphabet. A declared type that
/// contradicts the expression's language cardinality is an error, as is a
/// model reference that does not match `model_id`.
std::vector<FailurePattern> load_patterns(std::string_view json_text, const BehaviourModel& model,
                                          std::string_view model_id);

std::vector<FailurePattern> load_patterns_file(const std::filesystem::path& path,
                                               const BehaviourModel& model,
                                               std::string_view model_id);

}  // namespace logsynth
