#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "logsynth/automaton.hpp"

namespace logsynth {

struct ModelBundle {
    BehaviourModel model;
    TemplateCatalog catalog;
    std::string id;  // by convention the file stem; pattern files reference it
};

/// Parses and validates a model document:
///   {"states": [..], "initial": s, "accepting": [..], "alphabet": [..],
///    "transitions": [{"src": s, "symbol": t, "dst": s'}, ..],
///    "templates": {t: "text with *", ..}}
/// Unknown keys are rejected. Throws ParseError for malformed documents and
/// ValidationError (with location) for semantic violations.
ModelBundle load_model(std::string_view json_text, std::string model_id = "");

ModelBundle load_model_file(const std::filesystem::path& path);

/// Inverse of load_model; load_model(serialize_model(m)) reproduces m.
std::string serialize_model(const BehaviourModel& model, const TemplateCatalog& catalog);

}  // namespace logsynth
