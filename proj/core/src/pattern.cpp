#include "logsynth/pattern.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "logsynth/errors.hpp"

namespace logsynth {

namespace {

using nlohmann::ordered_json;

FailurePattern parse_one(const ordered_json& obj, const BehaviourModel& model,
                         std::string_view model_id, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (key != "id" && key != "model" && key != "type" && key != "expr") {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
    const auto get = [&](const char* key) -> std::string {
        const auto it = obj.find(key);
        if (it == obj.end()) throw ParseError(where + ": missing key '" + std::string(key) + "'");
        if (!it->is_string()) throw ParseError(where + "." + key + ": expected a string");
        return it->get<std::string>();
    };

    FailurePattern pattern{get("id"), get("model"), PatternType::Finite,
                           parse_pattern(get("expr"), model.alphabet()), {}, get("expr")};
    const auto type_text = get("type");
    if (type_text == "F") {
        pattern.type = PatternType::Finite;
    } else if (type_text == "I") {
        pattern.type = PatternType::Infinite;
    } else {
        throw ValidationError(where + ".type: expected \"F\" or \"I\", got \"" + type_text + "\"");
    }

    if (!model_id.empty() && pattern.model_ref != model_id) {
        throw ValidationError(where + ": pattern '" + pattern.id + "' references model '" +
                              pattern.model_ref + "' but was loaded against '" +
                              std::string(model_id) + "'");
    }

    const auto actual = classify(pattern.ast);
    if (actual != pattern.type) {
        throw ValidationError(where + ": pattern '" + pattern.id + "' is declared type " +
                              std::string(to_string(pattern.type)) + " but its language is " +
                              (actual == PatternType::Finite ? "finite" : "infinite"));
    }
    pattern.metrics = pattern_metrics(pattern.ast);
    return pattern;
}

}  // namespace

std::vector<FailurePattern> load_patterns(std::string_view json_text, const BehaviourModel& model,
                                          std::string_view model_id) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("pattern document: ") + e.what());
    }

    std::vector<FailurePattern> patterns;
    if (doc.is_object()) {
        patterns.push_back(parse_one(doc, model, model_id, "pattern document"));
    } else if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            patterns.push_back(
                parse_one(doc[i], model, model_id, "patterns[" + std::to_string(i) + "]"));
        }
    } else {
        throw ParseError("pattern document: expected an object or an array");
    }

    std::set<std::string> ids;
    for (const auto& p : patterns) {
        if (!ids.insert(p.id).second) {
            throw ValidationError("duplicate pattern id '" + p.id + "'");
        }
    }
    return patterns;
}

std::vector<FailurePattern> load_patterns_file(const std::filesystem::path& path,
                                               const BehaviourModel& model,
                                               std::string_view model_id) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pattern file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_patterns(buffer.str(), model, model_id);
}

}  // namespace logsynth
