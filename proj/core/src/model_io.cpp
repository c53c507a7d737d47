#include "logsynth/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "logsynth/errors.hpp"

namespace logsynth {

namespace {

using nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
}

const ordered_json& require_key(const ordered_json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing key '" + std::string(key) + "'");
    return *it;
}

std::string require_string(const ordered_json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(where + ": expected a string");
    return value.get<std::string>();
}

}  // namespace

ModelBundle load_model(std::string_view json_text, std::string model_id) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document: expected a JSON object");
    reject_unknown_keys(doc, {"states", "initial", "accepting", "alphabet", "transitions", "templates"},
                        "model document");

    const auto& states = require_key(doc, "states", "model document");
    const auto& initial = require_key(doc, "initial", "model document");
    const auto& accepting = require_key(doc, "accepting", "model document");
    const auto& alphabet = require_key(doc, "alphabet", "model document");
    const auto& transitions = require_key(doc, "transitions", "model document");
    const auto& templates = require_key(doc, "templates", "model document");

    if (!states.is_array()) throw ParseError("states: expected an array");
    if (!accepting.is_array()) throw ParseError("accepting: expected an array");
    if (!alphabet.is_array()) throw ParseError("alphabet: expected an array");
    if (!transitions.is_array()) throw ParseError("transitions: expected an array");
    if (!templates.is_object()) throw ParseError("templates: expected an object");

    BehaviourModel::Builder builder;
    for (std::size_t i = 0; i < states.size(); ++i) {
        builder.add_state(require_string(states[i], "states[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        builder.add_symbol(require_string(alphabet[i], "alphabet[" + std::to_string(i) + "]"));
    }
    builder.set_initial(require_string(initial, "initial"));
    for (std::size_t i = 0; i < accepting.size(); ++i) {
        builder.add_accepting(require_string(accepting[i], "accepting[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto where = "transitions[" + std::to_string(i) + "]";
        const auto& t = transitions[i];
        if (!t.is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(t, {"src", "symbol", "dst"}, where);
        builder.add_transition(require_string(require_key(t, "src", where), where + ".src"),
                               require_string(require_key(t, "symbol", where), where + ".symbol"),
                               require_string(require_key(t, "dst", where), where + ".dst"));
    }

    ModelBundle bundle{builder.build(), {}, std::move(model_id)};

    std::set<std::string> alphabet_set(bundle.model.alphabet().names().begin(),
                                       bundle.model.alphabet().names().end());
    for (const auto& [key, value] : templates.items()) {
        if (!alphabet_set.contains(key)) {
            throw ValidationError("templates: entry '" + key + "' is not in the alphabet");
        }
        bundle.catalog.set(key, require_string(value, "templates['" + key + "']"));
    }
    for (const auto& sym : bundle.model.alphabet().names()) {
        if (!bundle.catalog.text(sym)) {
            throw ValidationError("templates: missing entry for alphabet symbol '" + sym + "'");
        }
    }
    return bundle;
}

ModelBundle load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model(buffer.str(), path.stem().string());
}

std::string serialize_model(const BehaviourModel& model, const TemplateCatalog& catalog) {
    ordered_json doc;
    doc["states"] = ordered_json::array();
    for (StateIndex q = 0; q < model.state_count(); ++q) doc["states"].push_back(model.state_name(q));
    doc["initial"] = model.state_name(model.initial());
    doc["accepting"] = ordered_json::array();
    for (StateIndex q = 0; q < model.state_count(); ++q) {
        if (model.is_accepting(q)) doc["accepting"].push_back(model.state_name(q));
    }
    doc["alphabet"] = model.alphabet().names();
    doc["transitions"] = ordered_json::array();
    for (StateIndex q = 0; q < model.state_count(); ++q) {
        for (const auto& t : model.transitions_from(q)) {
            doc["transitions"].push_back({{"src", model.state_name(q)},
                                          {"symbol", model.alphabet().name(t.symbol)},
                                          {"dst", model.state_name(t.target)}});
        }
    }
    ordered_json tmpl = ordered_json::object();
    for (const auto& sym : model.alphabet().names()) {
        const auto text = catalog.text(sym);
        tmpl[sym] = text ? std::string(*text) : std::string();
    }
    doc["templates"] = std::move(tmpl);
    return doc.dump(2) + "\n";
}

}  // namespace logsynth
