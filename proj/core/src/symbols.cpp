#include "logsynth/symbols.hpp"

#include <cctype>

#include "logsynth/errors.hpp"

namespace logsynth {

bool is_valid_template_id(std::string_view id) {
    if (id.empty()) return false;
    for (const char c : id) {
        switch (c) {
            case '|':
            case '*':
            case '(':
            case ')':
            case '.':
                return false;
            default:
                if (std::isspace(static_cast<unsigned char>(c))) return false;
        }
    }
    return true;
}

SymbolIndex SymbolTable::add(std::string name) {
    if (!is_valid_template_id(name)) {
        throw ValidationError("invalid template id '" + name +
                              "': must be non-empty and free of | * ( ) . and whitespace");
    }
    if (index_.contains(name)) {
        throw ValidationError("duplicate template id '" + name + "'");
    }
    const auto idx = static_cast<SymbolIndex>(names_.size());
    index_.emplace(name, idx);
    names_.push_back(std::move(name));
    return idx;
}

std::optional<SymbolIndex> SymbolTable::find(std::string_view name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& SymbolTable::name(SymbolIndex index) const {
    return names_.at(index);
}

Word to_word(std::span<const std::string> names, const SymbolTable& table) {
    Word word;
    word.reserve(names.size());
    for (const auto& n : names) {
        const auto idx = table.find(n);
        if (!idx) throw UnknownSymbolError(n, "in sequence");
        word.push_back(*idx);
    }
    return word;
}

std::vector<std::string> to_names(const Word& word, const SymbolTable& table) {
    std::vector<std::string> names;
    names.reserve(word.size());
    for (const auto s : word) names.push_back(table.name(s));
    return names;
}

std::string join_word(const Word& word, const SymbolTable& table) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += ' ';
        out += table.name(word[i]);
    }
    return out;
}

}  // namespace logsynth
