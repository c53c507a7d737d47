#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logsynth {

/// Dense index of a template ID within one alphabet.
using SymbolIndex = std::uint32_t;

/// A log sequence as interned template IDs.
using Word = std::vector<SymbolIndex>;

/// Template IDs are opaque tokens; the pattern grammar reserves
/// `| * ( ) .` and whitespace, so IDs may not contain them.
bool is_valid_template_id(std::string_view id);

/// Interning table mapping template-ID strings to dense indexes.
/// Index order is insertion order and is part of the serialized contract:
/// a model file's "alphabet" array pins it.
class SymbolTable {
public:
    /// Adds a new symbol; throws ValidationError on an invalid or duplicate ID.
    SymbolIndex add(std::string name);

    std::optional<SymbolIndex> find(std::string_view name) const;
    const std::string& name(SymbolIndex index) const;
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, SymbolIndex, std::less<>> index_;
};

/// Interns a sequence of template-ID strings; throws UnknownSymbolError.
Word to_word(std::span<const std::string> names, const SymbolTable& table);

std::vector<std::string> to_names(const Word& word, const SymbolTable& table);

/// Space-joined rendering, mostly for reports and error messages.
std::string join_word(const Word& word, const SymbolTable& table);

}  // namespace logsynth
