#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logsynth/random.hpp"
#include "logsynth/symbols.hpp"

namespace logsynth {

/// Failure-pattern type: finite vs infinite language.
enum class PatternType { Finite, Infinite };

std::string_view to_string(PatternType type);  // "F" / "I"

struct RegexNode {
    enum class Kind { Epsilon, Literal, Concat, Alt, Star };

    Kind kind;
    SymbolIndex symbol = 0;  // Literal only
    std::shared_ptr<const RegexNode> left;
    std::shared_ptr<const RegexNode> right;  // Concat/Alt only
};

/// Immutable regular expression over template IDs. Nodes are shared, so
/// copies are cheap and concurrent reads are safe.
class Regex {
public:
    explicit Regex(std::shared_ptr<const RegexNode> root) : root_(std::move(root)) {}

    const RegexNode& root() const { return *root_; }
    const std::shared_ptr<const RegexNode>& root_ptr() const { return root_; }

    static Regex epsilon();
    static Regex literal(SymbolIndex symbol);
    static Regex concat(const Regex& left, const Regex& right);
    static Regex alt(const Regex& left, const Regex& right);
    static Regex star(const Regex& inner);

private:
    std::shared_ptr<const RegexNode> root_;
};

/// Parses a pattern expression. Literals are tokens from the alphabet,
/// metasymbols are | ( ) *, "eps" spells the empty word, juxtaposition is
/// concatenation. Precedence: star > concatenation > alternation;
/// concatenation and alternation associate to the left.
/// Throws ParseError (syntax) or UnknownSymbolError (literal not in alphabet).
Regex parse_pattern(std::string_view text, const SymbolTable& alphabet);

/// Whole-sequence match (no substring semantics).
bool matches(const Regex& regex, std::span<const SymbolIndex> word);

/// Draws a random word of the language: alternation branches are chosen
/// uniformly, each star's repetition count uniformly from {0..star_limit}.
Word sample_word(const Regex& regex, RandomStream& rng, std::uint32_t star_limit);

/// Exactly the words of the language with length <= max_length, sorted and
/// deduplicated. Throws CapExceededError when their count exceeds cap.
std::vector<Word> enumerate_language(const Regex& regex, std::size_t max_length, std::size_t cap);

/// Finite vs infinite by language cardinality: a star only makes the
/// language infinite when its inner language contains a non-empty word.
PatternType classify(const Regex& regex);

struct PatternMetrics {
    std::uint32_t length = 0;          // letters plus operators
    std::uint32_t alphabet_size = 0;   // distinct literals
    std::uint32_t operator_count = 0;  // alternation + star nodes
    std::uint32_t star_depth = 0;      // max star nesting, 0 when no star
};

PatternMetrics pattern_metrics(const Regex& regex);

/// Parseable textual form (literals resolved through the table).
std::string to_string(const Regex& regex, const SymbolTable& alphabet);

}  // namespace logsynth
