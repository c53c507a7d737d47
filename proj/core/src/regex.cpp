#include "logsynth/regex.hpp"

#include <algorithm>
#include <set>

#include "logsynth/errors.hpp"
#include "logsynth/matcher.hpp"

namespace logsynth {

std::string_view to_string(PatternType type) {
    return type == PatternType::Finite ? "F" : "I";
}

namespace {

std::shared_ptr<const RegexNode> make_node(RegexNode node) {
    return std::make_shared<const RegexNode>(std::move(node));
}

}  // namespace

Regex Regex::epsilon() {
    return Regex(make_node({RegexNode::Kind::Epsilon, 0, nullptr, nullptr}));
}

Regex Regex::literal(SymbolIndex symbol) {
    return Regex(make_node({RegexNode::Kind::Literal, symbol, nullptr, nullptr}));
}

Regex Regex::concat(const Regex& left, const Regex& right) {
    return Regex(make_node({RegexNode::Kind::Concat, 0, left.root_ptr(), right.root_ptr()}));
}

Regex Regex::alt(const Regex& left, const Regex& right) {
    return Regex(make_node({RegexNode::Kind::Alt, 0, left.root_ptr(), right.root_ptr()}));
}

Regex Regex::star(const Regex& inner) {
    return Regex(make_node({RegexNode::Kind::Star, 0, inner.root_ptr(), nullptr}));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Literal, Eps, Alt, LParen, RParen, Star, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '|': tokens.push_back({Token::Kind::Alt, "|", i}); ++i; continue;
            case '(': tokens.push_back({Token::Kind::LParen, "(", i}); ++i; continue;
            case ')': tokens.push_back({Token::Kind::RParen, ")", i}); ++i; continue;
            case '*': tokens.push_back({Token::Kind::Star, "*", i}); ++i; continue;
            case '.':
                throw ParseError("pattern position " + std::to_string(i) +
                                 ": '.' is reserved; concatenation is juxtaposition");
            default: break;
        }
        const std::size_t start = i;
        while (i < text.size()) {
            const char d = text[i];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '|' || d == '(' || d == ')' ||
                d == '*' || d == '.') {
                break;
            }
            ++i;
        }
        std::string tok(text.substr(start, i - start));
        if (tok == "eps") {
            tokens.push_back({Token::Kind::Eps, std::move(tok), start});
        } else {
            tokens.push_back({Token::Kind::Literal, std::move(tok), start});
        }
    }
    tokens.push_back({Token::Kind::End, "", text.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const SymbolTable& alphabet)
        : tokens_(std::move(tokens)), alphabet_(alphabet) {}

    Regex parse() {
        if (peek().kind == Token::Kind::End) throw ParseError("pattern is empty");
        Regex result = parse_alt();
        if (peek().kind != Token::Kind::End) {
            throw ParseError("pattern position " + std::to_string(peek().pos) + ": unexpected '" +
                             peek().text + "'");
        }
        return result;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }

    Regex parse_alt() {
        Regex node = parse_concat();
        while (peek().kind == Token::Kind::Alt) {
            advance();
            node = Regex::alt(node, parse_concat());
        }
        return node;
    }

    Regex parse_concat() {
        Regex node = parse_postfix();
        while (starts_atom(peek().kind)) {
            node = Regex::concat(node, parse_postfix());
        }
        return node;
    }

    Regex parse_postfix() {
        Regex node = parse_atom();
        while (peek().kind == Token::Kind::Star) {
            advance();
            node = Regex::star(node);
        }
        return node;
    }

    Regex parse_atom() {
        const Token& token = advance();
        switch (token.kind) {
            case Token::Kind::Eps:
                return Regex::epsilon();
            case Token::Kind::Literal: {
                const auto symbol = alphabet_.find(token.text);
                if (!symbol) throw UnknownSymbolError(token.text, "in pattern");
                return Regex::literal(*symbol);
            }
            case Token::Kind::LParen: {
                Regex inner = parse_alt();
                if (peek().kind != Token::Kind::RParen) {
                    throw ParseError("pattern position " + std::to_string(peek().pos) +
                                     ": expected ')'");
                }
                advance();
                return inner;
            }
            default:
                throw ParseError("pattern position " + std::to_string(token.pos) +
                                 ": unexpected '" + (token.text.empty() ? "end" : token.text) + "'");
        }
    }

    static bool starts_atom(Token::Kind kind) {
        return kind == Token::Kind::Literal || kind == Token::Kind::Eps ||
               kind == Token::Kind::LParen;
    }

    std::vector<Token> tokens_;
    const SymbolTable& alphabet_;
    std::size_t cursor_ = 0;
};

}  // namespace

Regex parse_pattern(std::string_view text, const SymbolTable& alphabet) {
    return Parser(tokenize(text), alphabet).parse();
}

// ---------------------------------------------------------------------------
// Matching / sampling / enumeration
// ---------------------------------------------------------------------------

bool matches(const Regex& regex, std::span<const SymbolIndex> word) {
    return CompiledPattern(regex).matches(word);
}

namespace {

void sample_into(const RegexNode& node, RandomStream& rng, std::uint32_t star_limit, Word& out) {
    switch (node.kind) {
        case RegexNode::Kind::Epsilon:
            return;
        case RegexNode::Kind::Literal:
            out.push_back(node.symbol);
            return;
        case RegexNode::Kind::Concat:
            sample_into(*node.left, rng, star_limit, out);
            sample_into(*node.right, rng, star_limit, out);
            return;
        case RegexNode::Kind::Alt:
            sample_into(rng.uniform(2) == 0 ? *node.left : *node.right, rng, star_limit, out);
            return;
        case RegexNode::Kind::Star: {
            const std::uint32_t repetitions = rng.uniform(star_limit + 1);
            for (std::uint32_t i = 0; i < repetitions; ++i) {
                sample_into(*node.left, rng, star_limit, out);
            }
            return;
        }
    }
}

using WordSet = std::set<Word>;

class Enumerator {
public:
    Enumerator(std::size_t max_length, std::size_t cap) : max_length_(max_length), cap_(cap) {}

    WordSet run(const RegexNode& node) { return enumerate(node, max_length_); }

private:
    WordSet enumerate(const RegexNode& node, std::size_t budget) {
        switch (node.kind) {
            case RegexNode::Kind::Epsilon:
                return {Word{}};
            case RegexNode::Kind::Literal:
                if (budget < 1) return {};
                return {Word{node.symbol}};
            case RegexNode::Kind::Alt: {
                WordSet result = enumerate(*node.left, budget);
                for (auto& w : enumerate(*node.right, budget)) {
                    insert(result, std::move(w));
                }
                return result;
            }
            case RegexNode::Kind::Concat: {
                const WordSet lefts = enumerate(*node.left, budget);
                WordSet result;
                // Group right-side enumerations by the remaining budget so the
                // recursion runs once per distinct left length.
                std::map<std::size_t, WordSet> rights;
                for (const auto& u : lefts) {
                    const std::size_t remaining = budget - u.size();
                    auto it = rights.find(remaining);
                    if (it == rights.end()) {
                        it = rights.emplace(remaining, enumerate(*node.right, remaining)).first;
                    }
                    for (const auto& v : it->second) {
                        Word w = u;
                        w.insert(w.end(), v.begin(), v.end());
                        insert(result, std::move(w));
                    }
                }
                return result;
            }
            case RegexNode::Kind::Star: {
                const WordSet inner = enumerate(*node.left, budget);
                WordSet result{Word{}};
                WordSet frontier{Word{}};
                while (!frontier.empty()) {
                    WordSet next;
                    for (const auto& u : frontier) {
                        for (const auto& v : inner) {
                            if (v.empty() || u.size() + v.size() > budget) continue;
                            Word w = u;
                            w.insert(w.end(), v.begin(), v.end());
                            if (!result.contains(w)) {
                                insert(result, w);
                                next.insert(std::move(w));
                            }
                        }
                    }
                    frontier = std::move(next);
                }
                return result;
            }
        }
        return {};
    }

    void insert(WordSet& set, Word word) {
        set.insert(std::move(word));
        if (set.size() > cap_) {
            throw CapExceededError("language enumeration exceeded the cap of " +
                                   std::to_string(cap_) + " words");
        }
    }

    std::size_t max_length_;
    std::size_t cap_;
};

}  // namespace

Word sample_word(const Regex& regex, RandomStream& rng, std::uint32_t star_limit) {
    Word out;
    sample_into(regex.root(), rng, star_limit, out);
    return out;
}

std::vector<Word> enumerate_language(const Regex& regex, std::size_t max_length, std::size_t cap) {
    WordSet words = Enumerator(max_length, cap).run(regex.root());
    return {std::make_move_iterator(words.begin()), std::make_move_iterator(words.end())};
}

// ---------------------------------------------------------------------------
// Classification / metrics
// ---------------------------------------------------------------------------

namespace {

struct LanguageShape {
    bool has_nonempty_word;  // some word of length >= 1
    bool infinite;
};

// Every node denotes a non-empty language (there is no empty-language
// construct), so a star pumps exactly when its inner language contains a
// non-empty word.
LanguageShape shape_of(const RegexNode& node) {
    switch (node.kind) {
        case RegexNode::Kind::Epsilon:
            return {false, false};
        case RegexNode::Kind::Literal:
            return {true, false};
        case RegexNode::Kind::Concat:
        case RegexNode::Kind::Alt: {
            const auto l = shape_of(*node.left);
            const auto r = shape_of(*node.right);
            return {l.has_nonempty_word || r.has_nonempty_word, l.infinite || r.infinite};
        }
        case RegexNode::Kind::Star: {
            const auto inner = shape_of(*node.left);
            return {inner.has_nonempty_word, inner.infinite || inner.has_nonempty_word};
        }
    }
    return {false, false};
}

void collect_metrics(const RegexNode& node, PatternMetrics& metrics,
                     std::set<SymbolIndex>& literals, std::uint32_t star_nesting) {
    switch (node.kind) {
        case RegexNode::Kind::Epsilon:
            return;
        case RegexNode::Kind::Literal:
            metrics.length += 1;
            literals.insert(node.symbol);
            return;
        case RegexNode::Kind::Concat:
            collect_metrics(*node.left, metrics, literals, star_nesting);
            collect_metrics(*node.right, metrics, literals, star_nesting);
            return;
        case RegexNode::Kind::Alt:
            metrics.length += 1;
            metrics.operator_count += 1;
            collect_metrics(*node.left, metrics, literals, star_nesting);
            collect_metrics(*node.right, metrics, literals, star_nesting);
            return;
        case RegexNode::Kind::Star:
            metrics.length += 1;
            metrics.operator_count += 1;
            metrics.star_depth = std::max(metrics.star_depth, star_nesting + 1);
            collect_metrics(*node.left, metrics, literals, star_nesting + 1);
            return;
    }
}

enum class Level { Alt = 0, Concat = 1, Atom = 2 };

void print_node(const RegexNode& node, const SymbolTable& alphabet, Level level, std::string& out) {
    const bool parens = (node.kind == RegexNode::Kind::Alt && level != Level::Alt) ||
                        ((node.kind == RegexNode::Kind::Concat ||
                          node.kind == RegexNode::Kind::Epsilon) &&
                         level == Level::Atom);
    if (parens) out += "( ";
    switch (node.kind) {
        case RegexNode::Kind::Epsilon:
            out += "eps";
            break;
        case RegexNode::Kind::Literal:
            out += alphabet.name(node.symbol);
            break;
        case RegexNode::Kind::Concat:
            print_node(*node.left, alphabet, Level::Concat, out);
            out += ' ';
            print_node(*node.right, alphabet, Level::Concat, out);
            break;
        case RegexNode::Kind::Alt:
            print_node(*node.left, alphabet, Level::Alt, out);
            out += " | ";
            print_node(*node.right, alphabet, Level::Concat, out);
            break;
        case RegexNode::Kind::Star:
            print_node(*node.left, alphabet, Level::Atom, out);
            out += '*';
            break;
    }
    if (parens) out += " )";
}

}  // namespace

PatternType classify(const Regex& regex) {
    return shape_of(regex.root()).infinite ? PatternType::Infinite : PatternType::Finite;
}

PatternMetrics pattern_metrics(const Regex& regex) {
    PatternMetrics metrics;
    std::set<SymbolIndex> literals;
    collect_metrics(regex.root(), metrics, literals, 0);
    metrics.alphabet_size = static_cast<std::uint32_t>(literals.size());
    return metrics;
}

std::string to_string(const Regex& regex, const SymbolTable& alphabet) {
    std::string out;
    print_node(regex.root(), alphabet, Level::Alt, out);
    return out;
}

}  // namespace logsynth
