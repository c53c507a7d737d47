#include <doctest.h>

#include <algorithm>
#include <set>

#include "logsynth/errors.hpp"
#include "logsynth/matcher.hpp"
#include "logsynth/regex.hpp"
#include "support/oracles.hpp"

using namespace logsynth;

namespace {

SymbolTable xyz_alphabet() {
    SymbolTable table;
    table.add("x");
    table.add("y");
    table.add("z");
    return table;
}

Word word_of(const SymbolTable& table, std::initializer_list<const char*> names) {
    Word word;
    for (const auto* n : names) word.push_back(*table.find(n));
    return word;
}

}  // namespace

TEST_CASE("parsing builds the documented structure") {
    const auto table = xyz_alphabet();

    SUBCASE("x ( y | z )") {
        const auto regex = parse_pattern("x ( y | z )", table);
        const auto& root = regex.root();
        REQUIRE(root.kind == RegexNode::Kind::Concat);
        CHECK(root.left->kind == RegexNode::Kind::Literal);
        CHECK(root.left->symbol == *table.find("x"));
        REQUIRE(root.right->kind == RegexNode::Kind::Alt);
        CHECK(root.right->left->symbol == *table.find("y"));
        CHECK(root.right->right->symbol == *table.find("z"));
    }

    SUBCASE("x* ( y | z ) without spaces around the star") {
        const auto regex = parse_pattern("x*(y|z)", table);
        const auto& root = regex.root();
        REQUIRE(root.kind == RegexNode::Kind::Concat);
        REQUIRE(root.left->kind == RegexNode::Kind::Star);
        CHECK(root.left->left->kind == RegexNode::Kind::Literal);
        CHECK(root.right->kind == RegexNode::Kind::Alt);
    }

    SUBCASE("concatenation is left-associative") {
        const auto regex = parse_pattern("x y z", table);
        const auto& root = regex.root();
        REQUIRE(root.kind == RegexNode::Kind::Concat);
        CHECK(root.left->kind == RegexNode::Kind::Concat);
        CHECK(root.right->kind == RegexNode::Kind::Literal);
    }

    SUBCASE("alternation chains are binary and left-associative") {
        const auto regex = parse_pattern("x | y | z", table);
        const auto& root = regex.root();
        REQUIRE(root.kind == RegexNode::Kind::Alt);
        CHECK(root.left->kind == RegexNode::Kind::Alt);
        CHECK(root.right->kind == RegexNode::Kind::Literal);
    }

    SUBCASE("eps spells the empty word") {
        const auto regex = parse_pattern("eps", table);
        CHECK(regex.root().kind == RegexNode::Kind::Epsilon);
    }
}

TEST_CASE("parse errors") {
    const auto table = xyz_alphabet();
    CHECK_THROWS_AS(parse_pattern("x ( y | w )", table), UnknownSymbolError);
    CHECK_THROWS_AS(parse_pattern("", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("x |", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("| x", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("( x", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("x )", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("()", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("* x", table), ParseError);
    CHECK_THROWS_AS(parse_pattern("x . y", table), ParseError);
}

TEST_CASE("matching is whole-sequence") {
    const auto table = xyz_alphabet();

    const auto finite = parse_pattern("x ( y | z )", table);
    CHECK(matches(finite, word_of(table, {"x", "y"})));
    CHECK(matches(finite, word_of(table, {"x", "z"})));
    CHECK(!matches(finite, word_of(table, {"x", "y", "z"})));
    CHECK(!matches(finite, word_of(table, {"x"})));
    CHECK(!matches(finite, Word{}));

    const auto starred = parse_pattern("x* ( y | z )", table);
    CHECK(matches(starred, word_of(table, {"z"})));  // zero repetitions of x
    CHECK(matches(starred, word_of(table, {"x", "x", "y"})));
    CHECK(!matches(starred, word_of(table, {"y", "x"})));
}

TEST_CASE("sampling stays inside the language and is uniform over branches") {
    const auto table = xyz_alphabet();
    RandomStream rng(11);

    SUBCASE("a literal-only pattern always yields its single word") {
        const auto regex = parse_pattern("x y", table);
        for (int i = 0; i < 50; ++i) {
            CHECK(sample_word(regex, rng, 5) == word_of(table, {"x", "y"}));
        }
    }

    SUBCASE("x ( y | z ) splits close to 50/50 over 10000 draws") {
        const auto regex = parse_pattern("x ( y | z )", table);
        const auto xy = word_of(table, {"x", "y"});
        const auto xz = word_of(table, {"x", "z"});
        std::uint64_t seen_xy = 0;
        const int draws = 10000;
        for (int i = 0; i < draws; ++i) {
            const auto word = sample_word(regex, rng, 5);
            const bool is_xy = word == xy;
            CHECK((is_xy || word == xz));
            if (is_xy) ++seen_xy;
        }
        // 3 sigma around p = 0.5: sqrt(.25/10000) = 0.005
        CHECK(std::abs(static_cast<double>(seen_xy) / draws - 0.5) < 3 * 0.005);
    }

    SUBCASE("x* y with star_limit 2 stays within three words") {
        const auto regex = parse_pattern("x* y", table);
        const std::set<Word> allowed{word_of(table, {"y"}), word_of(table, {"x", "y"}),
                                     word_of(table, {"x", "x", "y"})};
        for (int i = 0; i < 200; ++i) {
            CHECK(allowed.contains(sample_word(regex, rng, 2)));
        }
    }

    SUBCASE("every sampled word matches its pattern") {
        RandomStream gen(123);
        for (int round = 0; round < 80; ++round) {
            const auto regex = test::random_regex(gen, 3, 10);
            for (int i = 0; i < 5; ++i) {
                const auto word = sample_word(regex, gen, 4);
                CAPTURE(round);
                CHECK(matches(regex, word));
            }
        }
    }
}

TEST_CASE("enumeration lists exactly the bounded language") {
    const auto table = xyz_alphabet();

    SUBCASE("x ( y | z ) has the two-word language") {
        const auto words = enumerate_language(parse_pattern("x ( y | z )", table), 20, 1000);
        CHECK(words == std::vector<Word>{word_of(table, {"x", "y"}), word_of(table, {"x", "z"})});
    }

    SUBCASE("x* up to length 3") {
        const auto words = enumerate_language(parse_pattern("x*", table), 3, 1000);
        CHECK(words.size() == 4);  // eps, x, xx, xxx
        CHECK(words[0].empty());
    }

    SUBCASE("x* ( y | z ) up to length 2") {
        const auto words = enumerate_language(parse_pattern("x* ( y | z )", table), 2, 1000);
        const std::set<Word> expected{word_of(table, {"y"}), word_of(table, {"z"}),
                                      word_of(table, {"x", "y"}), word_of(table, {"x", "z"})};
        CHECK(std::set<Word>(words.begin(), words.end()) == expected);
    }

    SUBCASE("the cap trips") {
        CHECK_THROWS_AS(enumerate_language(parse_pattern("( x | y )*", table), 30, 100),
                        CapExceededError);
    }

    SUBCASE("every enumerated word matches") {
        RandomStream gen(321);
        for (int round = 0; round < 60; ++round) {
            const auto regex = test::random_regex(gen, 3, 10);
            for (const auto& word : enumerate_language(regex, 5, 5000)) {
                CHECK(matches(regex, word));
            }
        }
    }
}

TEST_CASE("matcher agrees with the enumerator on random patterns") {
    // All words of length <= 6 over a 3-symbol alphabet, vs enumeration
    // membership; the matcher runs the NFA route, the enumerator the AST
    // route.
    RandomStream gen(555);
    for (int round = 0; round < 40; ++round) {
        const auto regex = test::random_regex(gen, 3, 12);
        const auto words = enumerate_language(regex, 6, 200000);
        const std::set<Word> language(words.begin(), words.end());

        Word word;
        const auto sweep = [&](auto&& self) -> void {
            CAPTURE(round);
            CHECK(matches(regex, word) == language.contains(word));
            if (word.size() == 6) return;
            for (SymbolIndex s = 0; s < 3; ++s) {
                word.push_back(s);
                self(self);
                word.pop_back();
            }
        };
        sweep(sweep);
    }
}

TEST_CASE("classification follows language cardinality") {
    const auto table = xyz_alphabet();
    CHECK(classify(parse_pattern("x ( y | z )", table)) == PatternType::Finite);
    CHECK(classify(parse_pattern("x* ( y | z )", table)) == PatternType::Infinite);
    CHECK(classify(parse_pattern("( eps )* x", table)) == PatternType::Finite);
    CHECK(classify(parse_pattern("( eps | x )*", table)) == PatternType::Infinite);
    CHECK(classify(parse_pattern("( eps ( eps | eps ) )*", table)) == PatternType::Finite);

    SUBCASE("finite patterns stabilize; infinite ones keep growing") {
        RandomStream gen(99);
        int finite_seen = 0;
        int infinite_seen = 0;
        for (int round = 0; round < 120 && (finite_seen < 15 || infinite_seen < 15); ++round) {
            const auto regex = test::random_regex(gen, 2, 8);
            std::size_t previous = 0;
            bool grew_late = false;
            for (std::size_t bound : {8, 12, 16}) {
                const auto count = enumerate_language(regex, bound, 500000).size();
                if (count > previous && bound > 8) grew_late = true;
                previous = count;
            }
            if (classify(regex) == PatternType::Finite) {
                ++finite_seen;
                CHECK(!grew_late);  // fixed point reached by length 8 (<= 8 nodes)
            } else {
                ++infinite_seen;
                CHECK(grew_late);
            }
        }
        CHECK(finite_seen >= 15);
        CHECK(infinite_seen >= 15);
    }
}

TEST_CASE("pattern metrics") {
    SymbolTable table;
    table.add("a");
    table.add("b");
    table.add("c");

    SUBCASE("deeply nested stars") {
        const auto metrics = pattern_metrics(parse_pattern("( ( b* c )* a )* b", table));
        CHECK(metrics.star_depth == 3);
        CHECK(metrics.operator_count == 3);
        CHECK(metrics.alphabet_size == 3);
        CHECK(metrics.length == 7);  // 4 letters + 3 stars
    }

    SUBCASE("a | b") {
        const auto metrics = pattern_metrics(parse_pattern("a | b", table));
        CHECK(metrics.star_depth == 0);
        CHECK(metrics.operator_count == 1);
        CHECK(metrics.alphabet_size == 2);
        CHECK(metrics.length == 3);
    }

    SUBCASE("a* ( b | c )") {
        const auto metrics = pattern_metrics(parse_pattern("a* ( b | c )", table));
        CHECK(metrics.operator_count == 2);
        CHECK(metrics.alphabet_size == 3);
        CHECK(metrics.star_depth == 1);
    }

    SUBCASE("alphabet_size <= length; star_depth is zero exactly without stars") {
        const auto has_star = [](const RegexNode& node, auto&& self) -> bool {
            if (node.kind == RegexNode::Kind::Star) return true;
            if (node.left && self(*node.left, self)) return true;
            return node.right && self(*node.right, self);
        };
        RandomStream gen(777);
        for (int round = 0; round < 100; ++round) {
            const auto regex = test::random_regex(gen, 4, 12);
            const auto metrics = pattern_metrics(regex);
            CHECK(metrics.alphabet_size <= metrics.length);
            CHECK((metrics.star_depth == 0) == !has_star(regex.root(), has_star));
        }
    }
}

TEST_CASE("printing round-trips through the parser") {
    const auto table = xyz_alphabet();
    RandomStream gen(31);
    for (int round = 0; round < 100; ++round) {
        const auto regex = test::random_regex(gen, 3, 12);
        const auto text = to_string(regex, table);
        CAPTURE(text);
        const auto reparsed = parse_pattern(text, table);

        const auto words = enumerate_language(regex, 5, 100000);
        const auto again = enumerate_language(reparsed, 5, 100000);
        CHECK(words == again);
    }
}
