#include <random>
#include <set>

#include <gtest/gtest.h>

#include <jsrkit/words.hpp>

#include "oracles.hpp"

using namespace jsrkit;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t r, std::size_t n) {
    std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(r));
    std::vector<Letter> w(n);
    for (auto& x : w) x = letter(rng);
    return Word(r, std::move(w));
}

} // namespace

TEST(Word, ValidatesLetters) {
    EXPECT_THROW(Word(2, {1, 3}), ArgumentError);
    EXPECT_THROW(Word(2, {0}), ArgumentError);
    EXPECT_THROW(Word(2, {}), ArgumentError);
    EXPECT_EQ(Word({1, 3}).alphabet_size(), 3u);
}

TEST(Word, RendersAndParsesCommaSeparated) {
    EXPECT_EQ(to_string(Word(2, {1, 2, 2})), "1,2,2");
    EXPECT_EQ(parse_word("1, 2,2"), Word(2, {1, 2, 2}));
    EXPECT_THROW(parse_word("1,,2"), ParseError);
    EXPECT_THROW(parse_word("1,x"), ParseError);
    EXPECT_THROW(parse_word(""), ParseError);
    EXPECT_THROW(parse_word("1,3", 2), ArgumentError);
}

TEST(RotationEquivalent, Basic) {
    EXPECT_TRUE(rotation_equivalent(Word(2, {1, 2}), Word(2, {2, 1})));
    EXPECT_FALSE(rotation_equivalent(Word(2, {1, 1, 2}), Word(2, {1, 2, 2})));
    EXPECT_FALSE(rotation_equivalent(Word(2, {1, 2}), Word(2, {1, 2, 1})));
}

TEST(RotationEquivalent, MatchesAllRotationsOracle) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = len(rng);
        const auto z = random_word(rng, 2, n);
        // half the time compare against a rotation, to hit both outcomes
        const auto w = trial % 2 ? rotate(z, static_cast<std::size_t>(trial) % n) : random_word(rng, 2, n);
        EXPECT_EQ(rotation_equivalent(z, w), oracle::rotation_equivalent_brute(z.letters(), w.letters()));
    }
}

TEST(CanonicalRotation, Examples) {
    EXPECT_EQ(canonical_rotation(Word(2, {2, 1, 2})), Word(2, {1, 2, 2}));
    EXPECT_EQ(canonical_rotation(Word(3, {3, 3, 3})), Word(3, {3, 3, 3}));
    EXPECT_EQ(canonical_rotation(Word(2, {2, 1, 2, 1})), Word(2, {1, 2, 1, 2}));
}

TEST(CanonicalRotation, MatchesBruteForceAndIsInvariant) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> len(1, 12), alpha(1, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = random_word(rng, alpha(rng), len(rng));
        const auto c = canonical_rotation(w);
        EXPECT_EQ(c.letters(), oracle::min_rotation_brute(w.letters()));
        EXPECT_TRUE(rotation_equivalent(w, c));
        EXPECT_EQ(canonical_rotation(c), c);
        EXPECT_EQ(canonical_rotation(rotate(w, static_cast<std::size_t>(trial))), c);
    }
}

TEST(IsPrimitive, Examples) {
    EXPECT_FALSE(is_primitive(Word(2, {1, 2, 1, 2})));
    EXPECT_TRUE(is_primitive(Word(2, {1, 2, 2})));
    EXPECT_TRUE(is_primitive(Word(1, {1})));
    EXPECT_FALSE(is_primitive(Word(1, {1, 1})));
}

TEST(IsPrimitive, ExhaustiveAgainstDivisorPeriods) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for_each_word(2, n, [&](const Word& w) {
            EXPECT_EQ(is_primitive(w), oracle::is_primitive_divisors(w.letters())) << to_string(w);
        });
    }
}

TEST(IsPrimitive, RotationInvariant) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = random_word(rng, 2, 6);
        EXPECT_EQ(is_primitive(w), is_primitive(rotate(w, 1 + static_cast<std::size_t>(trial) % 5)));
    }
}

TEST(Power, Concatenates) {
    EXPECT_EQ(power(Word(2, {1, 2}), 2), Word(2, {1, 2, 1, 2}));
    EXPECT_EQ(power(Word(2, {1, 2}), 1), Word(2, {1, 2}));
    EXPECT_EQ(power(Word(1, {1}), 3), Word(1, {1, 1, 1}));
    EXPECT_THROW(power(Word(1, {1}), 0), ArgumentError);
}

TEST(Enumerate, CountsAndOrder) {
    const auto words = enumerate_words(2, 3);
    ASSERT_EQ(words.size(), 8u);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    EXPECT_EQ(enumerate_necklaces(2, 3).size(), 4u);
    EXPECT_EQ(enumerate_words(1, 5).size(), 1u);
    EXPECT_EQ(enumerate_necklaces(1, 5).size(), 1u);
    EXPECT_EQ(enumerate_words(3, 4).size(), 81u);
    EXPECT_EQ(oracle::burnside_necklaces(3, 4), 24u);
    EXPECT_EQ(oracle::necklaces_brute(3, 4), 24u);
    EXPECT_EQ(enumerate_necklaces(3, 4).size(), 24u);
}

TEST(Enumerate, NecklacesAreCanonicalAndDistinctClasses) {
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto necks = enumerate_necklaces(r, n);
            std::set<std::vector<Letter>> seen;
            for (const auto& w : necks) {
                EXPECT_EQ(canonical_rotation(w), w);
                EXPECT_TRUE(seen.insert(w.letters()).second);
            }
            EXPECT_TRUE(std::is_sorted(necks.begin(), necks.end()));
            EXPECT_EQ(necks.size(), oracle::necklaces_brute(r, n));
        }
    }
}

TEST(Enumerate, BudgetIsEnforced) {
    EXPECT_THROW(enumerate_words(2, 10, 1000), BudgetExceeded);
    EXPECT_THROW(enumerate_necklaces(3, 30), BudgetExceeded);
    EXPECT_NO_THROW(enumerate_words(2, 10, 1024));
}
