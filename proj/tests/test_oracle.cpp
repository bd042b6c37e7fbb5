#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordo/algebra.hpp"
#include "ordo/oracle.hpp"

using namespace ordo;

namespace {

Word word_of(std::size_t length, std::uint32_t bits) {
    std::vector<Letter> ls(length);
    for (std::size_t i = 0; i < length; ++i) {
        ls[i] = (bits >> i & 1) ? Letter::Creator : Letter::Annihilator;
    }
    return Word(std::move(ls));
}

}  // namespace

TEST_CASE("rewriting golden cases") {
    CHECK(rewrite_normal(Word::parse("aA")) == NormalForm{{{1, 1}, 1}, {{0, 0}, 1}});
    CHECK(rewrite_normal(Word::parse("Aa")) == NormalForm{{{1, 1}, 1}});
    CHECK(rewrite_normal(Word()) == NormalForm::identity());
    CHECK(rewrite_normal(Word::parse("aAaAAAaAa")) ==
          NormalForm{{{5, 4}, 1}, {{4, 3}, 10}, {{3, 2}, 23}, {{2, 1}, 9}});
}

TEST_CASE("rewriting is strategy independent") {
    for (std::size_t length = 0; length <= 10; ++length) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << length); ++bits) {
            const Word w = word_of(length, bits);
            REQUIRE(rewrite_normal(w, 10, RewriteStrategy::Leftmost) ==
                    rewrite_normal(w, 10, RewriteStrategy::Rightmost));
        }
    }
}

TEST_CASE("rewriting agrees with the rook route") {
    for (std::size_t length = 0; length <= 11; ++length) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << length); ++bits) {
            const Word w = word_of(length, bits);
            REQUIRE(rewrite_normal(w, 11) == normal_order_word(w));
        }
    }
}

TEST_CASE("the length limit is enforced") {
    const Word w = word_of(21, 0x155555);
    CHECK_THROWS_AS(rewrite_normal(w), std::length_error);
    CHECK_THROWS_WITH(rewrite_normal(w),
                      Catch::Matchers::ContainsSubstring("word length 21 exceeds limit 20"));
    CHECK_NOTHROW(rewrite_normal(w, 21));
}

TEST_CASE("rewrite stats count work done") {
    RewriteStats stats;
    rewrite_normal(Word::parse("Aa"), 20, RewriteStrategy::Leftmost, &stats);
    CHECK(stats.steps == 0);
    CHECK(stats.peak_terms == 1);

    rewrite_normal(Word::parse("aA"), 20, RewriteStrategy::Leftmost, &stats);
    CHECK(stats.steps == 1);
    CHECK(stats.peak_terms == 2);

    rewrite_normal(Word::parse("aAaAAAaAa"), 20, RewriteStrategy::Leftmost, &stats);
    CHECK(stats.steps > 10);
    CHECK(stats.peak_terms > 2);
}

TEST_CASE("action of the generators on monomials") {
    const NormalForm annihilate{{{0, 1}, 1}};
    const NormalForm create{{{1, 0}, 1}};

    CHECK(apply_to_monomial(annihilate, 3) == IntPolynomial{{2, 3}});
    CHECK(apply_to_monomial(annihilate, 0) == IntPolynomial{});
    CHECK(apply_to_monomial(create, 3) == IntPolynomial{{4, 1}});
    CHECK(apply_to_monomial(NormalForm::identity(), 5) == IntPolynomial{{5, 1}});
    CHECK_THROWS_AS(apply_to_monomial(create, -1), std::invalid_argument);
}

TEST_CASE("action golden case for a mixed element") {
    // (A a + I) x^2 = 3 x^2, matching a A applied directly.
    const NormalForm aA = normal_order_word(Word::parse("aA"));
    CHECK(apply_to_monomial(aA, 2) == IntPolynomial{{2, 3}});

    // A^2 a^3 kills degrees below 3 and maps x^3 to 6 x^2.
    const NormalForm mixed{{{2, 3}, 1}};
    CHECK(apply_to_monomial(mixed, 2) == IntPolynomial{});
    CHECK(apply_to_monomial(mixed, 3) == IntPolynomial{{2, 6}});
}

TEST_CASE("applying to a polynomial is linear") {
    const NormalForm x{{{1, 1}, 2}, {{0, 0}, 1}};
    const IntPolynomial p{{0, 5}, {3, -2}};
    const IntPolynomial left = apply_to_polynomial(x, p);
    IntPolynomial expected;
    for (const auto& [degree, c] : p) {
        for (const auto& [e, v] : apply_to_monomial(x, degree)) {
            auto [it, inserted] = expected.try_emplace(e, BigInt(c * v));
            if (!inserted) it->second += c * v;
        }
    }
    CHECK(left == expected);
}

TEST_CASE("the action respects multiplication") {
    // Acting with y then x equals acting with x*y: the representation is a
    // homomorphism, which is what makes equal_by_action a valid oracle.
    const NormalForm x{{{1, 1}, 1}, {{0, 2}, 3}};
    const NormalForm y{{{2, 0}, 1}, {{0, 1}, -2}, {{0, 0}, 1}};
    const NormalForm xy = multiply(x, y);
    for (int m = 0; m <= 8; ++m) {
        const IntPolynomial stepwise = apply_to_polynomial(x, apply_to_monomial(y, m));
        REQUIRE(stepwise == apply_to_monomial(xy, m));
    }
}

TEST_CASE("equal_by_action separates distinct elements") {
    const NormalForm x{{{1, 1}, 1}, {{0, 0}, 1}};
    CHECK(equal_by_action(x, x));
    CHECK(equal_by_action(NormalForm(), NormalForm()));
    CHECK_FALSE(equal_by_action(x, NormalForm{{{1, 1}, 1}}));
    CHECK_FALSE(equal_by_action(NormalForm{{{0, 1}, 1}}, NormalForm{{{1, 0}, 1}}));
    CHECK_FALSE(equal_by_action(NormalForm{{{0, 0}, 1}}, NormalForm{{{0, 0}, 2}}));
}

TEST_CASE("both oracles confirm the rook route on random products") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Word u = word_of(6, static_cast<std::uint32_t>(rng()));
        const Word v = word_of(5, static_cast<std::uint32_t>(rng()));
        const NormalForm by_rook = normal_order_word(u + v);
        const NormalForm by_rewrite = rewrite_normal(u + v, 11);
        REQUIRE(by_rook == by_rewrite);
        REQUIRE(equal_by_action(by_rook, multiply(normal_order_word(u), normal_order_word(v))));
    }
}
