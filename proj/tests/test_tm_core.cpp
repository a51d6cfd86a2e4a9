#include <doctest.h>

#include <algorithm>
#include <random>

#include "antipower/errors.hpp"
#include "antipower/tm.hpp"
#include "oracle.hpp"

using namespace antipower;

TEST_CASE("letters come from popcount parity") {
    CHECK(tm::letter_at(1) == Letter::zero);
    CHECK(tm::letter_at(2) == Letter::one);
    CHECK(tm::letter_at(3) == Letter::one);
    CHECK(tm::letter_at(4) == Letter::zero);
    CHECK(tm::letter_at(9) == Letter::one);
    CHECK(tm::prefix(9).str() == "011010011");
    for (std::uint64_t j = 0; j <= 63; ++j)
        CHECK(tm::letter_at(2 * j + 1) == tm::letter_at(j + 1));
}

TEST_CASE("letter doubling identities") {
    // The letters in a mu-image pair differ, the odd one copies its source,
    // and positions 2 and 3 inside each aligned 4-block agree.
    for (std::uint64_t j = 1; j <= (1 << 12); ++j) {
        CHECK(tm::letter_at(2 * j - 1) != tm::letter_at(2 * j));
        CHECK(tm::letter_at(2 * j + 1) == tm::letter_at(j + 1));
        CHECK(tm::letter_at(4 * j + 2) == tm::letter_at(4 * j + 3));
    }
}

TEST_CASE("factor extraction") {
    CHECK(tm::factor({1, 9}).str() == "011010011");
    CHECK(tm::factor({1, 1}).str() == "0");
    CHECK(tm::factor({1, 16}).str() == "0110100110010110");
    CHECK_THROWS_AS(tm::factor({5, 4}), std::domain_error);
    CHECK_THROWS_AS(tm::factor({0, 4}), std::domain_error);

    SUBCASE("offset windows agree with letter_at") {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            std::uint64_t alpha = rng() % 100000 + 1;
            std::uint64_t len = rng() % 300 + 1;
            Word w = tm::factor({alpha, alpha + len - 1});
            REQUIRE(w.size() == len);
            for (std::uint64_t d = 0; d < len; ++d)
                CHECK(w.at(d) == tm::letter_at(alpha + d));
        }
    }
}

TEST_CASE("prefix agrees letterwise with letter_at up to 2^16") {
    constexpr std::uint64_t top = 1 << 16;
    Word big = tm::prefix(top);
    for (std::uint64_t i = 1; i <= top; ++i)
        REQUIRE(big.at(i - 1) == tm::letter_at(i));
    // Every shorter prefix is the corresponding truncation.
    for (std::uint64_t n = 1; n <= top; n += (n < 256 ? 1 : 97)) {
        Word p = tm::prefix(n);
        REQUIRE(p.size() == n);
        REQUIRE(big.ranges_equal(0, 0, n));
        for (std::uint64_t q = 0; q < n; q += 64) {
            unsigned chunk = static_cast<unsigned>(std::min<std::uint64_t>(64, n - q));
            REQUIRE(p.bits_at(q, chunk) == big.bits_at(q, chunk));
        }
    }
}

TEST_CASE("morphisms") {
    CHECK(tm::apply_morphism(MorphismId::mu, Word::from_string("01")).str() == "0110");
    CHECK(tm::apply_morphism(MorphismId::sigma, Word::from_string("0110")).str() == "01");

    Word x = Word::from_string("0");
    for (int i = 0; i < 3; ++i) x = tm::apply_morphism(MorphismId::mu, x);
    CHECK(x.str() == "01101001");

    CHECK_THROWS_AS(tm::apply_morphism(MorphismId::sigma, Word::from_string("001")),
                    std::invalid_argument);
    CHECK_THROWS_AS(tm::apply_morphism(MorphismId::sigma, Word::from_string("0011")),
                    std::invalid_argument);
    CHECK_THROWS_AS(tm::apply_morphism(MorphismId::sigma, Word::from_string("1100")),
                    std::invalid_argument);

    SUBCASE("sigma inverts mu, exhaustively to length 16") {
        for (unsigned len = 0; len <= 16; ++len) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
                Word w;
                for (unsigned b = 0; b < len; ++b)
                    w.push_back(static_cast<Letter>((bits >> b) & 1));
                Word back = tm::apply_morphism(MorphismId::sigma,
                                               tm::apply_morphism(MorphismId::mu, w));
                REQUIRE(back == w);
            }
        }
    }

    SUBCASE("sigma inverts mu, randomized up to length 64") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            unsigned len = 17 + rng() % 48;
            Word w;
            for (unsigned b = 0; b < len; ++b)
                w.push_back(static_cast<Letter>(rng() & 1));
            REQUIRE(tm::apply_morphism(MorphismId::sigma,
                                       tm::apply_morphism(MorphismId::mu, w)) == w);
        }
    }
}

TEST_CASE("a_n and b_n") {
    CHECK(tm::a_n(0).str() == "0");
    CHECK(tm::b_n(0).str() == "1");
    CHECK(tm::a_n(2).str() == "0110");
    CHECK(tm::b_n(3) == tm::a_n(3).complemented());

    SUBCASE("doubling recurrence matches iterated mu up to n = 20") {
        Word image = Word::from_string("0");
        for (unsigned n = 0; n <= 20; ++n) {
            Word direct = tm::a_n(n);
            REQUIRE(direct.size() == (std::uint64_t{1} << n));
            REQUIRE(direct == image);
            if (n < 20) image = tm::apply_morphism(MorphismId::mu, image);
        }
    }
}

TEST_CASE("fact1 block identity, exhaustive n <= 8, r <= 64") {
    CHECK(tm::check_fact1(1, 0));
    CHECK(tm::check_fact1(3, 1));
    for (unsigned n = 1; n <= 8; ++n)
        for (std::uint64_t r = 0; r <= 64; ++r)
            REQUIRE(tm::check_fact1(n, r));
}

TEST_CASE("find_equal_factors") {
    auto pairs = tm::find_equal_factors(3, 9);
    bool found = false;
    for (auto [a, b] : pairs) found = found || (a == 1 && b == 7);
    CHECK(found); // <1,3> = 011 = <7,9>

    CHECK(tm::find_equal_factors(1, 2).empty()); // t_1 != t_2

    for (auto [a, b] : tm::find_equal_factors(5, 200)) CHECK(b - a >= 5);

    SUBCASE("set-equality with the naive scan") {
        for (std::uint64_t m : {1, 2, 3, 5, 8, 13}) {
            auto fast = tm::find_equal_factors(m, 512);
            auto naive = oracle::naive_equal_factor_pairs(m, 512);
            std::sort(naive.begin(), naive.end());
            REQUIRE(fast == naive);
        }
    }
}

TEST_CASE("overlap-freeness at desk scale") {
    // No two equal length-(n+1) factors at distance <= n.
    constexpr std::uint64_t bound = 1 << 13;
    Word pref = tm::prefix(bound);
    for (std::uint64_t n = 1; n <= 64; ++n)
        for (std::uint64_t a = 1; a + n <= bound; ++a)
            for (std::uint64_t b = a + 1; b <= a + n && b + n <= bound; ++b)
                REQUIRE(!pref.ranges_equal(a - 1, b - 1, n + 1));
}

TEST_CASE("cube-freeness spot check") {
    constexpr std::uint64_t bound = 1 << 12;
    Word pref = tm::prefix(bound);
    for (std::uint64_t len = 1; len <= 20; ++len)
        for (std::uint64_t p = 0; p + 3 * len <= bound; ++p)
            REQUIRE(!(pref.ranges_equal(p, p + len, len) &&
                      pref.ranges_equal(p, p + 2 * len, len)));
}

TEST_CASE("packed word basics") {
    Word w;
    CHECK(w.empty());
    w = Word::from_string("0110100110010110");
    CHECK(w.size() == 16);
    CHECK(w.str() == "0110100110010110");
    CHECK(w.complemented().str() == "1001011001101001");
    CHECK(w.complemented().complemented() == w);
    CHECK_THROWS_AS(Word::from_string("01x"), std::invalid_argument);

    SUBCASE("append merges across block boundaries") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            std::string sa, sb;
            for (unsigned i = rng() % 150; i > 0; --i) sa.push_back("01"[rng() & 1]);
            for (unsigned i = rng() % 150; i > 0; --i) sb.push_back("01"[rng() & 1]);
            Word a = Word::from_string(sa);
            a.append(Word::from_string(sb));
            REQUIRE(a.str() == sa + sb);
        }
    }

    SUBCASE("equality is length-then-content") {
        CHECK(Word::from_string("01") != Word::from_string("010"));
        CHECK(Word::from_string("0") != Word());
        CHECK(Word::from_string("0110") == Word::from_string("0110"));
    }
}
