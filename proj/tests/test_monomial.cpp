#include <doctest.h>

#include <random>
#include <stdexcept>

#include "borelres/monomial.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace borelres;

TEST_CASE("lcm is the componentwise max")
{
    CHECK(lcm(M("ab", 3), M("ac", 3)) == M("abc", 3));
    CHECK(lcm(M("b^5c", 3), M("ab^3c^2", 3)) == M("ab^5c^2", 3));
    CHECK(lcm(M("ab^2", 3), M("ab^2", 3)) == M("ab^2", 3));
    CHECK_THROWS_AS(lcm(M("a", 2), M("a", 3)), std::invalid_argument);
}

TEST_CASE("divides")
{
    CHECK(divides(M("ab", 3), M("ab^2c", 3)));
    CHECK_FALSE(divides(M("a^2", 3), M("ab", 3)));
    CHECK(divides(Monomial(3), M("b^2c", 3)));
}

TEST_CASE("max_index")
{
    CHECK(max_index(M("ad^2", 4)) == 4);
    CHECK(max_index(M("a^2", 4)) == 1);
    CHECK(max_index(M("b^2cd^2", 4)) == 4);
    CHECK_THROWS(max_index(Monomial(4)));
}

TEST_CASE("rlex on the worked pairs")
{
    CHECK(rlex_cmp(M("b^5c", 3), M("ab^3c^2", 3)) == std::strong_ordering::greater);
    CHECK(rlex_cmp(M("a^2", 2), M("ab", 2)) == std::strong_ordering::greater);
    CHECK(rlex_cmp(M("ab^2", 3), M("ab^2", 3)) == std::strong_ordering::equal);
    CHECK_THROWS_AS(rlex_cmp(M("a", 2), M("ab", 2)), std::invalid_argument);
}

TEST_CASE("rlex is a strict total order matching the definition (n <= 4, d <= 4)")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint32_t d = 0; d <= 4; ++d) {
            auto slice = oracle::all_of_degree(n, d);
            for (const auto& a : slice)
                for (const auto& b : slice) {
                    const int expected = oracle::rlex(a, b);
                    const auto got = rlex_cmp(a, b);
                    CHECK((got == std::strong_ordering::greater) == (expected > 0));
                    CHECK((got == std::strong_ordering::equal) == (a == b));
                    CHECK_FALSE((rlex_greater(a, b) && rlex_greater(b, a)));
                    CHECK((a == b || rlex_greater(a, b) || rlex_greater(b, a)));
                }
            // transitivity through sorting: the sorted slice is a chain
            auto sorted = monomials_of_degree(n, d);
            CHECK(sorted.size() == slice.size());
            for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
                for (std::size_t j = i + 1; j < sorted.size(); ++j)
                    CHECK(oracle::rlex(sorted[i], sorted[j]) > 0);
        }
}

TEST_CASE("rlex-descending listing of (a,b,c)^2")
{
    CHECK(monomials_of_degree(3, 2) == Ms("a^2, ab, b^2, ac, bc, c^2", 3));
    CHECK(monomials_of_degree(3, VarRange(2, 3), 2) == Ms("b^2, bc, c^2", 3));
}

TEST_CASE("borel moves")
{
    CHECK(borel_move(M("bc", 3), 3, 1) == M("ab", 3));
    CHECK(borel_move(M("x2^2*x3*x4", 4), 4, 3) == M("x2^2*x3^2", 4));
    CHECK(borel_move(M("ab", 2), 2, 1) == M("a^2", 2));
    CHECK_THROWS(borel_move(M("ab", 3), 3, 1));
    CHECK_THROWS(borel_move(M("ab", 3), 1, 2));
    CHECK_THROWS(borel_move(M("ab", 3), 2, 2));
}

TEST_CASE("degree is preserved by every legal move")
{
    for (const auto& m : oracle::all_of_degree(4, 4))
        for (std::size_t t = 2; t <= 4; ++t)
            for (std::size_t s = 1; s < t; ++s)
                if (m[t] > 0)
                    CHECK(borel_move(m, t, s).degree() == m.degree());
}

TEST_CASE("lcm laws on random triples")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = oracle::random_monomial(rng, 4, rng() % 5);
        auto b = oracle::random_monomial(rng, 4, rng() % 5);
        auto c = oracle::random_monomial(rng, 4, rng() % 5);
        CHECK(divides(a, lcm(a, b)));
        CHECK(divides(b, lcm(a, b)));
        CHECK(lcm(a, b) == lcm(b, a));
        CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
        CHECK(lcm(a, a) == a);
        CHECK(lcm(a, b) == oracle::lcm(a, b));
        CHECK(divides(a, b) == oracle::divides(a, b));
    }
}

TEST_CASE("text form")
{
    CHECK(to_string(M("a^2b", 3)) == "a^2*b");
    CHECK(to_string(M("x1^2*x3", 5)) == "x1^2*x3");
    CHECK(to_string(M("a^2b", 3), MonomialStyle::Indexed) == "x1^2*x2");
    CHECK(to_string(Monomial(3)) == "1");
    CHECK(M("1", 3) == Monomial(3));
    CHECK(M(" x1 ^ 2 * x3 ", 3) == M("a^2c", 3));
    CHECK(M("ad^2", 4) == M("a*d^2", 4));
    for (const auto& m : oracle::all_of_degree(5, 3))
        CHECK(parse_monomial(to_string(m), 5) == m);
    CHECK_THROWS_AS(M("e", 4), std::invalid_argument);
    CHECK_THROWS_AS(M("x0", 4), std::invalid_argument);
    CHECK_THROWS_AS(M("a^", 4), std::invalid_argument);
    CHECK_THROWS_AS(M("a**b", 4), std::invalid_argument);
    CHECK_THROWS_AS(M("", 4), std::invalid_argument);
}

TEST_CASE("quotient and product")
{
    CHECK(M("ab^2c", 3) / M("b", 3) == M("abc", 3));
    CHECK_THROWS(M("ab", 3) / M("c", 3));
    CHECK(M("ab", 3) * M("bc", 3) == M("ab^2c", 3));
    CHECK(M("ab^2c", 3).suffix_sum(2) == 3);
    CHECK(M("ab^2c", 3).suffix_sum(4) == 0);
}
