#include <doctest.h>

#include <stdexcept>

#include "borelres/borel.hpp"
#include "borelres/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace borelres;

namespace {

// Every element's shortest and longest chain length from the bottom, computed
// by walking all maximal chains.
bool ranked_by_enumeration(const LcmLattice& l)
{
    std::vector<std::size_t> lo(l.size(), SIZE_MAX), hi(l.size(), 0);
    auto walk = [&](auto&& self, std::size_t i, std::size_t len) -> void {
        lo[i] = std::min(lo[i], len);
        hi[i] = std::max(hi[i], len);
        for (std::size_t j : l.upper_covers(i))
            self(self, j, len + 1);
    };
    walk(walk, 0, 0);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (lo[i] != hi[i])
            return false;
    return true;
}

}  // namespace

TEST_CASE("lattice of two variables")
{
    auto l = LcmLattice::build(Ms("a, b", 2));
    CHECK(l.elements() == Ms("1, a, b, ab", 2));
    CHECK(l.bottom() == M("1", 2));
    CHECK(l.top() == M("ab", 2));
    CHECK(l.covers().size() == 4);
    CHECK(is_ranked(l).ranked);
}

TEST_CASE("lattice elements are the subset lcms and close under join")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto ideal = random_borel_minimal(2 + seed % 3, 2 + seed % 2, 2, seed);
        if (ideal.generators().size() > 14)
            continue;
        auto l = LcmLattice::build(ideal.generators());
        CHECK(oracle::as_set(l.elements()) == oracle::subset_lattice(ideal.generators()));
        CHECK(l.size() <= (std::size_t{1} << ideal.generators().size()));
        for (const auto& x : l.elements())
            for (const auto& y : l.elements())
                CHECK(l.contains(oracle::lcm(x, y)));
        for (auto [lo, up] : l.covers()) {
            CHECK(oracle::divides(l.elements()[lo], l.elements()[up]));
            for (const auto& z : l.elements())
                CHECK_FALSE((z != l.elements()[lo] && z != l.elements()[up] &&
                             oracle::divides(l.elements()[lo], z) && oracle::divides(z, l.elements()[up])));
        }
    }
}

TEST_CASE("empty input is rejected")
{
    CHECK_THROWS_AS(LcmLattice::build(std::vector<Monomial>{}), std::invalid_argument);
}

TEST_CASE("single generator")
{
    auto l = LcmLattice::build(Ms("ab^2", 2));
    CHECK(l.size() == 2);
    CHECK(is_ranked(l).ranked);
}

TEST_CASE("equigenerated Borel ideals have ranked lattices")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto ideal = random_borel_minimal(2 + seed % 3, 1 + seed % 4, 3, 500 + seed);
        auto l = LcmLattice::build(ideal.generators());
        auto r = is_ranked(l);
        CHECK(r.ranked);
        CHECK(r.equigenerated);
        CHECK(ranked_by_enumeration(l));
        for (auto [lo, up] : l.covers())
            if (lo != 0)
                CHECK(l.elements()[up].degree() == l.elements()[lo].degree() + 1);
    }
}

TEST_CASE("the mixed-degree example is not ranked")
{
    const auto gens = borel_closure(Ms("ab, ac, ad^2, b^2cd^2", 4));
    CHECK(oracle::as_set(gens) ==
          oracle::as_set(Ms("a^2, ab, b^5, ac, b^4c, b^3c^2, b^2c^3, b^4d, b^3cd, b^2c^2d, ad^2, b^3d^2, b^2cd^2", 4)));
    auto l = LcmLattice::build(gens);
    CHECK(l.size() == 130);
    CHECK(l.covers().size() == 360);

    auto r = is_ranked(l);
    CHECK_FALSE(r.ranked);
    CHECK_FALSE(r.equigenerated);
    CHECK_FALSE(ranked_by_enumeration(l));
    REQUIRE(r.witness_element);
    REQUIRE(r.witness_cover);
    CHECK(*r.witness_element == M("ab^4c", 4));
    const auto& [lo, up] = *r.witness_cover;
    CHECK(lo != M("1", 4));
    CHECK(up.degree() >= lo.degree() + 2);
    CHECK(oracle::divides(up, *r.witness_element));

    const auto abc = l.index_of(M("abc", 4));
    const auto target = l.index_of(M("abcd^2", 4));
    REQUIRE(abc);
    REQUIRE(target);
    const auto& ups = l.upper_covers(*abc);
    CHECK(std::find(ups.begin(), ups.end(), *target) != ups.end());
}

TEST_CASE("natural labelling on the mixed-degree example")
{
    auto l = LcmLattice::build(borel_closure(Ms("ab, ac, ad^2, b^2cd^2", 4)));
    auto report = natural_label_check(l, M("1", 4), M("ab^2cd^2", 4));
    CHECK(report.chains.size() == 7);
    CHECK_FALSE(report.has_decreasing);
    CHECK_FALSE(report.has_increasing);
    for (const auto& c : report.chains) {
        CHECK(c.elements.front() == M("1", 4));
        CHECK(c.elements.back() == M("ab^2cd^2", 4));
        CHECK(c.labels.size() + 1 == c.elements.size());
    }
}

TEST_CASE("natural labelling on (a,b)")
{
    auto l = LcmLattice::build(Ms("a, b", 2));
    auto report = natural_label_check(l, M("1", 2), M("ab", 2));
    REQUIRE(report.chains.size() == 2);
    std::set<std::vector<std::size_t>> labels;
    for (const auto& c : report.chains)
        labels.insert(c.labels);
    CHECK(labels == std::set<std::vector<std::size_t>>{{1, 2}, {2, 1}});
    CHECK(report.has_increasing);
    CHECK(report.has_decreasing);

    auto point = natural_label_check(l, M("a", 2), M("a", 2));
    REQUIRE(point.chains.size() == 1);
    CHECK(point.chains.front().labels.empty());

    CHECK_THROWS_AS(natural_label_check(l, M("a", 2), M("b", 2)), std::invalid_argument);
    CHECK_THROWS_AS(natural_label_check(l, M("1", 2), M("a^2", 2)), std::invalid_argument);
}

TEST_CASE("chain budget")
{
    auto l = LcmLattice::build(borel_closure(Ms("ab, ac, ad^2, b^2cd^2", 4)));
    CHECK_THROWS_AS(natural_label_check(l, l.bottom(), l.top(), 5), std::runtime_error);
}

TEST_CASE("lattice membership from a mixed generating set")
{
    auto l = LcmLattice::build(borel_closure(Ms("x1x3^3, x2^2x3x4", 4)));
    CHECK(l.contains(M("x2^2x3^2x4", 4)));
    CHECK_FALSE(l.contains(M("x2^2x3^3", 4)));
}
