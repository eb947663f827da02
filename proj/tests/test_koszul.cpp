#include <doctest.h>

#include "borelres/borel.hpp"
#include "borelres/koszul.hpp"
#include "borelres/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace borelres;

namespace {

const Field Q = Field::rationals();

std::vector<Monomial> divisors(const Monomial& top)
{
    std::vector<Monomial> out{Monomial(top.vars())};
    for (std::size_t i = 1; i <= top.vars(); ++i) {
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (Exponent k = 0; k <= top[i]; ++k)
                next.push_back(m * Monomial::power_of(top.vars(), i, k));
        out = std::move(next);
    }
    return out;
}

std::vector<std::size_t> ek_totals(const BorelIdeal& ideal)
{
    auto raw = ek_betti(ideal);
    return trim_zeros(std::vector<std::size_t>(raw.begin(), raw.end()));
}

}  // namespace

TEST_CASE("upper Koszul complexes")
{
    auto k = upper_koszul(Ms("a, b", 2), M("ab", 2));
    CHECK(k.faces == std::vector<std::uint32_t>{0, 1, 2});
    auto point = upper_koszul(Ms("a", 1), M("a", 1));
    CHECK(point.faces == std::vector<std::uint32_t>{0});
    auto none = upper_koszul(Ms("a^2", 2), M("ab", 2));
    CHECK(none.is_void());

    CHECK(reduced_homology(none, Q) == std::vector<std::size_t>{0});
    CHECK(reduced_homology(point, Q) == std::vector<std::size_t>{1});
    CHECK(reduced_homology(k, Q) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("Betti numbers of (a,b)")
{
    auto gens = Ms("a, b", 2);
    auto t = betti_via_koszul(gens, LcmLattice::build(gens).elements(), Q);
    CHECK(t.at(0, M("a", 2)) == 1);
    CHECK(t.at(0, M("b", 2)) == 1);
    CHECK(t.at(1, M("ab", 2)) == 1);
    CHECK(t.totals() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("Betti totals of powers of the maximal ideal")
{
    auto sq3 = BorelIdeal::from_borel_generators(3, Ms("c^2", 3));
    auto t3 = betti_via_koszul(sq3.generators(), LcmLattice::build(sq3.generators()).elements(), Q);
    CHECK(t3.totals() == std::vector<std::size_t>{6, 8, 3});
    CHECK(t3.totals() == ek_totals(sq3));

    auto sq4 = BorelIdeal::from_borel_generators(4, Ms("d^2", 4));
    auto t4 = betti_via_koszul(sq4.generators(), LcmLattice::build(sq4.generators()).elements(), Q);
    CHECK(t4.totals() == std::vector<std::size_t>{10, 20, 15, 4});
    CHECK(t4.totals() == ek_totals(sq4));
}

TEST_CASE("Koszul totals equal the Eliahou-Kervaire count on random ideals")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 2 + seed % 3;
        auto ideal = random_borel_minimal(n, 1 + seed % 4, 3, seed);
        const auto lattice = LcmLattice::build(ideal.generators());
        auto t = betti_via_koszul(ideal.generators(), lattice.elements(), Q);
        CHECK(t.totals() == ek_totals(ideal));
        for (const auto& m : lattice.elements())
            CHECK(t.at(0, m) == (std::find(ideal.generators().begin(), ideal.generators().end(), m) !=
                                 ideal.generators().end()));
    }
}

TEST_CASE("the sufficient degree set does not matter")
{
    for (const char* s : {"bc", "ab^2, c^3", "b^2c"}) {
        auto ideal = BorelIdeal::from_borel_generators(3, Ms(s, 3));
        const auto lattice = LcmLattice::build(ideal.generators());
        auto on_lattice = betti_via_koszul(ideal.generators(), lattice.elements(), Q);
        auto on_box = betti_via_koszul(ideal.generators(), divisors(lattice.top()), Q);
        CHECK(on_lattice == on_box);
    }
}

TEST_CASE("thread count and field do not change the oracle on these ideals")
{
    auto ideal = BorelIdeal::from_borel_generators(4, Ms("b^2d, ac^2", 4));
    const auto degrees = LcmLattice::build(ideal.generators()).elements();
    auto a = betti_via_koszul(ideal.generators(), degrees, Q, 1);
    auto b = betti_via_koszul(ideal.generators(), degrees, Q, 8);
    auto c = betti_via_koszul(ideal.generators(), degrees, Field::modular(32003), 3);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("brute intersection")
{
    auto r = brute_intersection(expand_principal(M("b^5c", 3)), expand_principal(M("ab^3c^2", 3)));
    CHECK(oracle::as_set(r) == oracle::as_set(expand_principal(M("ab^4c", 3))));

    auto a = expand_principal(M("bc^2", 3));
    CHECK(brute_intersection(a, a) == minimalize(a));

    auto j = BorelIdeal::from_borel_generators(4, Ms("a^2b^4cd^2, a^3bc^2d^3", 4));
    auto big = brute_intersection(expand_principal(M("ab^4c^3d", 4)), j.generators());
    auto expected = BorelIdeal::from_borel_generators(4, Ms("a^3b^2c^3d, a^2b^4c^2d", 4));
    CHECK(oracle::as_set(big) == oracle::as_set(expected.generators()));
}
