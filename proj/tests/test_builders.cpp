#include <doctest.h>

#include <stdexcept>

#include <random>

#include "borelres/builders.hpp"
#include "borelres/resolution.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace borelres;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

long euler(const LabeledComplex& x)
{
    long chi = 0;
    auto f = f_vector(x);
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
    return chi;
}

bool pure(const LabeledComplex& x, int dim)
{
    std::vector<bool> covered(x.cell_count(), false);
    for (const auto& c : x.cells())
        for (const auto& f : c.facets)
            covered[f.facet] = true;
    for (const auto& c : x.cells())
        if (!covered[c.id] && c.dim != dim)
            return false;
    return true;
}

std::vector<VertexId> ids(const LabeledComplex& x, const char* labels)
{
    std::vector<VertexId> out;
    for (const auto& m : Ms(labels, x.vars()))
        out.push_back(*x.find_vertex(m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("P_1 is the simplex")
{
    auto p = build_P(3, VarRange(1, 3), 1);
    CHECK(f_vector(p) == std::vector<std::size_t>{3, 3, 1});
    CHECK(p.same_cells(simplex(Ms("a, b, c", 3))));
}

TEST_CASE("P_2(a,b) is the path a^2 - ab - b^2")
{
    auto p = build_P(2, VarRange(1, 2), 2);
    CHECK(f_vector(p) == std::vector<std::size_t>{3, 2});
    CHECK(p.find(ids(p, "a^2, ab")).has_value());
    CHECK(p.find(ids(p, "ab, b^2")).has_value());
    CHECK_FALSE(p.find(ids(p, "a^2, b^2")).has_value());
}

TEST_CASE("P_2(a,b,c): two triangles and a square")
{
    auto p = build_P(3, VarRange(1, 3), 2);
    CHECK(f_vector(p) == std::vector<std::size_t>{6, 8, 3});
    auto t1 = p.find(ids(p, "a^2, ab, ac"));
    auto t2 = p.find(ids(p, "ac, bc, c^2"));
    auto sq = p.find(ids(p, "ab, ac, b^2, bc"));
    REQUIRE(t1);
    REQUIRE(t2);
    REQUIRE(sq);
    CHECK(p.cell(*t1).dim == 2);
    CHECK(p.cell(*t2).dim == 2);
    CHECK(p.cell(*sq).dim == 2);
    CHECK(p.cell(*sq).label == M("ab^2c", 3));
    CHECK(p.cell(*sq).facets.size() == 4);
}

TEST_CASE("P_d invariants for n <= 4, d <= 4")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t d = 1; d <= 4; ++d) {
            auto p = build_P(n, VarRange(1, n), d);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(p.vertex_count() == binomial(n + d - 1, n - 1));
            CHECK(p.vertex_labels() == [&] {
                auto v = monomials_of_degree(n, d);
                std::sort(v.begin(), v.end(), CanonicalLess{});
                return v;
            }());
            CHECK(euler(p) == 1);
            CHECK(p.dimension() == static_cast<int>(n) - 1);
            CHECK(pure(p, static_cast<int>(n) - 1));
            CHECK(p.has_incidence());
            CHECK(check_boundary_squared_zero(chain_complex(p)));
            for (std::size_t k = 1; k < n; ++k)
                CHECK(is_subcomplex(build_P(n, VarRange(k + 1, n), d), build_P(n, VarRange(k, n), d)));
        }
    CHECK_THROWS(build_P(3, VarRange(1, 3), 0));
    CHECK_THROWS(build_P(2, VarRange(1, 3), 1));
}

TEST_CASE("Q of a pure power is P")
{
    CHECK(build_Q_principal(M("c^3", 3)).same_cells(build_P(3, VarRange(1, 3), 3)));
    CHECK(build_Q_principal(M("b^2", 4)).same_cells(build_P(4, VarRange(1, 2), 2)));
}

TEST_CASE("Q(a^k x_l^e) scales P")
{
    auto q = build_Q_principal(M("a^2c^2", 3));
    CHECK(q.same_cells(scale_labels(build_P(3, VarRange(1, 3), 2), M("a^2", 3))));
}

TEST_CASE("Q(bc) and Q(bd^2)")
{
    auto q = build_Q_principal(M("bc", 3));
    CHECK(f_vector(q) == std::vector<std::size_t>{5, 6, 2});
    CHECK(q.vertex_labels() == Ms("a^2, ab, b^2, ac, bc", 3));
    auto bd2 = build_Q_principal(M("bd^2", 4));
    CHECK(bd2.vertex_count() == 16);
    CHECK(bd2.vertex_count() == expand_principal(M("bd^2", 4)).size());
}

TEST_CASE("Q(m) equals the extracted subcomplex for every m with n <= 4, d <= 4")
{
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint32_t d = 1; d <= 4; ++d)
            for (const auto& m : oracle::all_of_degree(n, d)) {
                CAPTURE(to_string(m));
                auto q = build_Q_principal(m);
                auto ideal = BorelIdeal::from_borel_generators(n, std::vector<Monomial>{m});
                CHECK(q.same_cells(extract_Q(ideal)));
                CHECK(q.has_incidence());
                CHECK(check_boundary_squared_zero(chain_complex(q)));
                ++count;
            }
    CHECK(count == 121);
}

TEST_CASE("Q of a union")
{
    auto single = BorelIdeal::from_borel_generators(4, Ms("bcd", 4));
    CHECK(build_Q_union(single).same_cells(build_Q_principal(M("bcd", 4))));

    auto two = BorelIdeal::from_borel_generators(3, Ms("ab^3c^2, a^2c^4", 3));
    auto q = build_Q_union(two);
    CHECK(q.same_cells(extract_Q(two)));
    CHECK(q.vertex_labels().size() == two.generators().size());
    std::set<Monomial> united;
    for (const auto& g : two.borel_generators())
        for (const auto& m : expand_principal(g))
            united.insert(m);
    CHECK(oracle::as_set(q.vertex_labels()) == united);
}

TEST_CASE("Q(I) equals extract_Q(I) on random ideals")
{
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const std::uint64_t d = 1 + seed % 4;
        auto ideal = random_borel_minimal(n, d, 3, seed);
        CAPTURE(to_string(ideal.borel_generators()));
        auto q = build_Q_union(ideal);
        CHECK(q.same_cells(extract_Q(ideal)));
        CHECK(check_boundary_squared_zero(chain_complex(q)));
    }
}

TEST_CASE("dim Q + 1 is the resolution length")
{
    for (const char* s : {"bc", "bcd", "c^2d", "ab^2", "d^3"}) {
        const std::size_t n = 4;
        auto ideal = BorelIdeal::from_borel_generators(n, Ms(s, n));
        auto ek = ek_betti(ideal);
        while (!ek.empty() && ek.back() == 0)
            ek.pop_back();
        CHECK(build_Q_union(ideal).dimension() + 1 == static_cast<int>(ek.size()));
    }
}

TEST_CASE("intermediate unions support minimal resolutions")
{
    for (std::uint64_t seed = 300; seed < 312; ++seed) {
        const std::size_t n = 3 + seed % 2;
        auto ideal = random_borel_minimal(n, 2 + seed % 3, 3, seed);
        const auto& gens = ideal.borel_generators();
        CAPTURE(to_string(gens));
        for (std::size_t j = 1; j <= gens.size(); ++j) {
            auto prefix = BorelIdeal::from_borel_generators(
                n, std::vector<Monomial>(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(j)));
            auto x = build_Q_union(prefix);
            CHECK(verify_resolution(x, prefix, Field::rationals()).passed());
            CHECK(check_minimal(x));
        }
    }
}
