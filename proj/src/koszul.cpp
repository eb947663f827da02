#include "borelres/koszul.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "borelres/borel.hpp"
#include "parallel.hpp"

namespace borelres {

namespace {

bool in_ideal(std::span<const Monomial> gens, const Monomial& m)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

}  // namespace

SimplicialComplex upper_koszul(std::span<const Monomial> gens, const Monomial& b)
{
    const std::size_t n = b.vars();
    if (n > 31)
        throw std::invalid_argument("upper_koszul supports at most 31 variables");
    std::uint32_t support = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (b[i] > 0)
            support |= std::uint32_t{1} << (i - 1);

    SimplicialComplex k;
    k.n = n;
    for (std::uint32_t tau = support;; tau = (tau - 1) & support) {
        std::vector<Exponent> e(b.exponents().begin(), b.exponents().end());
        for (std::size_t i = 0; i < n; ++i)
            if (tau >> i & 1u)
                --e[i];
        if (in_ideal(gens, Monomial(std::move(e))))
            k.faces.push_back(tau);
        if (tau == 0)
            break;
    }
    std::sort(k.faces.begin(), k.faces.end(), [](std::uint32_t x, std::uint32_t y) {
        const int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    return k;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& k, const Field& field)
{
    if (k.is_void())
        return {0};
    std::size_t top = 0;
    for (auto f : k.faces)
        top = std::max<std::size_t>(top, std::popcount(f));
    std::vector<std::vector<SparseVector>> chains(top + 1);
    std::map<std::uint32_t, std::size_t> position;
    for (auto f : k.faces) {
        auto& level = chains[std::popcount(f)];
        position[f] = level.size();
        SparseVector v;
        int j = 0;
        for (std::size_t i = 0; i < k.n; ++i) {
            if (!(f >> i & 1u))
                continue;
            v.emplace_back(position.at(f & ~(std::uint32_t{1} << i)), j % 2 == 0 ? 1 : -1);
            ++j;
        }
        level.push_back(std::move(v));
    }
    return reduced_homology(chains, field);
}

BettiTable betti_via_koszul(std::span<const Monomial> gens, std::span<const Monomial> degrees,
                            const Field& field, unsigned jobs)
{
    std::vector<std::vector<std::size_t>> dims(degrees.size());
    detail::parallel_for(degrees.size(), jobs, [&](std::size_t i) {
        dims[i] = reduced_homology(upper_koszul(gens, degrees[i]), field);
    });
    BettiTable table;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        for (std::size_t k = 0; k < dims[i].size(); ++k)
            table.add(k, degrees[i], dims[i][k]);
    return table;
}

std::vector<Monomial> brute_intersection(std::span<const Monomial> a, std::span<const Monomial> b)
{
    std::vector<Monomial> all;
    for (const auto& x : a)
        for (const auto& y : b)
            all.push_back(lcm(x, y));
    return minimalize(std::move(all));
}

}  // namespace borelres
