#include "borelres/borel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace borelres {

namespace {

std::uint64_t common_degree(std::span<const Monomial> ms, const char* op)
{
    if (ms.empty())
        throw std::invalid_argument(std::string(op) + ": empty input");
    const std::uint64_t d = ms.front().degree();
    for (const auto& m : ms) {
        if (m.vars() != ms.front().vars())
            throw std::invalid_argument(std::string(op) + ": ambient mismatch");
        if (m.degree() != d)
            throw std::invalid_argument(std::string(op) + ": mixed degrees (" + to_string(m) +
                                        " has degree " + std::to_string(m.degree()) +
                                        ", expected " + std::to_string(d) + ")");
    }
    return d;
}

void sort_rlex_descending(std::vector<Monomial>& ms)
{
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        return rlex_greater(a, b);
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

BorelIdeal BorelIdeal::from_borel_generators(std::size_t n, std::span<const Monomial> gens)
{
    if (gens.empty())
        throw std::invalid_argument("Borel ideal needs at least one generator");
    for (const auto& g : gens)
        if (g.vars() != n)
            throw std::invalid_argument("generator " + to_string(g) + " not in " +
                                        std::to_string(n) + " variables");
    BorelIdeal ideal;
    ideal.n_ = n;
    ideal.d_ = common_degree(gens, "BorelIdeal");
    if (ideal.d_ == 0)
        throw std::invalid_argument("Borel ideal generated by the unit monomial");
    ideal.borel_gens_ = borel_minimalize(gens);
    for (const auto& g : ideal.borel_gens_) {
        auto part = expand_principal(g);
        ideal.expanded_.insert(ideal.expanded_.end(), part.begin(), part.end());
    }
    sort_rlex_descending(ideal.expanded_);
    return ideal;
}

BorelIdeal BorelIdeal::from_generating_set(std::size_t n, std::span<const Monomial> gens)
{
    if (gens.empty())
        throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : gens)
        if (g.vars() != n)
            throw std::invalid_argument("generator " + to_string(g) + " not in " +
                                        std::to_string(n) + " variables");
    common_degree(gens, "BorelIdeal");
    if (!is_borel_fixed(gens))
        throw std::invalid_argument("generating set {" + to_string(gens) +
                                    "} is not Borel fixed");
    BorelIdeal ideal = from_borel_generators(n, gens);
    return ideal;
}

bool BorelIdeal::contains(const Monomial& m) const
{
    if (m.degree() < d_)
        return false;
    return std::any_of(expanded_.begin(), expanded_.end(),
                       [&](const Monomial& g) { return divides(g, m); });
}

PrincipalForm PrincipalForm::of(const Monomial& m)
{
    if (m.is_unit())
        throw std::invalid_argument("PrincipalForm of the unit monomial");
    PrincipalForm pf;
    pf.n = m.vars();
    for (std::size_t i = 1; i <= m.vars(); ++i) {
        if (m[i] > 0) {
            pf.lambdas.push_back(i);
            pf.exps.push_back(m[i]);
        }
    }
    return pf;
}

Monomial PrincipalForm::monomial() const
{
    if (lambdas.empty() || lambdas.size() != exps.size())
        throw std::invalid_argument("malformed PrincipalForm");
    Monomial m(n);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        if (exps[j] == 0 || (j > 0 && lambdas[j] <= lambdas[j - 1]) || lambdas[j] > n)
            throw std::invalid_argument("malformed PrincipalForm");
        m = m * Monomial::power_of(n, lambdas[j], exps[j]);
    }
    return m;
}

bool in_principal_borel(const Monomial& c, const Monomial& m)
{
    if (c.vars() != m.vars())
        throw std::invalid_argument("in_principal_borel: ambient mismatch");
    if (c.degree() != m.degree())
        return false;
    for (std::size_t i = c.vars(); i >= 2; --i)
        if (c.suffix_sum(i) > m.suffix_sum(i))
            return false;
    return true;
}

std::vector<Monomial> expand_principal(const Monomial& m)
{
    if (m.is_unit())
        throw std::invalid_argument("expand_principal: unit monomial");
    // every element lives in x_1..x_max(m)
    auto all = monomials_of_degree(m.vars(), VarRange(1, max_index(m)), m.degree());
    std::vector<Monomial> out;
    for (auto& c : all)
        if (in_principal_borel(c, m))
            out.push_back(std::move(c));
    return out;
}

bool is_borel_fixed(std::span<const Monomial> gens)
{
    if (gens.empty())
        return true;
    common_degree(gens, "is_borel_fixed");
    std::set<Monomial> members(gens.begin(), gens.end());
    for (const auto& m : gens) {
        for (std::size_t t = 2; t <= m.vars(); ++t) {
            if (m[t] == 0)
                continue;
            for (std::size_t s = 1; s < t; ++s)
                if (!members.count(borel_move(m, t, s)))
                    return false;
        }
    }
    return true;
}

std::vector<Monomial> borel_minimalize(std::span<const Monomial> ms)
{
    common_degree(ms, "borel_minimalize");
    std::vector<Monomial> distinct(ms.begin(), ms.end());
    sort_rlex_descending(distinct);
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < distinct.size() && !redundant; ++j)
            redundant = j != i && in_principal_borel(distinct[i], distinct[j]);
        if (!redundant)
            out.push_back(distinct[i]);
    }
    return out;
}

Monomial min_monomial(const Monomial& m1, const Monomial& m2)
{
    if (m1.vars() != m2.vars())
        throw std::invalid_argument("min_monomial: ambient mismatch");
    if (m1.degree() != m2.degree())
        throw std::invalid_argument("min_monomial: degree mismatch between " + to_string(m1) +
                                    " and " + to_string(m2));
    const std::size_t n = m1.vars();
    std::vector<Exponent> mu(n, 0);
    std::uint64_t tail = 0;  // μ_{i+1} + ... + μ_n
    for (std::size_t i = n; i >= 1; --i) {
        std::uint64_t bound = std::min(m1.suffix_sum(i), m2.suffix_sum(i));
        mu[i - 1] = static_cast<Exponent>(bound - tail);
        tail = bound;
    }
    return Monomial(std::move(mu));
}

BorelIdeal intersect_borel(const Monomial& m, const BorelIdeal& J)
{
    if (m.degree() != J.degree())
        throw std::invalid_argument("intersect_borel: degree mismatch");
    std::vector<Monomial> mins;
    for (const auto& g : J.borel_generators())
        mins.push_back(min_monomial(m, g));
    return BorelIdeal::from_borel_generators(J.vars(), mins);
}

std::vector<L4Term> l4_decompose(const PrincipalForm& pf)
{
    const Monomial m = pf.monomial();  // validates
    const std::size_t n = pf.n;
    const std::size_t s = pf.length();
    std::vector<L4Term> terms;
    if (s == 1) {
        terms.push_back({Monomial(n), VarRange(1, pf.lambdas[0]), pf.exps[0]});
        return terms;
    }
    const std::size_t lambda_s = pf.lambdas[s - 1];
    const Exponent d_s = pf.exps[s - 1];
    const std::size_t lambda_prev = pf.lambdas[s - 2];
    // N_k for λ_j < k <= λ_{j+1}, j < s-1, λ_0 = 0
    for (std::size_t k = 1; k <= lambda_prev; ++k) {
        std::size_t j = 0;
        while (pf.lambdas[j] < k)
            ++j;
        // now λ_j (0-based j-1) < k <= λ_{j+1} (0-based j)
        Monomial factor(n);
        for (std::size_t q = 0; q < j; ++q)
            factor = factor * Monomial::power_of(n, pf.lambdas[q], pf.exps[q]);
        Exponent tail = 0;
        for (std::size_t q = j; q + 1 < s; ++q)
            tail += pf.exps[q];
        factor = factor * Monomial::power_of(n, k, tail);
        terms.push_back({std::move(factor), VarRange(k, lambda_s), d_s});
    }
    return terms;
}

std::vector<Monomial> product_with_power(std::span<const Monomial> gens, VarRange range,
                                         Exponent power)
{
    if (gens.empty())
        throw std::invalid_argument("product_with_power: empty generating set");
    const std::size_t n = gens.front().vars();
    auto powers = monomials_of_degree(n, range, power);
    std::vector<Monomial> out;
    out.reserve(gens.size() * powers.size());
    for (const auto& g : gens)
        for (const auto& p : powers)
            out.push_back(g * p);
    const std::size_t expected = out.size();
    sort_rlex_descending(out);
    if (out.size() != expected)
        throw std::logic_error("product_with_power: |G(IJ)| != |G(I)|*|G(J)|");
    return out;
}

std::vector<std::uint64_t> ek_betti(const BorelIdeal& ideal)
{
    std::vector<std::uint64_t> beta(ideal.vars(), 0);
    for (const auto& m : ideal.generators()) {
        const std::uint64_t top = max_index(m) - 1;
        for (std::uint64_t i = 0; i <= top; ++i)
            beta[i] += binomial(top, i);
    }
    return beta;
}

BorelIdeal random_borel_minimal(std::size_t n, std::uint64_t d, std::size_t s, std::uint64_t seed)
{
    if (n == 0 || d == 0 || s == 0)
        throw std::invalid_argument("random_borel_minimal requires n, d, s >= 1");
    const auto pool = monomials_of_degree(n, d);
    std::mt19937_64 rng(seed);
    std::vector<Monomial> draws;
    for (std::size_t i = 0; i < s; ++i)
        draws.push_back(pool[rng() % pool.size()]);
    return BorelIdeal::from_borel_generators(n, draws);
}

std::vector<Monomial> minimalize(std::vector<Monomial> ms)
{
    std::sort(ms.begin(), ms.end(), canonical_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    // canonical order lists lower degrees first, so a divisor is always seen earlier
    for (auto& m : ms) {
        bool divisible = std::any_of(out.begin(), out.end(),
                                     [&](const Monomial& g) { return divides(g, m); });
        if (!divisible)
            out.push_back(std::move(m));
    }
    return out;
}

std::vector<Monomial> borel_closure(std::span<const Monomial> gens)
{
    if (gens.empty())
        throw std::invalid_argument("borel_closure: empty input");
    std::vector<Monomial> all;
    for (const auto& g : gens) {
        auto part = expand_principal(g);
        all.insert(all.end(), part.begin(), part.end());
    }
    return minimalize(std::move(all));
}

}  // namespace borelres
