#include "borelres/builders.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace borelres {

namespace {

class PolyhedralCache {
public:
    explicit PolyhedralCache(std::size_t n) : n_(n) {}

    const LabeledComplex& get(VarRange range, std::uint64_t d)
    {
        auto key = std::make_tuple(range.lo, range.hi, d);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        LabeledComplex built = d == 1 ? simplex_on(range) : recurse(range, d - 1);
        return cache_.emplace(key, std::move(built)).first->second;
    }

private:
    LabeledComplex simplex_on(VarRange range) const
    {
        std::vector<Monomial> labels;
        for (std::size_t i = range.lo; i <= range.hi; ++i)
            labels.push_back(Monomial::power_of(n_, i, 1));
        return simplex(labels);
    }

    LabeledComplex recurse(VarRange range, std::uint64_t d)
    {
        // C'_k = C'_{k-1} ∪ C_k, C_k = Δ(x_lo..x_k) × P_d(x_k..x_hi)
        LabeledComplex acc(n_);
        for (std::size_t k = range.lo; k <= range.hi; ++k) {
            LabeledComplex c_k = product(simplex_on(VarRange(range.lo, k)),
                                         get(VarRange(k, range.hi), d));
            acc = k == range.lo ? std::move(c_k) : complex_union(acc, c_k);
        }
        return assign_incidence(acc);
    }

    std::size_t n_;
    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, LabeledComplex> cache_;
};

LabeledComplex build_Q_with(PolyhedralCache& cache, const Monomial& m)
{
    const PrincipalForm pf = PrincipalForm::of(m);
    const std::size_t n = m.vars();
    const std::size_t s = pf.length();
    if (s == 1)
        return cache.get(VarRange(1, pf.lambdas[0]), pf.exps[0]);
    if (pf.lambdas[s - 2] == 1) {
        return scale_labels(cache.get(VarRange(1, pf.lambdas[1]), pf.exps[1]),
                            Monomial::power_of(n, 1, pf.exps[0]));
    }
    LabeledComplex acc(n);
    bool first = true;
    for (const auto& term : l4_decompose(pf)) {
        LabeledComplex c_i = product(build_Q_with(cache, term.factor), cache.get(term.range, term.power));
        acc = first ? std::move(c_i) : complex_union(acc, c_i);
        first = false;
    }
    return assign_incidence(acc);
}

}  // namespace

LabeledComplex build_P(std::size_t n, VarRange range, std::uint64_t d)
{
    if (d == 0)
        throw std::invalid_argument("build_P requires d >= 1");
    if (range.hi > n)
        throw std::invalid_argument("build_P: range exceeds the ambient ring");
    PolyhedralCache cache(n);
    return cache.get(range, d);
}

LabeledComplex build_Q_principal(const Monomial& m)
{
    if (m.is_unit())
        throw std::invalid_argument("build_Q_principal: unit monomial");
    PolyhedralCache cache(m.vars());
    return build_Q_with(cache, m);
}

LabeledComplex build_Q_union(const BorelIdeal& ideal)
{
    PolyhedralCache cache(ideal.vars());
    LabeledComplex acc(ideal.vars());
    bool first = true;
    for (const auto& g : ideal.borel_generators()) {
        LabeledComplex q = build_Q_with(cache, g);
        acc = first ? std::move(q) : complex_union(acc, q);
        first = false;
    }
    if (ideal.borel_generators().size() > 1)
        acc = assign_incidence(acc);
    if (acc.vertex_count() != ideal.generators().size())
        throw std::logic_error("build_Q_union: vertex set differs from G(I)");
    return acc;
}

LabeledComplex extract_Q(const BorelIdeal& ideal)
{
    auto p = build_P(ideal.vars(), VarRange(1, ideal.vars()), ideal.degree());
    return spanned_subcomplex(p, ideal.generators());
}

}  // namespace borelres
