#include "borelres/lattice.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "borelres/borel.hpp"

namespace borelres {

LcmLattice LcmLattice::build(std::span<const Monomial> gens)
{
    if (gens.empty())
        throw std::invalid_argument("lcm lattice of an empty generator set");
    LcmLattice out;
    out.n_ = gens.front().vars();
    out.atoms_ = minimalize(std::vector<Monomial>(gens.begin(), gens.end()));

    std::set<Monomial, CanonicalLess> seen(out.atoms_.begin(), out.atoms_.end());
    std::vector<Monomial> work(out.atoms_.begin(), out.atoms_.end());
    while (!work.empty()) {
        Monomial m = std::move(work.back());
        work.pop_back();
        for (const auto& g : out.atoms_) {
            Monomial j = lcm(m, g);
            if (seen.insert(j).second)
                work.push_back(std::move(j));
        }
    }
    out.elements_.push_back(Monomial(out.n_));
    out.elements_.insert(out.elements_.end(), seen.begin(), seen.end());

    // Covers: walk the up-set of each element in increasing degree; an element
    // is a cover iff no previously accepted cover divides it.
    const std::size_t size = out.elements_.size();
    out.up_.assign(size, {});
    for (std::size_t i = 0; i < size; ++i) {
        const Monomial& m = out.elements_[i];
        std::vector<std::size_t> ups;
        for (std::size_t j = i + 1; j < size; ++j) {
            const Monomial& n = out.elements_[j];
            if (!divides(m, n))
                continue;
            bool blocked = std::any_of(ups.begin(), ups.end(), [&](std::size_t u) {
                return divides(out.elements_[u], n);
            });
            if (!blocked)
                ups.push_back(j);
        }
        for (std::size_t j : ups)
            out.covers_.emplace_back(i, j);
        out.up_[i] = std::move(ups);
    }
    return out;
}

std::optional<std::size_t> LcmLattice::index_of(const Monomial& m) const
{
    if (m.vars() != n_)
        return std::nullopt;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m, CanonicalLess{});
    if (it == elements_.end() || *it != m)
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

RankReport is_ranked(const LcmLattice& lattice)
{
    RankReport report;
    const auto& atoms = lattice.atoms();
    report.equigenerated = std::all_of(atoms.begin(), atoms.end(), [&](const Monomial& a) {
        return a.degree() == atoms.front().degree();
    });

    const auto& el = lattice.elements();
    const std::size_t size = el.size();
    std::vector<std::size_t> shortest(size, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> longest(size, 0);
    shortest[0] = 0;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j : lattice.upper_covers(i)) {
            shortest[j] = std::min(shortest[j], shortest[i] + 1);
            longest[j] = std::max(longest[j], longest[i] + 1);
        }

    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < size && !witness; ++i)
        if (shortest[i] != longest[i])
            witness = i;
    report.ranked = !witness.has_value();

    auto jump = [&](const std::pair<std::size_t, std::size_t>& c) {
        return c.first != 0 && el[c.second].degree() >= el[c.first].degree() + 2;
    };
    if (witness) {
        report.witness_element = el[*witness];
        // Prefer a degree jump ending at the witness, then any below it.
        const Monomial& w = el[*witness];
        const std::pair<std::size_t, std::size_t>* best = nullptr;
        for (const auto& c : lattice.covers()) {
            if (!jump(c) || !divides(el[c.second], w))
                continue;
            if (!best || (c.second == *witness && best->second != *witness))
                best = &c;
        }
        if (best)
            report.witness_cover = std::make_pair(el[best->first], el[best->second]);
    }
    else if (report.equigenerated) {
        for (const auto& c : lattice.covers())
            if (jump(c)) {
                // Cannot happen for a ranked lattice with uniform atoms.
                report.ranked = false;
                report.witness_cover = std::make_pair(el[c.first], el[c.second]);
                break;
            }
    }
    return report;
}

namespace {

bool strictly_increasing(const std::vector<std::size_t>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            return false;
    return true;
}

bool strictly_decreasing(const std::vector<std::size_t>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1])
            return false;
    return true;
}

}  // namespace

NaturalLabelReport natural_label_check(const LcmLattice& lattice, const Monomial& m, const Monomial& n,
                                       std::size_t chain_budget)
{
    auto lo = lattice.index_of(m);
    auto hi = lattice.index_of(n);
    if (!lo || !hi)
        throw std::invalid_argument("interval endpoints must be lattice elements");
    if (!divides(m, n))
        throw std::invalid_argument("interval [" + to_string(m) + ", " + to_string(n) + "] is empty");

    const auto& el = lattice.elements();
    NaturalLabelReport report;
    std::vector<std::size_t> path{*lo};

    auto emit = [&] {
        if (report.chains.size() >= chain_budget)
            throw std::runtime_error("natural_label_check: chain budget exceeded");
        LabeledChain chain;
        for (std::size_t k = 0; k < path.size(); ++k) {
            chain.elements.push_back(el[path[k]]);
            if (k > 0)
                chain.labels.push_back(max_index(el[path[k]] / el[path[k - 1]]));
        }
        std::vector<std::size_t> top_down(chain.labels.rbegin(), chain.labels.rend());
        report.has_increasing |= strictly_increasing(chain.labels);
        report.has_decreasing |= strictly_decreasing(top_down);
        report.chains.push_back(std::move(chain));
    };

    auto dfs = [&](auto&& self, std::size_t at) -> void {
        if (at == *hi) {
            emit();
            return;
        }
        for (std::size_t up : lattice.upper_covers(at)) {
            if (!divides(el[up], n))
                continue;
            path.push_back(up);
            self(self, up);
            path.pop_back();
        }
    };
    dfs(dfs, *lo);
    return report;
}

}  // namespace borelres
