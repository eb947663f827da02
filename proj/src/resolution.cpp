#include "borelres/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "borelres/lattice.hpp"
#include "parallel.hpp"

namespace borelres {

ChainComplex chain_complex(const LabeledComplex& x)
{
    if (!x.has_incidence())
        throw std::invalid_argument("chain_complex: complex has no incidence function");
    ChainComplex c;
    c.n = x.vars();
    const int top = x.dimension();
    c.basis.resize(top + 1);
    c.degrees.resize(top + 1);
    c.boundary.resize(top + 1);
    std::vector<std::size_t> position(x.cell_count());
    for (const auto& cell : x.cells()) {
        position[cell.id] = c.basis[cell.dim].size();
        c.basis[cell.dim].push_back(cell.id);
        c.degrees[cell.dim].push_back(cell.label);
    }
    for (const auto& cell : x.cells())
        for (const auto& inc : cell.facets) {
            const Cell& f = x.cell(inc.facet);
            c.boundary[cell.dim].push_back({position[f.id], position[cell.id], inc.sign, cell.label / f.label});
        }
    for (auto& d : c.boundary)
        std::sort(d.begin(), d.end(), [](const BoundaryEntry& a, const BoundaryEntry& b) {
            return std::tie(a.col, a.row) < std::tie(b.col, b.row);
        });
    return c;
}

bool check_boundary_squared_zero(const ChainComplex& c)
{
    // Multidegree consistency of every entry.
    for (std::size_t i = 1; i < c.boundary.size(); ++i)
        for (const auto& e : c.boundary[i])
            if (c.degrees[i - 1][e.row] * e.ratio != c.degrees[i][e.col])
                return false;

    // Augmentation: every edge maps to zero.
    if (c.boundary.size() > 1) {
        std::vector<long> sums(c.basis[1].size(), 0);
        for (const auto& e : c.boundary[1])
            sums[e.col] += e.sign;
        if (std::any_of(sums.begin(), sums.end(), [](long s) { return s != 0; }))
            return false;
    }

    for (std::size_t i = 2; i < c.boundary.size(); ++i) {
        std::map<std::size_t, std::vector<const BoundaryEntry*>> lower_by_col;
        for (const auto& e : c.boundary[i - 1])
            lower_by_col[e.col].push_back(&e);
        std::map<std::pair<std::size_t, std::size_t>, long> product;
        for (const auto& e : c.boundary[i]) {
            auto it = lower_by_col.find(e.row);
            if (it == lower_by_col.end())
                continue;
            for (const BoundaryEntry* f : it->second)
                product[{f->row, e.col}] += static_cast<long>(f->sign) * e.sign;
        }
        for (const auto& [key, value] : product)
            if (value != 0)
                return false;
    }
    return true;
}

bool ReducedHomology::acyclic() const
{
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

std::size_t ReducedHomology::at(int i) const
{
    const std::size_t k = static_cast<std::size_t>(i + 1);
    return i >= -1 && k < dims.size() ? dims[k] : 0;
}

ReducedHomology homology_dims(const LabeledComplex& x, const Field& field)
{
    if (x.empty())
        return {{1}};
    std::optional<LabeledComplex> assigned;
    if (!x.has_incidence())
        assigned = assign_incidence(x);
    const LabeledComplex& signed_x = assigned ? *assigned : x;
    const int top = signed_x.dimension();
    std::vector<std::vector<SparseVector>> chains(top + 2);
    chains[0].push_back({});
    std::vector<std::size_t> position(signed_x.cell_count());
    for (const auto& cell : signed_x.cells()) {
        auto& level = chains[cell.dim + 1];
        position[cell.id] = level.size();
        SparseVector v;
        if (cell.dim == 0)
            v.emplace_back(0, 1);
        for (const auto& inc : cell.facets)
            v.emplace_back(position[inc.facet], inc.sign);
        level.push_back(std::move(v));
    }
    return {reduced_homology(chains, field)};
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<Monomial> VerificationReport::failing_degrees() const
{
    std::vector<Monomial> out;
    for (const auto& c : checks)
        if (!c.passed && c.degree)
            out.push_back(*c.degree);
    return out;
}

VerificationReport verify_resolution(const LabeledComplex& x, std::span<const Monomial> gens,
                                     const Field& field, unsigned jobs)
{
    const auto minimal = minimalize(std::vector<Monomial>(gens.begin(), gens.end()));
    if (minimal != x.vertex_labels())
        throw std::invalid_argument("verify_resolution: vertex labels differ from the generators");

    VerificationReport report;
    report.field = field;

    if (!x.has_incidence()) {
        report.checks.push_back({"incidence", false, std::nullopt, {}, "no incidence function assigned"});
        return report;
    }
    const bool squared_zero = check_boundary_squared_zero(chain_complex(x));
    report.checks.push_back({"boundary_squared_zero", squared_zero, std::nullopt, {}, ""});

    const LcmLattice lattice = LcmLattice::build(minimal);
    const auto& elements = lattice.elements();
    std::vector<CheckResult> acyclic(elements.size() - 1);
    detail::parallel_for(acyclic.size(), jobs, [&](std::size_t k) {
        const Monomial& b = elements[k + 1];
        ReducedHomology h = homology_dims(restrict_to(x, b), field);
        CheckResult& r = acyclic[k];
        r.name = "acyclic";
        r.degree = b;
        r.passed = h.acyclic();
        r.homology = std::move(h.dims);
    });
    for (auto& r : acyclic)
        report.checks.push_back(std::move(r));
    return report;
}

VerificationReport verify_resolution(const LabeledComplex& x, const BorelIdeal& ideal,
                                     const Field& field, unsigned jobs)
{
    return verify_resolution(x, ideal.generators(), field, jobs);
}

bool check_minimal(const LabeledComplex& x)
{
    for (const auto& cell : x.cells())
        for (const auto& inc : cell.facets)
            if (x.cell(inc.facet).label == cell.label)
                return false;
    return true;
}

CertifiedResolution CertifiedResolution::certify(const LabeledComplex& x, std::span<const Monomial> gens,
                                                 const Field& field, unsigned jobs)
{
    VerificationReport report = verify_resolution(x, gens, field, jobs);
    if (!report.passed()) {
        for (const auto& c : report.checks)
            if (!c.passed)
                throw std::runtime_error("not a resolution: check '" + c.name + "' failed" +
                                         (c.degree ? " at " + to_string(*c.degree) : std::string()));
    }
    if (!check_minimal(x))
        throw std::runtime_error("resolution is not minimal");
    return CertifiedResolution(x, std::move(report));
}

BettiTable betti_from_cells(const CertifiedResolution& res)
{
    BettiTable table;
    for (const auto& cell : res.complex().cells())
        table.add(static_cast<std::size_t>(cell.dim), cell.label, 1);
    return table;
}

}  // namespace borelres
