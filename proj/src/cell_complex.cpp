#include "borelres/cell_complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace borelres {

// ---------------------------------------------------------------------------
// LabeledComplex

std::optional<CellId> LabeledComplex::find(std::span<const VertexId> vertices) const
{
    auto it = index_.find(std::vector<VertexId>(vertices.begin(), vertices.end()));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<VertexId> LabeledComplex::find_vertex(const Monomial& label) const
{
    auto it = std::lower_bound(vertex_labels_.begin(), vertex_labels_.end(), label, canonical_less);
    if (it == vertex_labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<VertexId>(it - vertex_labels_.begin());
}

std::vector<Monomial> LabeledComplex::vertex_label_set(CellId id) const
{
    std::vector<Monomial> out;
    for (VertexId v : cell(id).vertices)
        out.push_back(vertex_labels_[v]);
    return out;
}

LabeledComplex LabeledComplex::with_incidence(CellId cell_id, CellId facet, int sign) const
{
    LabeledComplex copy(*this);
    for (auto& inc : copy.cells_.at(cell_id).facets) {
        if (inc.facet == facet) {
            inc.sign = sign;
            return copy;
        }
    }
    throw std::invalid_argument("with_incidence: not a facet relation");
}

namespace {

/// Keeps a downward-closed set of cells, renumbering vertices and cells.
LabeledComplex keep_cells(const LabeledComplex& x, const std::vector<bool>& keep, bool incidence)
{
    ComplexBuilder builder(x.vars());
    std::vector<std::size_t> proto(x.cell_count());
    for (const auto& c : x.cells()) {
        if (!keep[c.id])
            continue;
        if (c.dim == 0) {
            proto[c.id] = builder.vertex(x.vertex_labels()[c.vertices.front()]);
            continue;
        }
        std::vector<Incidence> facets;
        for (const auto& f : c.facets) {
            if (!keep[f.facet])
                throw std::logic_error("keep_cells: selection is not downward closed");
            facets.push_back({proto[f.facet], f.sign});
        }
        proto[c.id] = builder.cell(c.dim, std::move(facets));
    }
    return builder.finish(incidence);
}

}  // namespace

LabeledComplex LabeledComplex::without_cell(CellId cell_id) const
{
    if (cell_id >= cells_.size())
        throw std::invalid_argument("without_cell: no such cell");
    for (const auto& c : cells_)
        for (const auto& f : c.facets)
            if (f.facet == cell_id)
                throw std::invalid_argument("without_cell: cell is a face of cell " +
                                            std::to_string(c.id));
    std::vector<bool> keep(cells_.size(), true);
    keep[cell_id] = false;
    return keep_cells(*this, keep, incidence_);
}

bool LabeledComplex::same_cells(const LabeledComplex& other) const
{
    if (n_ != other.n_ || vertex_labels_ != other.vertex_labels_ ||
        cells_.size() != other.cells_.size())
        return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& a = cells_[i];
        const Cell& b = other.cells_[i];
        if (a.dim != b.dim || a.vertices != b.vertices || a.label != b.label ||
            a.facets.size() != b.facets.size())
            return false;
        for (std::size_t k = 0; k < a.facets.size(); ++k)
            if (a.facets[k].facet != b.facets[k].facet)
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

ComplexBuilder::ProtoId ComplexBuilder::insert(Proto proto)
{
    auto it = by_vertices_.find(proto.vertices);
    if (it != by_vertices_.end()) {
        const Proto& existing = protos_[it->second];
        auto facet_ids = [](const std::vector<Incidence>& fs) {
            std::vector<ProtoId> ids;
            for (const auto& f : fs)
                ids.push_back(f.facet);
            std::sort(ids.begin(), ids.end());
            return ids;
        };
        if (existing.dim != proto.dim || facet_ids(existing.facets) != facet_ids(proto.facets))
            throw std::runtime_error("inconsistent glue: two cells on the same vertex set differ");
        return it->second;
    }
    ProtoId id = protos_.size();
    by_vertices_.emplace(proto.vertices, id);
    protos_.push_back(std::move(proto));
    labels_.emplace_back();
    return id;
}

ComplexBuilder::ProtoId ComplexBuilder::vertex(const Monomial& label)
{
    if (label.vars() != n_)
        throw std::invalid_argument("vertex label " + to_string(label) + " not in " +
                                    std::to_string(n_) + " variables");
    auto it = vertex_by_label_.find(label);
    if (it != vertex_by_label_.end())
        return it->second;
    ProtoId id = protos_.size();
    Proto proto{0, {id}, {}};
    by_vertices_.emplace(proto.vertices, id);
    protos_.push_back(std::move(proto));
    labels_.push_back(label);
    vertex_by_label_.emplace(label, id);
    return id;
}

ComplexBuilder::ProtoId ComplexBuilder::cell(int dim, std::vector<Incidence> facets)
{
    if (dim < 1)
        throw std::invalid_argument("ComplexBuilder::cell: use vertex() for 0-cells");
    if (facets.size() < 2)
        throw std::invalid_argument("ComplexBuilder::cell: a cell needs at least two facets");
    std::set<ProtoId> verts;
    for (const auto& f : facets) {
        if (f.facet >= protos_.size())
            throw std::invalid_argument("ComplexBuilder::cell: dangling facet");
        const Proto& p = protos_[f.facet];
        if (p.dim != dim - 1)
            throw std::invalid_argument("ComplexBuilder::cell: facet of wrong dimension");
        verts.insert(p.vertices.begin(), p.vertices.end());
    }
    std::sort(facets.begin(), facets.end(),
              [](const Incidence& a, const Incidence& b) { return a.facet < b.facet; });
    for (std::size_t i = 1; i < facets.size(); ++i)
        if (facets[i].facet == facets[i - 1].facet)
            throw std::invalid_argument("ComplexBuilder::cell: repeated facet");
    return insert(Proto{dim, std::vector<ProtoId>(verts.begin(), verts.end()), std::move(facets)});
}

void ComplexBuilder::add_complex(const LabeledComplex& x)
{
    if (x.vars() != n_)
        throw std::invalid_argument("add_complex: ambient mismatch");
    std::vector<ProtoId> proto(x.cell_count());
    for (const auto& c : x.cells()) {
        if (c.dim == 0) {
            proto[c.id] = vertex(x.vertex_labels()[c.vertices.front()]);
            continue;
        }
        std::vector<Incidence> facets;
        for (const auto& f : c.facets)
            facets.push_back({proto[f.facet], f.sign});
        proto[c.id] = cell(c.dim, std::move(facets));
    }
}

LabeledComplex ComplexBuilder::finish(bool incidence_valid) const
{
    LabeledComplex out(n_);

    std::vector<ProtoId> vertex_protos;
    for (const auto& [label, id] : vertex_by_label_)
        vertex_protos.push_back(id);
    std::sort(vertex_protos.begin(), vertex_protos.end(),
              [&](ProtoId a, ProtoId b) { return canonical_less(labels_[a], labels_[b]); });
    std::vector<VertexId> vertex_of(protos_.size(), 0);
    for (std::size_t v = 0; v < vertex_protos.size(); ++v) {
        vertex_of[vertex_protos[v]] = v;
        out.vertex_labels_.push_back(labels_[vertex_protos[v]]);
    }

    struct Keyed {
        int dim;
        std::vector<VertexId> vertices;
        ProtoId proto;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(protos_.size());
    for (ProtoId p = 0; p < protos_.size(); ++p) {
        std::vector<VertexId> vs;
        for (ProtoId pv : protos_[p].vertices)
            vs.push_back(vertex_of[pv]);
        std::sort(vs.begin(), vs.end());
        keyed.push_back({protos_[p].dim, std::move(vs), p});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    std::vector<CellId> cell_of(protos_.size(), 0);
    for (std::size_t i = 0; i < keyed.size(); ++i)
        cell_of[keyed[i].proto] = i;

    out.cells_.reserve(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        Cell c;
        c.id = i;
        c.dim = keyed[i].dim;
        c.vertices = std::move(keyed[i].vertices);
        c.label = out.vertex_labels_[c.vertices.front()];
        for (VertexId v : c.vertices)
            c.label = lcm(c.label, out.vertex_labels_[v]);
        for (const auto& f : protos_[keyed[i].proto].facets)
            c.facets.push_back({cell_of[f.facet], f.sign});
        std::sort(c.facets.begin(), c.facets.end(),
                  [](const Incidence& a, const Incidence& b) { return a.facet < b.facet; });
        out.index_.emplace(c.vertices, c.id);
        out.cells_.push_back(std::move(c));
    }
    out.incidence_ = incidence_valid;
    return out;
}

// ---------------------------------------------------------------------------
// Constructors

LabeledComplex simplex(std::span<const Monomial> labels)
{
    if (labels.empty())
        throw std::invalid_argument("simplex: no vertices");
    if (labels.size() > 24)
        throw std::invalid_argument("simplex: too many vertices");
    const std::size_t n = labels.front().vars();
    std::set<Monomial> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size())
        throw std::invalid_argument("simplex: duplicate labels");

    ComplexBuilder builder(n);
    const std::size_t k = labels.size();
    std::vector<ComplexBuilder::ProtoId> proto(std::size_t{1} << k, 0);
    std::vector<std::uint32_t> masks(std::size_t{1} << k);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (std::uint32_t mask : masks) {
        const int size = __builtin_popcount(mask);
        if (size == 0)
            continue;
        if (size == 1) {
            proto[mask] = builder.vertex(labels[static_cast<std::size_t>(__builtin_ctz(mask))]);
            continue;
        }
        std::vector<Incidence> facets;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                facets.push_back({proto[mask & ~(1u << i)], 0});
        proto[mask] = builder.cell(size - 1, std::move(facets));
    }
    return assign_incidence(builder.finish(false));
}

LabeledComplex product(const LabeledComplex& x, const LabeledComplex& y)
{
    if (x.vars() != y.vars())
        throw std::invalid_argument("product: ambient mismatch");
    if (x.empty() || y.empty())
        return LabeledComplex(x.vars());

    std::set<Monomial> products;
    for (const auto& a : x.vertex_labels())
        for (const auto& b : y.vertex_labels())
            products.insert(a * b);
    if (products.size() != x.vertex_count() * y.vertex_count())
        throw std::logic_error("product: vertex label products collide (|G(IJ)| != |G(I)||G(J)|)");

    ComplexBuilder builder(x.vars());
    const std::size_t ny = y.cell_count();
    std::vector<ComplexBuilder::ProtoId> proto(x.cell_count() * ny, 0);
    auto at = [&](CellId a, CellId b) -> ComplexBuilder::ProtoId& { return proto[a * ny + b]; };

    for (const auto& a : x.cells()) {
        for (const auto& b : y.cells()) {
            if (a.dim == 0 && b.dim == 0) {
                at(a.id, b.id) = builder.vertex(x.vertex_labels()[a.vertices.front()] *
                                                y.vertex_labels()[b.vertices.front()]);
                continue;
            }
            std::vector<Incidence> facets;
            for (const auto& f : a.facets)
                facets.push_back({at(f.facet, b.id), f.sign});
            const int parity = (a.dim % 2 == 0) ? 1 : -1;
            for (const auto& f : b.facets)
                facets.push_back({at(a.id, f.facet), parity * f.sign});
            at(a.id, b.id) = builder.cell(a.dim + b.dim, std::move(facets));
        }
    }
    return builder.finish(x.has_incidence() && y.has_incidence());
}

LabeledComplex complex_union(const LabeledComplex& x, const LabeledComplex& y)
{
    if (x.vars() != y.vars())
        throw std::invalid_argument("union: ambient mismatch");
    ComplexBuilder builder(x.vars());
    builder.add_complex(x);
    builder.add_complex(y);
    auto out = builder.finish(false);
    if (auto bad = diamond_violation(out))
        throw std::runtime_error("union breaks the diamond property: " + *bad);
    return out;
}

LabeledComplex scale_labels(const LabeledComplex& x, const Monomial& mu)
{
    if (mu.vars() != x.vars())
        throw std::invalid_argument("scale_labels: ambient mismatch");
    LabeledComplex out(x);
    for (auto& label : out.vertex_labels_)
        label = label * mu;
    for (auto& c : out.cells_)
        c.label = c.label * mu;
    return out;
}

LabeledComplex restrict_to(const LabeledComplex& x, const Monomial& b)
{
    std::vector<bool> keep(x.cell_count());
    for (const auto& c : x.cells())
        keep[c.id] = divides(c.label, b);
    return keep_cells(x, keep, x.has_incidence());
}

LabeledComplex spanned_subcomplex(const LabeledComplex& x, std::span<const Monomial> labels)
{
    std::vector<bool> in_set(x.vertex_count(), false);
    for (const auto& m : labels) {
        auto v = x.find_vertex(m);
        if (!v)
            throw std::invalid_argument("spanned_subcomplex: " + to_string(m) +
                                        " is not a vertex label");
        in_set[*v] = true;
    }
    std::vector<bool> keep(x.cell_count());
    for (const auto& c : x.cells())
        keep[c.id] = std::all_of(c.vertices.begin(), c.vertices.end(),
                                 [&](VertexId v) { return in_set[v]; });
    return keep_cells(x, keep, x.has_incidence());
}

// ---------------------------------------------------------------------------
// Incidence

namespace {

/// For a cell of dim >= 2: ridge id -> the (exactly two) facet positions containing it.
std::map<CellId, std::vector<std::size_t>> ridge_map(const LabeledComplex& x, const Cell& c)
{
    std::map<CellId, std::vector<std::size_t>> ridges;
    for (std::size_t k = 0; k < c.facets.size(); ++k)
        for (const auto& r : x.cell(c.facets[k].facet).facets)
            ridges[r.facet].push_back(k);
    return ridges;
}

int facet_sign(const Cell& c, CellId facet)
{
    for (const auto& f : c.facets)
        if (f.facet == facet)
            return f.sign;
    throw std::logic_error("facet_sign: not a facet");
}

}  // namespace

std::optional<std::string> diamond_violation(const LabeledComplex& x)
{
    for (const auto& c : x.cells()) {
        if (c.dim == 1 && c.facets.size() != 2)
            return "edge " + std::to_string(c.id) + " does not have two endpoints";
        if (c.dim < 2)
            continue;
        for (const auto& [ridge, owners] : ridge_map(x, c))
            if (owners.size() != 2)
                return "cell " + std::to_string(c.id) + " has ridge " + std::to_string(ridge) +
                       " in " + std::to_string(owners.size()) + " facets";
    }
    return std::nullopt;
}

LabeledComplex assign_incidence(const LabeledComplex& x)
{
    if (auto bad = diamond_violation(x))
        throw std::runtime_error("assign_incidence: " + *bad);
    LabeledComplex out(x);
    for (auto& c : out.cells_) {
        if (c.dim == 0)
            continue;
        if (c.dim == 1) {
            // canonical vertex order puts the rlex-greater label first
            c.facets[0].sign = +1;
            c.facets[1].sign = -1;
            continue;
        }
        auto ridges = ridge_map(out, c);
        std::vector<std::vector<std::pair<std::size_t, CellId>>> adjacency(c.facets.size());
        for (const auto& [ridge, owners] : ridges) {
            adjacency[owners[0]].push_back({owners[1], ridge});
            adjacency[owners[1]].push_back({owners[0], ridge});
        }
        std::vector<int> sign(c.facets.size(), 0);
        sign[0] = +1;
        std::deque<std::size_t> queue{0};
        while (!queue.empty()) {
            std::size_t f = queue.front();
            queue.pop_front();
            for (const auto& [g, ridge] : adjacency[f]) {
                if (sign[g] != 0)
                    continue;
                // ε(σ,f)ε(f,τ) + ε(σ,g)ε(g,τ) = 0
                const int ef = facet_sign(out.cells_[c.facets[f].facet], ridge);
                const int eg = facet_sign(out.cells_[c.facets[g].facet], ridge);
                sign[g] = -sign[f] * ef * eg;
                queue.push_back(g);
            }
        }
        if (std::find(sign.begin(), sign.end(), 0) != sign.end())
            throw std::runtime_error("assign_incidence: facet-ridge graph of cell " +
                                     std::to_string(c.id) + " is disconnected");
        for (const auto& [ridge, owners] : ridges) {
            const int ef = facet_sign(out.cells_[c.facets[owners[0]].facet], ridge);
            const int eg = facet_sign(out.cells_[c.facets[owners[1]].facet], ridge);
            if (sign[owners[0]] * ef + sign[owners[1]] * eg != 0)
                throw std::runtime_error("assign_incidence: contradictory constraints in cell " +
                                         std::to_string(c.id));
        }
        for (std::size_t k = 0; k < c.facets.size(); ++k)
            c.facets[k].sign = sign[k];
    }
    out.incidence_ = true;
    return out;
}

std::vector<std::size_t> f_vector(const LabeledComplex& x)
{
    std::vector<std::size_t> f;
    for (const auto& c : x.cells()) {
        if (f.size() <= static_cast<std::size_t>(c.dim))
            f.resize(static_cast<std::size_t>(c.dim) + 1, 0);
        ++f[static_cast<std::size_t>(c.dim)];
    }
    return f;
}

bool is_subcomplex(const LabeledComplex& sub, const LabeledComplex& super)
{
    if (sub.vars() != super.vars())
        return false;
    std::vector<VertexId> vmap;
    for (const auto& label : sub.vertex_labels()) {
        auto v = super.find_vertex(label);
        if (!v)
            return false;
        vmap.push_back(*v);
    }
    for (const auto& c : sub.cells()) {
        std::vector<VertexId> vs;
        for (VertexId v : c.vertices)
            vs.push_back(vmap[v]);
        std::sort(vs.begin(), vs.end());
        auto id = super.find(vs);
        if (!id || super.cell(*id).dim != c.dim)
            return false;
    }
    return true;
}

}  // namespace borelres
