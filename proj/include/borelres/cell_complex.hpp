#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borelres/monomial.hpp"

namespace borelres {

using CellId = std::size_t;
using VertexId = std::size_t;

struct Incidence {
    CellId facet;
    int sign;  ///< +1 or -1; 0 while unassigned

    bool operator==(const Incidence&) const = default;
};

struct Cell {
    CellId id = 0;
    int dim = 0;
    std::vector<VertexId> vertices;  ///< sorted
    Monomial label;                  ///< lcm of the vertex labels
    std::vector<Incidence> facets;   ///< sorted by facet id

    bool operator==(const Cell&) const = default;
};

/**
 * A regular cell complex given as a face poset whose vertices carry distinct
 * monomial labels.
 *
 * Complexes are always held in canonical form: vertices are numbered in
 * canonical monomial order of their labels (degree, then rlex-descending), and
 * cells are numbered by (dim, sorted vertex ids). Vertex v is therefore also
 * cell v. A cell is identified by its vertex set; faces of a cell are exactly
 * the cells whose vertex set is contained in it.
 */
class LabeledComplex {
public:
    LabeledComplex() = default;
    explicit LabeledComplex(std::size_t n) : n_(n) {}

    std::size_t vars() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    int dimension() const noexcept { return cells_.empty() ? -1 : cells_.back().dim; }

    const std::vector<Monomial>& vertex_labels() const noexcept { return vertex_labels_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const Cell& cell(CellId id) const { return cells_.at(id); }

    /// Whether every facet relation carries a coherent sign.
    bool has_incidence() const noexcept { return incidence_; }

    std::optional<CellId> find(std::span<const VertexId> vertices) const;
    std::optional<VertexId> find_vertex(const Monomial& label) const;

    /// Sorted label set of a cell's vertices, in canonical monomial order.
    std::vector<Monomial> vertex_label_set(CellId id) const;

    /// Copy with one facet sign replaced (for fault-injection tests).
    LabeledComplex with_incidence(CellId cell, CellId facet, int sign) const;

    /// Copy without a maximal cell; throws if the cell is a face of another.
    LabeledComplex without_cell(CellId cell) const;

    /// Structural equality: vertex labels, dims, vertex sets, labels, facet ids.
    bool same_cells(const LabeledComplex& other) const;

    bool operator==(const LabeledComplex&) const = default;

private:
    friend class ComplexBuilder;
    friend LabeledComplex assign_incidence(const LabeledComplex&);
    friend LabeledComplex scale_labels(const LabeledComplex&, const Monomial&);

    std::size_t n_ = 0;
    std::vector<Monomial> vertex_labels_;
    std::vector<Cell> cells_;
    std::map<std::vector<VertexId>, CellId> index_;
    bool incidence_ = false;
};

/**
 * Incremental construction of a complex keyed by vertex labels. Adding a cell
 * whose vertex set is already present is accepted only if it is identical
 * (same dimension and same facet vertex sets); signs of the first copy win.
 */
class ComplexBuilder {
public:
    using ProtoId = std::size_t;

    explicit ComplexBuilder(std::size_t n) : n_(n) {}

    /// Returns the 0-cell for the label, creating it if new.
    ProtoId vertex(const Monomial& label);

    /// Adds a cell of dimension dim >= 1 spanned by the given existing cells' vertices.
    ProtoId cell(int dim, std::vector<Incidence> facets);

    /// Copies every cell of X (identified by vertex labels).
    void add_complex(const LabeledComplex& x);

    /// Produces the canonical complex; incidence flag as given.
    LabeledComplex finish(bool incidence_valid) const;

private:
    struct Proto {
        int dim;
        std::vector<ProtoId> vertices;  // proto ids of 0-cells, sorted
        std::vector<Incidence> facets;  // facet = proto id
    };

    ProtoId insert(Proto proto);

    std::size_t n_;
    std::map<Monomial, ProtoId> vertex_by_label_;
    std::map<std::vector<ProtoId>, ProtoId> by_vertices_;
    std::vector<Proto> protos_;
    std::vector<Monomial> labels_;  // per proto vertex; empty monomial for non-vertices
};

/// Full simplex on distinct labels.
LabeledComplex simplex(std::span<const Monomial> labels);

/// Cartesian product, labels multiplied, tensor-rule incidence signs.
LabeledComplex product(const LabeledComplex& x, const LabeledComplex& y);

/// Union glued along cells with equal vertex-label sets; incidence must be reassigned.
LabeledComplex complex_union(const LabeledComplex& x, const LabeledComplex& y);

/// Every vertex label multiplied by mu.
LabeledComplex scale_labels(const LabeledComplex& x, const Monomial& mu);

/// Cells whose label divides b.
LabeledComplex restrict_to(const LabeledComplex& x, const Monomial& b);

/// Cells all of whose vertex labels lie in the given set; throws on non-vertex labels.
LabeledComplex spanned_subcomplex(const LabeledComplex& x, std::span<const Monomial> labels);

/**
 * Computes an incidence function bottom-up: edges get +1 on the canonically
 * first vertex and -1 on the other; for higher cells the first facet gets +1
 * and signs propagate across ridges so each ridge cancels. Throws
 * std::runtime_error if the diamond property fails, the facet-ridge graph is
 * disconnected, or a constraint is contradicted.
 */
LabeledComplex assign_incidence(const LabeledComplex& x);

/// Cell counts per dimension.
std::vector<std::size_t> f_vector(const LabeledComplex& x);

/// First violation of the diamond property, if any (human-readable).
std::optional<std::string> diamond_violation(const LabeledComplex& x);

/// Every cell of sub (by vertex-label set and dim) occurs in super.
bool is_subcomplex(const LabeledComplex& sub, const LabeledComplex& super);

}  // namespace borelres
