#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borelres/betti.hpp"
#include "borelres/borel.hpp"
#include "borelres/cell_complex.hpp"
#include "borelres/linalg.hpp"

namespace borelres {

/// Nonzero entry of D_i: row is an (i-1)-cell, column an i-cell (positions in the bases).
struct BoundaryEntry {
    std::size_t row;
    std::size_t col;
    int sign;
    Monomial ratio;  ///< m_F / m_F'

    bool operator==(const BoundaryEntry&) const = default;
};

/// The cellular free complex F_X, one basis per homological degree.
struct ChainComplex {
    std::size_t n = 0;
    std::vector<std::vector<CellId>> basis;         ///< basis[i]: cells of dimension i
    std::vector<std::vector<Monomial>> degrees;      ///< labels, parallel to basis
    std::vector<std::vector<BoundaryEntry>> boundary;  ///< boundary[i] = D_i; D_0 is empty
};

/// Throws std::invalid_argument if X has no incidence function.
ChainComplex chain_complex(const LabeledComplex& x);

/// D_{i-1} ∘ D_i = 0 for all i, and the augmentation kills the image of D_1.
bool check_boundary_squared_zero(const ChainComplex& c);

/// Reduced homology; index k holds dim H~_{k-1}.
struct ReducedHomology {
    std::vector<std::size_t> dims;

    bool acyclic() const;
    /// dim H~_i for i >= -1.
    std::size_t at(int i) const;
};

/**
 * Reduced homology of X over the field. The empty complex has H~_{-1} = 1.
 * Complexes without an incidence function get one assigned first.
 */
ReducedHomology homology_dims(const LabeledComplex& x, const Field& field);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::optional<Monomial> degree;      ///< lattice degree for acyclicity checks
    std::vector<std::size_t> homology;   ///< reduced homology at that degree (index k = H~_{k-1})
    std::string detail;
};

struct VerificationReport {
    Field field = Field::rationals();
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Degrees of the failed acyclicity checks, in canonical order.
    std::vector<Monomial> failing_degrees() const;
};

/**
 * Bayer-Sturmfels criterion: ∂² = 0 and X_{⪯b} acyclic for every b ≠ 1 in
 * the lcm-lattice of gens. Throws std::invalid_argument when the vertex labels
 * of X differ from the minimalized gens.
 */
VerificationReport verify_resolution(const LabeledComplex& x, std::span<const Monomial> gens,
                                     const Field& field, unsigned jobs = 1);
VerificationReport verify_resolution(const LabeledComplex& x, const BorelIdeal& ideal,
                                     const Field& field, unsigned jobs = 1);

/// No facet relation joins two cells with the same label.
bool check_minimal(const LabeledComplex& x);

/// A complex that passed verify_resolution and check_minimal.
class CertifiedResolution {
public:
    /// Throws std::runtime_error when a check fails.
    static CertifiedResolution certify(const LabeledComplex& x, std::span<const Monomial> gens,
                                       const Field& field, unsigned jobs = 1);

    const LabeledComplex& complex() const noexcept { return complex_; }
    const VerificationReport& report() const noexcept { return report_; }

private:
    CertifiedResolution(LabeledComplex x, VerificationReport r)
        : complex_(std::move(x)), report_(std::move(r)) {}

    LabeledComplex complex_;
    VerificationReport report_;
};

/// β_{i,b} = number of i-cells labelled b.
BettiTable betti_from_cells(const CertifiedResolution& res);

}  // namespace borelres
