#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "borelres/monomial.hpp"

namespace borelres {

/**
 * A Borel fixed ideal generated in a single degree d.
 *
 * Stores both the Borel-minimal generators (rlex-descending, none lying in
 * the Borel ideal of the others) and the full minimal monomial generating set
 * G(I), also rlex-descending.
 */
class BorelIdeal {
public:
    /// Borel ideal generated (in the Borel sense) by gens; minimalizes the input.
    static BorelIdeal from_borel_generators(std::size_t n, std::span<const Monomial> gens);

    /// Ideal with the explicit minimal generating set gens; throws unless Borel fixed.
    static BorelIdeal from_generating_set(std::size_t n, std::span<const Monomial> gens);

    std::size_t vars() const noexcept { return n_; }
    std::uint64_t degree() const noexcept { return d_; }
    const std::vector<Monomial>& borel_generators() const noexcept { return borel_gens_; }
    const std::vector<Monomial>& generators() const noexcept { return expanded_; }

    /// Membership of a monomial of any degree in the ideal.
    bool contains(const Monomial& m) const;

    bool operator==(const BorelIdeal&) const = default;

private:
    BorelIdeal() = default;

    std::size_t n_ = 0;
    std::uint64_t d_ = 0;
    std::vector<Monomial> borel_gens_;
    std::vector<Monomial> expanded_;
};

/// m = x_{λ_1}^{d_1} ... x_{λ_s}^{d_s} with λ strictly increasing and d_j > 0.
struct PrincipalForm {
    std::size_t n = 0;
    std::vector<std::size_t> lambdas;
    std::vector<Exponent> exps;

    static PrincipalForm of(const Monomial& m);

    std::size_t length() const noexcept { return lambdas.size(); }
    Monomial monomial() const;
};

/// Borel-sense principal membership for equal degrees: c ∈ <m> iff every
/// suffix sum of c is at most the matching suffix sum of m.
bool in_principal_borel(const Monomial& c, const Monomial& m);

/// G(<m>): all degree-d monomials whose suffix sums are bounded by m's.
std::vector<Monomial> expand_principal(const Monomial& m);

/// True iff the equal-degree set is closed under every legal Borel move.
bool is_borel_fixed(std::span<const Monomial> gens);

/// Borel-minimal, rlex-descending sublist generating the same Borel ideal.
std::vector<Monomial> borel_minimalize(std::span<const Monomial> ms);

/**
 * MIN(m1, m2): the degree-d monomial with <m1> ∩ <m2> = <MIN(m1, m2)>.
 * Its suffix sums are the pointwise minima of the inputs' suffix sums.
 */
Monomial min_monomial(const Monomial& m1, const Monomial& m2);

/// <m> ∩ J as a Borel ideal generated by the MIN(m, n_i), minimalized.
BorelIdeal intersect_borel(const Monomial& m, const BorelIdeal& J);

/// One summand N_k · (x_k, ..., x_{λ_s})^{d_s} of the principal decomposition.
struct L4Term {
    Monomial factor;  ///< Borel generator of N_k (the unit when s = 1)
    VarRange range;   ///< (x_k, ..., x_{λ_s})
    Exponent power;   ///< d_s
};

/**
 * Decomposes <m> = Σ_k N_k (x_k..x_{λ_s})^{d_s}, k = 1..λ_{s-1}.
 * For s = 1 the single term is (1, (x_1..x_{λ_1}), d_1); for λ_{s-1} = 1 it is
 * (x_1^{d_1}, (x_1..x_{λ_2}), d_2).
 */
std::vector<L4Term> l4_decompose(const PrincipalForm& pf);

/**
 * Minimal generators of the product of a degree-homogeneous generating set
 * with (x_range)^power. Throws std::logic_error unless |G(IJ)| = |G(I)|·|G(J)|.
 */
std::vector<Monomial> product_with_power(std::span<const Monomial> gens, VarRange range,
                                         Exponent power);

/// β_i = Σ_{m ∈ G(I)} C(max(m) - 1, i) for i = 0..n-1 (trailing zeros kept).
std::vector<std::uint64_t> ek_betti(const BorelIdeal& ideal);

/// Deterministic random ideal: s uniform draws of degree-d monomials, minimalized.
BorelIdeal random_borel_minimal(std::size_t n, std::uint64_t d, std::size_t s, std::uint64_t seed);

/**
 * G(I) for the Borel ideal generated by monomials of possibly different
 * degrees: union of the principal expansions with non-minimal elements
 * removed. Sorted canonically (degree, then rlex-descending).
 */
std::vector<Monomial> borel_closure(std::span<const Monomial> gens);

/// Removes every monomial divisible by another one; canonically sorted, deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> ms);

}  // namespace borelres
