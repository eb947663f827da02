#pragma once

#include <cstdint>

#include "borelres/borel.hpp"
#include "borelres/cell_complex.hpp"

namespace borelres {

/**
 * P_d(x_lo, ..., x_hi): the polyhedral subdivision of the simplex on
 * x_lo^d, ..., x_hi^d whose vertices are all degree-d monomials in the range.
 *
 * Built by P_1 = simplex and
 *   P_{d+1}(x_lo..x_hi) = ∪_{k=lo..hi} Δ(x_lo..x_k) × P_d(x_k..x_hi),
 * memoized on (range, degree). Incidence is assigned on the result.
 */
LabeledComplex build_P(std::size_t n, VarRange range, std::uint64_t d);

/**
 * Q(m) for the principal Borel ideal <m>, via the decomposition
 * <m> = Σ_i N_i (x_i..x_{λ_s})^{d_s}: Q(m) = ∪_i Q(N_i) × P_{d_s}(x_i..x_{λ_s}).
 * Base cases: s = 1 gives P_{d_1}(x_1..x_{λ_1}); λ_{s-1} = 1 gives
 * P_{d_2}(x_1..x_{λ_2}) with every label scaled by x_1^{d_1}.
 */
LabeledComplex build_Q_principal(const Monomial& m);

/// Q(m_1, ..., m_s) = Q(m_1) ∪ ... ∪ Q(m_s).
LabeledComplex build_Q_union(const BorelIdeal& ideal);

/// The cells of P_d(x_1..x_n) all of whose vertices lie in G(I).
LabeledComplex extract_Q(const BorelIdeal& ideal);

}  // namespace borelres
