#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "borelres/betti.hpp"
#include "borelres/linalg.hpp"
#include "borelres/monomial.hpp"

namespace borelres {

/// Downward-closed family of subsets of {1..n}, faces as bitmasks (bit i-1 is x_i).
struct SimplicialComplex {
    std::size_t n = 0;
    std::vector<std::uint32_t> faces;  ///< sorted by (size, mask)

    /// No faces at all, not even the empty one.
    bool is_void() const noexcept { return faces.empty(); }
    bool operator==(const SimplicialComplex&) const = default;
};

/// K^b(I) = { squarefree τ ⊆ supp(b) : x^b / x^τ ∈ I }.
SimplicialComplex upper_koszul(std::span<const Monomial> gens, const Monomial& b);

/// Index k holds dim H~_{k-1}; all zero for the void complex.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& k, const Field& field);

/// β_{i,b}(I) = dim H~_{i-1}(K^b(I)) for each b in degrees.
BettiTable betti_via_koszul(std::span<const Monomial> gens, std::span<const Monomial> degrees,
                            const Field& field, unsigned jobs = 1);

/// Minimal generators of (A) ∩ (B): the pairwise lcms, minimalized.
std::vector<Monomial> brute_intersection(std::span<const Monomial> a, std::span<const Monomial> b);

}  // namespace borelres
