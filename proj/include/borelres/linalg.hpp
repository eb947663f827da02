#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borelres {

/// Coefficient field: exact rationals (default) or integers modulo a prime.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field modular(std::uint64_t p);
    /// `q` or `p:<prime>`.
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return prime_ == 0; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint64_t p) : prime_(p) {}
    std::uint64_t prime_;
};

/// Sparse integer vector: (index, coefficient) pairs with distinct indices.
using SparseVector = std::vector<std::pair<std::size_t, std::int64_t>>;

/// Rank over the field of the span of the given integer vectors.
std::size_t rank(const std::vector<SparseVector>& vectors, const Field& field);

/**
 * Reduced homology of an augmented chain complex. chains[k] lists, for every
 * cell of dimension k-1, its boundary over the cells of dimension k-2; so
 * chains[0] holds the empty face (if present) with an empty boundary.
 * Returns dims with dims[k] = dim H~_{k-1}.
 */
std::vector<std::size_t> reduced_homology(const std::vector<std::vector<SparseVector>>& chains,
                                          const Field& field);

bool is_prime(std::uint64_t p);

}  // namespace borelres
