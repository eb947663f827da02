#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace borelres {

using Exponent = std::uint32_t;

/**
 * A monomial x_1^{a_1} ... x_n^{a_n} in a fixed ambient ring of n variables.
 *
 * Variable indices are 1-based everywhere in the public interface (x1 is the
 * first variable), matching the usual notation; storage is 0-based.
 */
class Monomial {
public:
    Monomial() = default;

    /// The unit monomial 1 in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}

    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    /// x_var^power in n variables (var is 1-based).
    static Monomial power_of(std::size_t n, std::size_t var, Exponent power);

    std::size_t vars() const noexcept { return exps_.size(); }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    /// Exponent of x_var, 1-based.
    Exponent operator[](std::size_t var) const { return exps_.at(var - 1); }

    std::uint64_t degree() const;
    bool is_unit() const;

    /// Sum of exponents of x_var, ..., x_n (1-based); suffix_sum(n+1) == 0.
    std::uint64_t suffix_sum(std::size_t var) const;

    Monomial operator*(const Monomial& other) const;

    /// Exact quotient; throws if other does not divide *this.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    /// Lexicographic on the exponent vector; only for use as a container key.
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// 1 <= lo <= hi <= n; the variables x_lo, ..., x_hi.
struct VarRange {
    std::size_t lo = 1;
    std::size_t hi = 1;

    VarRange() = default;
    VarRange(std::size_t lo_, std::size_t hi_);

    std::size_t size() const noexcept { return hi - lo + 1; }
    bool contains(std::size_t var) const noexcept { return lo <= var && var <= hi; }
    auto operator<=>(const VarRange&) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

/// Largest i with x_i | m. Throws for the unit monomial.
std::size_t max_index(const Monomial& m);

/// Smallest i with x_i | m. Throws for the unit monomial.
std::size_t min_index(const Monomial& m);

/**
 * Reverse-lexicographic comparison of two monomials of equal degree.
 * a is greater (a >_rlex b) iff the rightmost nonzero entry of e(a) - e(b)
 * is negative. Throws std::invalid_argument on a degree mismatch.
 */
std::strong_ordering rlex_cmp(const Monomial& a, const Monomial& b);

/// a >_rlex b.
bool rlex_greater(const Monomial& a, const Monomial& b);

/**
 * Total order used for every deterministic listing of monomials: lower degree
 * first, then rlex-descending within a degree.
 */
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_less(a, b); }
};

/// m / x_t * x_s for 1 <= s < t <= n; requires x_t | m.
Monomial borel_move(const Monomial& m, std::size_t t, std::size_t s);

/// All degree-d monomials in n variables, rlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d);

/// All degree-d monomials in the variables of range (ambient n), rlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, VarRange range, std::uint64_t d);

// ---------------------------------------------------------------------------
// Text form

enum class MonomialStyle {
    Auto,    ///< letters a, b, c, d when n <= 4, indexed otherwise
    Indexed  ///< x1^2*x3
};

std::string to_string(const Monomial& m, MonomialStyle style = MonomialStyle::Auto);
std::string to_string(std::span<const Monomial> ms, MonomialStyle style = MonomialStyle::Auto);

/**
 * Parse `1` or a product of factors `x<i>` / `<letter>` with optional `^<int>`.
 * Letters a..z alias x1..x26; `*` between factors is optional and whitespace
 * is ignored. Throws std::invalid_argument on malformed text or on a variable
 * outside 1..n.
 */
Monomial parse_monomial(std::string_view text, std::size_t n);

/// Comma-separated list of monomials.
std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace borelres
