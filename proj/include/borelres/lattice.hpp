#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "borelres/monomial.hpp"

namespace borelres {

/**
 * The lcm-lattice L_I: the bottom element 1 together with the lcm of every
 * nonempty subset of G(I), ordered by divisibility. Elements are stored in
 * canonical order, so the bottom is element 0 and the top is the last one.
 */
class LcmLattice {
public:
    /// Minimalizes gens first; throws std::invalid_argument on empty input.
    static LcmLattice build(std::span<const Monomial> gens);

    std::size_t vars() const noexcept { return n_; }
    const std::vector<Monomial>& atoms() const noexcept { return atoms_; }
    const std::vector<Monomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Monomial& bottom() const { return elements_.front(); }
    const Monomial& top() const { return elements_.back(); }

    bool contains(const Monomial& m) const { return index_of(m).has_value(); }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    /// Index pairs (lower, upper), sorted.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_.at(i); }

private:
    std::size_t n_ = 0;
    std::vector<Monomial> atoms_;
    std::vector<Monomial> elements_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<std::size_t>> up_;
};

struct RankReport {
    bool ranked = true;
    bool equigenerated = true;
    /// First element (canonical order) reached by maximal chains of different lengths.
    std::optional<Monomial> witness_element;
    /// A cover m -> n with m != 1 and deg n >= deg m + 2.
    std::optional<std::pair<Monomial, Monomial>> witness_cover;
};

/**
 * Rankedness of L. For equigenerated atoms the degree criterion applies
 * (every cover above the bottom raises the degree by one). In every case the
 * shortest and longest chain lengths from the bottom are compared per element,
 * which decides whether all maximal chains of every interval agree in length.
 */
RankReport is_ranked(const LcmLattice& lattice);

struct LabeledChain {
    std::vector<Monomial> elements;
    std::vector<std::size_t> labels;  ///< max index of each quotient, bottom-up
};

struct NaturalLabelReport {
    std::vector<LabeledChain> chains;
    bool has_increasing = false;  ///< labels strictly increasing read from m up to n
    bool has_decreasing = false;  ///< labels strictly decreasing read from n down to m
};

/**
 * Enumerates the maximal chains of [m, n] with edges labelled by
 * max(upper / lower). Throws std::invalid_argument unless m and n are
 * elements with m | n, and std::runtime_error past chain_budget chains.
 */
NaturalLabelReport natural_label_check(const LcmLattice& lattice, const Monomial& m, const Monomial& n,
                                       std::size_t chain_budget = 200000);

}  // namespace borelres
