#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "borelres/monomial.hpp"

namespace borelres {

/// Multigraded Betti numbers β_{i,b}; zero entries are never stored.
class BettiTable {
public:
    using Row = std::map<Monomial, std::size_t, CanonicalLess>;

    void add(std::size_t i, const Monomial& degree, std::size_t count);
    std::size_t at(std::size_t i, const Monomial& degree) const;

    /// Σ_b β_{i,b}, up to the last nonzero homological degree.
    std::vector<std::size_t> totals() const;

    const std::map<std::size_t, Row>& rows() const noexcept { return rows_; }

    bool operator==(const BettiTable& other) const { return rows_ == other.rows_; }

private:
    std::map<std::size_t, Row> rows_;
};

/// Drops trailing zeros.
template <typename T>
std::vector<T> trim_zeros(std::vector<T> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

}  // namespace borelres
