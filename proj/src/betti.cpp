#include "borelres/betti.hpp"

namespace borelres {

void BettiTable::add(std::size_t i, const Monomial& degree, std::size_t count)
{
    if (count == 0)
        return;
    rows_[i][degree] += count;
}

std::size_t BettiTable::at(std::size_t i, const Monomial& degree) const
{
    auto row = rows_.find(i);
    if (row == rows_.end())
        return 0;
    auto it = row->second.find(degree);
    return it == row->second.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const
{
    std::vector<std::size_t> out;
    for (const auto& [i, row] : rows_) {
        if (out.size() <= i)
            out.resize(i + 1, 0);
        for (const auto& [degree, count] : row)
            out[i] += count;
    }
    return trim_zeros(std::move(out));
}

}  // namespace borelres
