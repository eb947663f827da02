#include "borelres/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace borelres {

using boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

Field Field::modular(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    if (text == "q" || text == "Q")
        return rationals();
    if (text.size() > 2 && text.substr(0, 2) == "p:") {
        std::uint64_t p = 0;
        auto digits = text.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw std::invalid_argument("bad field '" + std::string(text) + "'");
        return modular(p);
    }
    throw std::invalid_argument("bad field '" + std::string(text) + "' (expected q or p:<prime>)");
}

std::string Field::to_string() const
{
    return is_rational() ? "q" : "p:" + std::to_string(prime_);
}

namespace {

// Incremental row echelon form keyed by leading index. Over Q the rows are
// kept primitive (content 1, positive lead) and combined fraction-free.
class RationalEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, cpp_int>>;

    bool insert(const SparseVector& v)
    {
        Row row;
        for (const auto& [i, c] : v)
            if (c != 0)
                row.emplace_back(i, cpp_int(c));
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                normalize(row);
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = eliminate(row, it->second);
        }
        return false;
    }

private:
    static void normalize(Row& row)
    {
        cpp_int g = 0;
        for (const auto& [i, c] : row)
            g = gcd(g, c);
        if (row.front().second < 0)
            g = -abs(g);
        else
            g = abs(g);
        if (g != 1)
            for (auto& [i, c] : row)
                c /= g;
    }

    // a*row - b*pivot with the shared leading entry cancelled
    static Row eliminate(const Row& row, const Row& pivot)
    {
        const cpp_int a = pivot.front().second;
        const cpp_int b = row.front().second;
        Row out;
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            std::size_t ri = i < row.size() ? row[i].first : SIZE_MAX;
            std::size_t pj = j < pivot.size() ? pivot[j].first : SIZE_MAX;
            cpp_int value;
            std::size_t idx;
            if (ri < pj) {
                idx = ri;
                value = a * row[i++].second;
            }
            else if (pj < ri) {
                idx = pj;
                value = -b * pivot[j++].second;
            }
            else {
                idx = ri;
                value = a * row[i++].second - b * pivot[j++].second;
            }
            if (value != 0)
                out.emplace_back(idx, std::move(value));
        }
        if (!out.empty())
            normalize(out);
        return out;
    }

    std::map<std::size_t, Row> pivots_;
};

class ModularEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;

    explicit ModularEchelon(std::uint64_t p) : p_(p) {}

    bool insert(const SparseVector& v)
    {
        Row row;
        for (const auto& [i, c] : v) {
            std::int64_t r = c % static_cast<std::int64_t>(p_);
            if (r < 0)
                r += static_cast<std::int64_t>(p_);
            if (r != 0)
                row.emplace_back(i, static_cast<std::uint64_t>(r));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const std::uint64_t inv = inverse(row.front().second);
                for (auto& [i, c] : row)
                    c = c * inv % p_;
                pivots_.emplace(row.front().first, std::move(row));
                return true;
            }
            row = eliminate(row, it->second);
        }
        return false;
    }

private:
    std::uint64_t inverse(std::uint64_t a) const
    {
        std::uint64_t result = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    // row - b*pivot, pivot lead is 1
    Row eliminate(const Row& row, const Row& pivot) const
    {
        const std::uint64_t b = row.front().second;
        Row out;
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            std::size_t ri = i < row.size() ? row[i].first : SIZE_MAX;
            std::size_t pj = j < pivot.size() ? pivot[j].first : SIZE_MAX;
            std::uint64_t value;
            std::size_t idx;
            if (ri < pj) {
                idx = ri;
                value = row[i++].second;
            }
            else if (pj < ri) {
                idx = pj;
                value = (p_ - b * pivot[j++].second % p_) % p_;
            }
            else {
                idx = ri;
                value = (row[i++].second + p_ - b * pivot[j++].second % p_) % p_;
            }
            if (value != 0)
                out.emplace_back(idx, value);
        }
        return out;
    }

    std::uint64_t p_;
    std::map<std::size_t, Row> pivots_;
};

}  // namespace

std::size_t rank(const std::vector<SparseVector>& vectors, const Field& field)
{
    std::size_t r = 0;
    if (field.is_rational()) {
        RationalEchelon echelon;
        for (const auto& v : vectors)
            r += echelon.insert(v);
    }
    else {
        ModularEchelon echelon(field.prime());
        for (const auto& v : vectors)
            r += echelon.insert(v);
    }
    return r;
}

std::vector<std::size_t> reduced_homology(const std::vector<std::vector<SparseVector>>& chains,
                                          const Field& field)
{
    std::vector<std::size_t> ranks(chains.size() + 1, 0);
    for (std::size_t k = 1; k < chains.size(); ++k)
        ranks[k] = rank(chains[k], field);
    std::vector<std::size_t> dims(chains.size(), 0);
    for (std::size_t k = 0; k < chains.size(); ++k)
        dims[k] = chains[k].size() - ranks[k] - ranks[k + 1];
    return dims;
}

}  // namespace borelres
