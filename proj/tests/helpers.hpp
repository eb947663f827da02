#pragma once

#include <string_view>
#include <vector>

#include "borelres/monomial.hpp"

inline borelres::Monomial M(std::string_view text, std::size_t n)
{
    return borelres::parse_monomial(text, n);
}

inline std::vector<borelres::Monomial> Ms(std::string_view text, std::size_t n)
{
    return borelres::parse_monomial_list(text, n);
}
