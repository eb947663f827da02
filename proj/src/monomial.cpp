#include "borelres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace borelres {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b, const char* op)
{
    if (a.vars() != b.vars())
        throw std::invalid_argument(std::string(op) + ": ambient mismatch (" +
                                    std::to_string(a.vars()) + " vs " +
                                    std::to_string(b.vars()) + " variables)");
}

Exponent checked_add(Exponent a, Exponent b)
{
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

void enumerate_degree(std::size_t lo, std::size_t hi, std::uint64_t remaining,
                      std::vector<Exponent>& exps, std::vector<Monomial>& out)
{
    if (lo == hi) {
        exps[lo - 1] = static_cast<Exponent>(remaining);
        out.emplace_back(exps);
        exps[lo - 1] = 0;
        return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
        exps[hi - 1] = static_cast<Exponent>(e);
        enumerate_degree(lo, hi - 1, remaining - e, exps, out);
    }
    exps[hi - 1] = 0;
}

}  // namespace

Monomial Monomial::power_of(std::size_t n, std::size_t var, Exponent power)
{
    if (var < 1 || var > n)
        throw std::invalid_argument("variable index out of range");
    Monomial m(n);
    m.exps_[var - 1] = power;
    return m;
}

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (Exponent e : exps_)
        d += e;
    return d;
}

bool Monomial::is_unit() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::suffix_sum(std::size_t var) const
{
    std::uint64_t s = 0;
    for (std::size_t i = var; i <= exps_.size(); ++i)
        s += exps_[i - 1];
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    require_same_ambient(*this, other, "product");
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    if (!divides(other, *this))
        throw std::invalid_argument("quotient: " + to_string(other) + " does not divide " +
                                    to_string(*this));
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= other.exps_[i];
    return r;
}

VarRange::VarRange(std::size_t lo_, std::size_t hi_) : lo(lo_), hi(hi_)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("VarRange requires 1 <= lo <= hi");
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b, "lcm");
    std::vector<Exponent> e(a.vars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b, "gcd");
    std::vector<Exponent> e(a.vars());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b, "divides");
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] > eb[i])
            return false;
    return true;
}

std::size_t max_index(const Monomial& m)
{
    auto e = m.exponents();
    for (std::size_t i = e.size(); i > 0; --i)
        if (e[i - 1] > 0)
            return i;
    throw std::invalid_argument("max_index of the unit monomial is undefined");
}

std::size_t min_index(const Monomial& m)
{
    auto e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0)
            return i + 1;
    throw std::invalid_argument("min_index of the unit monomial is undefined");
}

std::strong_ordering rlex_cmp(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b, "rlex_cmp");
    if (a.degree() != b.degree())
        throw std::invalid_argument("rlex_cmp: degree mismatch between " + to_string(a) +
                                    " and " + to_string(b));
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = ea.size(); i > 0; --i) {
        if (ea[i - 1] == eb[i - 1])
            continue;
        // rightmost nonzero entry of e(a) - e(b) negative => a is greater
        return ea[i - 1] < eb[i - 1] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

bool rlex_greater(const Monomial& a, const Monomial& b)
{
    return rlex_cmp(a, b) == std::strong_ordering::greater;
}

bool canonical_less(const Monomial& a, const Monomial& b)
{
    auto da = a.degree();
    auto db = b.degree();
    if (da != db)
        return da < db;
    return rlex_cmp(a, b) == std::strong_ordering::greater;
}

Monomial borel_move(const Monomial& m, std::size_t t, std::size_t s)
{
    if (s < 1 || s >= t || t > m.vars())
        throw std::invalid_argument("borel_move requires 1 <= s < t <= n");
    if (m[t] == 0)
        throw std::invalid_argument("borel_move: x" + std::to_string(t) + " does not divide " +
                                    to_string(m));
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    e[t - 1] -= 1;
    e[s - 1] = checked_add(e[s - 1], 1);
    return Monomial(std::move(e));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d)
{
    if (n == 0)
        throw std::invalid_argument("monomials_of_degree: empty ring");
    return monomials_of_degree(n, VarRange(1, n), d);
}

std::vector<Monomial> monomials_of_degree(std::size_t n, VarRange range, std::uint64_t d)
{
    if (range.hi > n)
        throw std::invalid_argument("monomials_of_degree: range exceeds ambient ring");
    std::vector<Monomial> out;
    std::vector<Exponent> exps(n, 0);
    enumerate_degree(range.lo, range.hi, d, exps, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return rlex_greater(a, b);
    });
    return out;
}

std::string to_string(const Monomial& m, MonomialStyle style)
{
    if (m.is_unit())
        return "1";
    const bool letters = style == MonomialStyle::Auto && m.vars() <= 4;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 1; i <= m.vars(); ++i) {
        Exponent e = m[i];
        if (e == 0)
            continue;
        if (!first)
            os << '*';
        first = false;
        if (letters)
            os << static_cast<char>('a' + (i - 1));
        else
            os << 'x' << i;
        if (e > 1)
            os << '^' << e;
    }
    return os.str();
}

std::string to_string(std::span<const Monomial> ms, MonomialStyle style)
{
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(ms[i], style);
    }
    return out;
}

namespace {

class MonomialParser {
public:
    MonomialParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    Monomial parse()
    {
        skip_ws();
        if (at_end())
            fail("empty monomial");
        std::vector<Exponent> exps(n_, 0);
        if (peek() == '1') {
            ++pos_;
            skip_ws();
            if (!at_end())
                fail("unexpected text after unit monomial");
            return Monomial(std::move(exps));
        }
        bool expect_factor = true;
        while (true) {
            skip_ws();
            if (at_end()) {
                if (expect_factor)
                    fail("dangling '*'");
                break;
            }
            if (peek() == '*') {
                if (expect_factor)
                    fail("unexpected '*'");
                ++pos_;
                expect_factor = true;
                continue;
            }
            std::size_t var = parse_variable();
            skip_ws();
            std::uint64_t power = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                power = parse_uint();
            }
            if (power > std::numeric_limits<Exponent>::max() - exps[var - 1])
                fail("exponent overflow");
            exps[var - 1] += static_cast<Exponent>(power);
            expect_factor = false;
        }
        return Monomial(std::move(exps));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("cannot parse monomial '" + std::string(text_) + "': " + why);
    }

    std::uint64_t parse_uint()
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > std::numeric_limits<Exponent>::max())
                fail("integer too large");
            ++pos_;
        }
        return v;
    }

    std::size_t parse_variable()
    {
        char c = peek();
        if (!std::islower(static_cast<unsigned char>(c)))
            fail(std::string("unexpected character '") + c + "'");
        ++pos_;
        std::size_t var;
        if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            var = static_cast<std::size_t>(parse_uint());
        else
            var = static_cast<std::size_t>(c - 'a') + 1;
        if (var < 1 || var > n_)
            fail("variable index " + std::to_string(var) + " outside 1.." + std::to_string(n_));
        return var;
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("parse_monomial: ambient ring needs at least one variable");
    return MonomialParser(text, n).parse();
}

std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n)
{
    std::vector<Monomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_monomial(piece, n));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = m.vars();
    for (Exponent e : m.exponents())
        h = h * 1000003u ^ std::hash<Exponent>{}(e);
    return h;
}

}  // namespace borelres
