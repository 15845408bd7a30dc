#include "weyl/scalar.hpp"

#include "weyl/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace weyl {

namespace {

void trim(Scalar::Exponent& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

Scalar::Exponent add_exponents(const Scalar::Exponent& a, const Scalar::Exponent& b)
{
    Scalar::Exponent r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return r;
}

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace

ParameterSet::ParameterSet(std::vector<std::string> names) : names_(std::move(names))
{
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n))
            throw Error("invalid parameter name '" + n + "'");
        if (!seen.insert(n).second)
            throw Error("duplicate parameter name '" + n + "'");
    }
}

std::optional<std::size_t> ParameterSet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t ParameterSet::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw UnknownSymbol("unknown parameter '" + std::string(name) + "'");
}

Scalar ParameterSet::var(std::string_view name) const { return Scalar::variable(index(name)); }

Scalar::Scalar(const Rational& value)
{
    if (value != 0)
        terms_.emplace(Exponent{}, value);
}

Scalar Scalar::variable(std::size_t index, std::uint32_t power)
{
    Exponent e(index + 1, 0);
    e[index] = power;
    return monomial(std::move(e), Rational(1));
}

Scalar Scalar::monomial(Exponent exponent, const Rational& coefficient)
{
    trim(exponent);
    Scalar s;
    if (coefficient != 0)
        s.terms_.emplace(std::move(exponent), coefficient);
    return s;
}

bool Scalar::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> Scalar::as_rational() const
{
    if (terms_.empty())
        return Rational(0);
    if (is_constant())
        return terms_.begin()->second;
    return std::nullopt;
}

Rational Scalar::constant_value() const
{
    auto q = as_rational();
    if (!q)
        throw Error("polynomial " + to_string() + " is not a constant");
    return *q;
}

Rational Scalar::coefficient(const Exponent& exponent) const
{
    Exponent e = exponent;
    trim(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Scalar::add_term(const Exponent& exponent, const Rational& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    if (a.is_zero() || b.is_zero())
        return r;
    if (b.is_constant())
        return Scalar(a) *= b.terms_.begin()->second;
    if (a.is_constant())
        return Scalar(b) *= a.terms_.begin()->second;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    *this = *this * other;
    return *this;
}

Scalar& Scalar::operator*=(const Rational& factor)
{
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= factor;
    return *this;
}

Scalar& Scalar::operator/=(const Rational& divisor)
{
    if (divisor == 0)
        throw Error("division by zero");
    for (auto& [e, c] : terms_)
        c /= divisor;
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Scalar Scalar::pow(unsigned exponent) const
{
    Scalar result(1);
    Scalar base = *this;
    while (exponent) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent)
            base *= base;
    }
    return result;
}

std::uint32_t Scalar::degree(std::size_t var) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        if (var < e.size())
            d = std::max(d, e[var]);
    return d;
}

std::uint32_t Scalar::total_degree() const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t s = 0;
        for (auto x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

Scalar Scalar::coefficient_of(std::size_t var, std::uint32_t power) const
{
    Scalar r;
    for (const auto& [e, c] : terms_) {
        std::uint32_t p = var < e.size() ? e[var] : 0;
        if (p != power)
            continue;
        Exponent rest = e;
        if (var < rest.size())
            rest[var] = 0;
        trim(rest);
        r.add_term(rest, c);
    }
    return r;
}

Scalar Scalar::substitute(std::size_t var, const Scalar& value) const
{
    std::vector<Scalar> powers{Scalar(1)};
    Scalar r;
    for (const auto& [e, c] : terms_) {
        std::uint32_t p = var < e.size() ? e[var] : 0;
        if (p == 0) {
            r.add_term(e, c);
            continue;
        }
        while (powers.size() <= p)
            powers.push_back(powers.back() * value);
        Exponent rest = e;
        rest[var] = 0;
        trim(rest);
        r += monomial(rest, c) * powers[p];
    }
    return r;
}

std::optional<Scalar> Scalar::divide_exact(const Scalar& divisor) const
{
    if (divisor.is_zero())
        throw Error("division by the zero polynomial");
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    Scalar remainder = *this;
    Scalar quotient;
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms_.rbegin();
        Exponent q(std::max(re.size(), lead_e.size()), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            std::uint32_t a = i < re.size() ? re[i] : 0;
            std::uint32_t b = i < lead_e.size() ? lead_e[i] : 0;
            if (a < b)
                return std::nullopt;
            q[i] = a - b;
        }
        Scalar step = monomial(q, rc / lead_c);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

Scalar Scalar::rename(const ParameterSet& from, const ParameterSet& to) const
{
    std::vector<std::size_t> map(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        map[i] = to.index(from.name(i));
    Scalar r;
    for (const auto& [e, c] : terms_) {
        Exponent out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (i >= map.size())
                throw UnknownSymbol("variable index " + std::to_string(i) + " has no name");
            if (out.size() <= map[i])
                out.resize(map[i] + 1, 0);
            out[map[i]] += e[i];
        }
        trim(out);
        r.add_term(out, c);
    }
    return r;
}

std::string Scalar::to_string(const ParameterSet* params) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += params && i < params->size() ? params->name(i) : "x" + std::to_string(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace weyl
