#pragma once

#include "weyl/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

class Scalar;

/// Fixed, ordered list of formal parameter names. Variable i of a Scalar is name(i).
/// The set is frozen at construction; asking for a name it does not contain is an error.
class ParameterSet {
public:
    ParameterSet() = default;
    explicit ParameterSet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;
    Scalar var(std::string_view name) const;

    bool operator==(const ParameterSet&) const = default;

private:
    std::vector<std::string> names_;
};

/// Exact polynomial with rational coefficients in the variables of some ParameterSet.
///
/// Stored as a sparse map from exponent vectors (trailing zeros trimmed) to nonzero
/// rationals, so equal polynomials have identical representations. The map order is
/// lexicographic on exponent vectors, which is the lex monomial order with variable 0
/// most significant.
class Scalar {
public:
    using Exponent = std::vector<std::uint32_t>;
    using Terms = std::map<Exponent, Rational>;

    Scalar() = default;
    Scalar(int value) : Scalar(Rational(value)) {}
    Scalar(long value) : Scalar(Rational(value)) {}
    Scalar(const Rational& value);

    static Scalar variable(std::size_t index, std::uint32_t power = 1);
    static Scalar monomial(Exponent exponent, const Rational& coefficient);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::optional<Rational> as_rational() const;
    /// Throws if the polynomial is not constant.
    Rational constant_value() const;
    Rational coefficient(const Exponent& exponent) const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator*=(const Rational& factor);
    /// Division by a nonzero rational; polynomial division lives in divide_exact.
    Scalar& operator/=(const Rational& divisor);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Rational& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar pow(unsigned exponent) const;

    /// Highest power of variable `var` that occurs.
    std::uint32_t degree(std::size_t var) const;
    std::uint32_t total_degree() const;
    /// The coefficient of var^power, as a polynomial in the remaining variables.
    Scalar coefficient_of(std::size_t var, std::uint32_t power) const;
    Scalar substitute(std::size_t var, const Scalar& value) const;
    Scalar substitute(std::size_t var, const Rational& value) const { return substitute(var, Scalar(value)); }
    bool depends_on(std::size_t var) const { return degree(var) > 0; }

    /// Quotient if `divisor` divides this polynomial exactly, nullopt otherwise.
    std::optional<Scalar> divide_exact(const Scalar& divisor) const;

    /// Re-indexes variables by name from one parameter set into another.
    Scalar rename(const ParameterSet& from, const ParameterSet& to) const;

    /// Human-readable and re-parseable: "3/2*a^2*b - a + 1". Variables without a
    /// name in `params` print as x<index>.
    std::string to_string(const ParameterSet* params = nullptr) const;
    std::string to_string(const ParameterSet& params) const { return to_string(&params); }

private:
    void add_term(const Exponent& exponent, const Rational& coefficient);

    Terms terms_;
};

} // namespace weyl
