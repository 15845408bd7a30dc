#pragma once

#include "weyl/lattice.hpp"
#include "weyl/scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weyl {

/// Which polynomial basis in the D_i the monomials of an element are written in:
/// power D^mu, or falling [D]_mu = prod_i D_i(D_i - 1)...(D_i - mu_i + 1).
enum class Basis { power, falling };

struct WeylMonomial {
    LatticePoint exponent;
    std::vector<unsigned> mu;

    unsigned order() const noexcept;

    auto operator<=>(const WeylMonomial&) const = default;
    bool operator==(const WeylMonomial&) const = default;
};

/// Finite linear combination of monomials t^α D^μ (or t^α [D]_μ) over Scalar, plus a
/// coordinate on the central element C of the extension Ŵ(Γ,1).
class WeylElement {
public:
    using Terms = std::map<WeylMonomial, Scalar>;

    explicit WeylElement(LatticeRef lattice, Basis basis = Basis::power);

    static WeylElement monomial(LatticeRef lattice, LatticePoint exponent, std::vector<unsigned> mu,
                                const Scalar& coefficient = Scalar(1), Basis basis = Basis::power);
    static WeylElement central_element(LatticeRef lattice, const Scalar& coefficient = Scalar(1));

    const LatticeRef& lattice() const noexcept { return lattice_; }
    std::size_t dim() const noexcept { return lattice_->dim(); }
    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    const Scalar& central() const noexcept { return central_; }
    Scalar coefficient(const WeylMonomial& m) const;

    bool is_zero() const noexcept { return terms_.empty() && central_.is_zero(); }
    /// Every term has all mu_i <= 1, where the power and falling bases coincide.
    bool basis_neutral() const noexcept;
    /// No term with |mu| = 0, i.e. the element lies in W(Γ,n)^(1) (central part ignored).
    bool in_w1() const noexcept;

    void add(const WeylMonomial& m, const Scalar& coefficient);
    void add_central(const Scalar& coefficient);
    WeylElement without_central() const;
    /// Reinterprets a basis-neutral element in the other basis; throws otherwise.
    WeylElement retagged(Basis basis) const;

    WeylElement& operator+=(const WeylElement& other);
    WeylElement& operator-=(const WeylElement& other);
    WeylElement& operator*=(const Scalar& factor);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const Scalar& s, WeylElement a) { return a *= s; }
    friend WeylElement operator*(WeylElement a, const Scalar& s) { return a *= s; }
    WeylElement operator-() const;

    /// Equality as algebra elements: identical terms and central part, and the same basis
    /// unless both sides are basis-neutral.
    friend bool operator==(const WeylElement& a, const WeylElement& b);

private:
    void require_compatible(const WeylElement& other) const;

    LatticeRef lattice_;
    Basis basis_;
    Terms terms_;
    Scalar central_;
};

/// Associative product (power basis only).
WeylElement mul(const WeylElement& x, const WeylElement& y);
/// Lie bracket x·y − y·x.
WeylElement bracket(const WeylElement& x, const WeylElement& y);

WeylElement to_falling(const WeylElement& x);
WeylElement to_power(const WeylElement& x);

/// The 2-cocycle ψ on W(Γ,1): ψ(t^α[D]_μ, t^β[D]_ν) = δ_{α,−β} (−1)^μ μ! ν! binom(α+μ, μ+ν+1).
Scalar cocycle(const WeylElement& x, const WeylElement& y);
/// Bracket of Ŵ(Γ,1): plain bracket plus ψ(x,y) C. Central parts of the inputs drop out.
WeylElement ext_bracket(const WeylElement& x, const WeylElement& y);

/// Grading subset of Γ.
class GradingWindow {
public:
    using Predicate = std::function<bool(const Lattice&, const LatticePoint&)>;

    explicit GradingWindow(Predicate predicate) : predicate_(std::move(predicate)) {}

    /// lo <= degree < hi on the ambient value (n = 1); a missing bound is infinite.
    static GradingWindow interval(std::optional<Rational> lo, std::optional<Rational> hi);
    /// Positive / negative / zero degree; for n > 1 positivity is lexicographic on ambient vectors.
    static GradingWindow positive();
    static GradingWindow negative();
    static GradingWindow zero();

    bool contains(const Lattice& lattice, const LatticePoint& p) const { return predicate_(lattice, p); }

private:
    Predicate predicate_;
};

std::optional<LatticePoint> grade(const WeylElement& x);
WeylElement project(const WeylElement& x, const GradingWindow& window);

/// Vector of the group algebra F[Γ] in the basis t^γ.
using GroupAlgebraVector = std::map<LatticePoint, Scalar>;

/// Applies x as a differential operator to t^γ: D_i scales t^γ by γ_i, t^α multiplies.
GroupAlgebraVector operator_action(const WeylElement& x, const LatticePoint& gamma);
GroupAlgebraVector operator_action(const WeylElement& x, const GroupAlgebraVector& v);

/// t^β (sum_i d_i D_i).
WeylElement direction_element(const LatticeRef& lattice, const LatticePoint& beta, const Direction& d);
/// [t^β d, t^γ d'] = t^{β+γ}(<γ,d> d' − <β,d'> d).
WeylElement degree_one_bracket(const LatticeRef& lattice, const LatticePoint& beta, const Direction& d,
                               const LatticePoint& gamma, const Direction& d2);

/// Canonical text form, see FORMAT.md.
std::string to_string(const WeylElement& x, const ParameterSet* params = nullptr);
inline std::string to_string(const WeylElement& x, const ParameterSet& params) { return to_string(x, &params); }
std::string to_string(const Lattice& lattice, const LatticePoint& p);
std::string to_string(const GroupAlgebraVector& v, const Lattice& lattice, const ParameterSet* params = nullptr,
                      const std::string& symbol = "t");

} // namespace weyl
