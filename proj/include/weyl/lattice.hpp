#pragma once

#include "weyl/rational.hpp"
#include "weyl/scalar.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <vector>

namespace weyl {

using RationalVector = std::vector<Rational>;

/// Integer coordinates of an element of Γ with respect to the lattice generators.
struct LatticePoint {
    std::vector<long> coords;

    std::size_t rank() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;

    auto operator<=>(const LatticePoint&) const = default;
    bool operator==(const LatticePoint&) const = default;

    LatticePoint& operator+=(const LatticePoint& other);
    LatticePoint& operator-=(const LatticePoint& other);
    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
    LatticePoint operator-() const;
    LatticePoint scaled(long factor) const;
};

/// d = sum_i d_i D_i.
struct Direction {
    RationalVector coeffs;
};

/// A free abelian group Γ ≅ Z^r embedded in Q^n by Z-independent generators.
class Lattice {
public:
    /// Throws DependentGenerators if the generators are linearly dependent and
    /// DimensionMismatch if some generator does not have `dim` entries.
    Lattice(std::vector<RationalVector> generators, std::size_t dim);

    /// Z^n with the standard basis.
    static Lattice integers(std::size_t n);
    /// The subgroup generated by arbitrary (possibly dependent) rational vectors,
    /// with a Z-basis obtained from the Hermite normal form.
    static Lattice generated_by(const std::vector<RationalVector>& vectors, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    const std::vector<RationalVector>& generators() const noexcept { return generators_; }

    LatticePoint zero() const { return LatticePoint{std::vector<long>(rank(), 0)}; }
    LatticePoint basis(std::size_t i) const;
    RationalVector ambient(const LatticePoint& p) const;
    std::optional<LatticePoint> membership(const RationalVector& v) const;
    bool nondegenerate() const noexcept { return rank() == dim_; }

    bool operator==(const Lattice& other) const { return dim_ == other.dim_ && generators_ == other.generators_; }

private:
    std::size_t dim_;
    std::vector<RationalVector> generators_;
};

using LatticeRef = std::shared_ptr<const Lattice>;

LatticeRef make_lattice(Lattice lattice);
bool same_lattice(const LatticeRef& a, const LatticeRef& b);

std::optional<LatticePoint> lattice_membership(const RationalVector& v, const Lattice& lattice);
bool nondegenerate(const Lattice& lattice);
/// <β, d> = sum_i β_i d_i on ambient coordinates.
Scalar inner(const Lattice& lattice, const LatticePoint& beta, const Direction& d);
Rational inner(const RationalVector& beta, const Direction& d);

/// Row-style Hermite normal form of an integer matrix; zero rows are dropped.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

} // namespace weyl
