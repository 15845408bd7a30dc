#pragma once

#include "weyl/lattice.hpp"
#include "weyl/weyl_element.hpp"

#include <optional>
#include <random>

namespace weyl {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);
/// Nonzero p/q with |p| <= range, 1 <= q <= 3.
Rational random_rational(Rng& rng, long range = 5);
LatticePoint random_point(const Lattice& lattice, Rng& rng, long radius);

struct ElementShape {
    long max_degree = 5;      // |coordinate| bound on the Γ-degree
    unsigned min_order = 1;   // |μ| >= min_order
    unsigned max_order = 4;   // |μ| <= max_order
    unsigned max_terms = 3;
    Basis basis = Basis::power;
};

/// Random nonzero element all of whose monomials share one Γ-degree (drawn unless given).
WeylElement random_homogeneous(const LatticeRef& lattice, Rng& rng, const ElementShape& shape,
                               std::optional<LatticePoint> degree = std::nullopt);

} // namespace weyl
