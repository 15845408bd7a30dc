#include "weyl/random.hpp"

namespace weyl {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long range)
{
    long p = 0;
    while (p == 0)
        p = uniform_int(rng, -range, range);
    Rational q(p, uniform_int(rng, 1, 3));
    q.canonicalize();
    return q;
}

LatticePoint random_point(const Lattice& lattice, Rng& rng, long radius)
{
    LatticePoint p = lattice.zero();
    for (auto& c : p.coords)
        c = uniform_int(rng, -radius, radius);
    return p;
}

WeylElement random_homogeneous(const LatticeRef& lattice, Rng& rng, const ElementShape& shape,
                               std::optional<LatticePoint> degree)
{
    LatticePoint beta = degree ? *degree : random_point(*lattice, rng, shape.max_degree);
    WeylElement x(lattice, shape.basis);
    long terms = uniform_int(rng, 1, shape.max_terms);
    // Repeated monomials may cancel; keep drawing until the element is nonzero.
    for (long k = 0; k < terms || x.is_zero(); ++k) {
        std::vector<unsigned> mu(lattice->dim(), 0);
        long order = uniform_int(rng, shape.min_order, shape.max_order);
        for (long j = 0; j < order; ++j)
            ++mu[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(lattice->dim()) - 1))];
        x.add(WeylMonomial{beta, mu}, Scalar(random_rational(rng)));
    }
    return x;
}

} // namespace weyl
