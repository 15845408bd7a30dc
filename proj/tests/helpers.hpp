#pragma once

#include "weyl/weyl_element.hpp"

#include <initializer_list>
#include <ostream>

namespace weyl::testing {

inline LatticeRef integers(std::size_t n) { return make_lattice(Lattice::integers(n)); }

inline WeylElement mono(const LatticeRef& lattice, std::vector<long> exponent, std::vector<unsigned> mu,
                        const Scalar& c = Scalar(1), Basis basis = Basis::power)
{
    return WeylElement::monomial(lattice, LatticePoint{std::move(exponent)}, std::move(mu), c, basis);
}

/// t^a D^m in W(Z,1).
inline WeylElement tD(const LatticeRef& z, long a, unsigned m = 1, const Scalar& c = Scalar(1))
{
    return mono(z, {a}, {m}, c);
}

inline LatticePoint pt(std::initializer_list<long> c) { return LatticePoint{std::vector<long>(c)}; }

inline Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

} // namespace weyl::testing

namespace weyl {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const WeylElement& x, std::ostream* os) { *os << to_string(x); }

} // namespace weyl
