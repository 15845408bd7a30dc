#pragma once

#include "weyl/rational.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

/// a(a-1)...(a-j+1)/j!, and 1 for j = 0.
Scalar binom(const Scalar& a, unsigned j);
Rational binom(const Rational& a, unsigned j);

/// a(a+1)...(a+j-1).
Scalar rising(const Scalar& a, unsigned j);
/// a(a-1)...(a-j+1).
Scalar falling(const Scalar& a, unsigned j);
Rational falling(const Rational& a, unsigned j);

Integer factorial(unsigned n);

/// Signed Stirling numbers of the first kind: [x]_n = sum_k s(n,k) x^k.
Integer stirling1(unsigned n, unsigned k);
/// Stirling numbers of the second kind: x^n = sum_k S(n,k) [x]_k.
Integer stirling2(unsigned n, unsigned k);

} // namespace weyl
