#include "weyl/combinatorics.hpp"

#include <vector>

namespace weyl {

Scalar falling(const Scalar& a, unsigned j)
{
    Scalar r(1);
    for (unsigned m = 0; m < j; ++m)
        r *= a - Scalar(static_cast<long>(m));
    return r;
}

Scalar rising(const Scalar& a, unsigned j)
{
    Scalar r(1);
    for (unsigned m = 0; m < j; ++m)
        r *= a + Scalar(static_cast<long>(m));
    return r;
}

Rational falling(const Rational& a, unsigned j)
{
    Rational r(1);
    for (unsigned m = 0; m < j; ++m)
        r *= a - m;
    return r;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Scalar binom(const Scalar& a, unsigned j) { return falling(a, j) / Rational(factorial(j)); }

Rational binom(const Rational& a, unsigned j) { return falling(a, j) / Rational(factorial(j)); }

namespace {

// Row n of a triangular recurrence table, grown on demand.
template <class Step>
Integer triangle(unsigned n, unsigned k, Step step)
{
    if (k > n)
        return 0;
    std::vector<Integer> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Integer> next(m + 1, 0);
        for (unsigned i = 1; i <= m; ++i) {
            Integer left = i - 1 < row.size() ? row[i - 1] : Integer(0);
            Integer same = i < row.size() ? row[i] : Integer(0);
            next[i] = step(m, i, left, same);
        }
        row = std::move(next);
    }
    return row[k];
}

} // namespace

Integer stirling1(unsigned n, unsigned k)
{
    // s(m,i) = s(m-1,i-1) - (m-1) s(m-1,i)
    return triangle(n, k, [](unsigned m, unsigned, const Integer& left, const Integer& same) {
        return Integer(left - Integer(m - 1) * same);
    });
}

Integer stirling2(unsigned n, unsigned k)
{
    // S(m,i) = S(m-1,i-1) + i S(m-1,i)
    return triangle(n, k, [](unsigned, unsigned i, const Integer& left, const Integer& same) {
        return Integer(left + Integer(i) * same);
    });
}

} // namespace weyl
