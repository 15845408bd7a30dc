#include "helpers.hpp"
#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/random.hpp"

#include <gtest/gtest.h>

using namespace weyl;
using namespace weyl::testing;

namespace {

const ParameterSet params({"a", "alpha", "kbar", "D"});

} // namespace

TEST(Scalar, CanonicalRepresentation)
{
    Scalar a = params.var("a");
    Scalar x = (a + 1) * (a - 1);
    Scalar y = a * a - 1;
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.terms(), y.terms());
    EXPECT_TRUE((x - y).is_zero());
    EXPECT_EQ((a - a).size(), 0U);
    EXPECT_EQ(x.to_string(params), "a^2 - 1");
}

TEST(Scalar, DivisionOnlyByNonzeroRational)
{
    Scalar a = params.var("a");
    EXPECT_EQ((a * 3) / Rational(3), a);
    EXPECT_THROW(a / Rational(0), Error);
}

TEST(Scalar, ExactDivisibility)
{
    Scalar a = params.var("a");
    Scalar k = params.var("kbar");
    Scalar p = (a + k) * (a * a - k + 2);
    auto quotient = p.divide_exact(a + k);
    ASSERT_TRUE(quotient);
    EXPECT_EQ(*quotient, a * a - k + 2);
    EXPECT_FALSE((p + 1).divide_exact(a + k));
}

TEST(Scalar, SubstituteAndCoefficients)
{
    Scalar a = params.var("a");
    Scalar k = params.var("kbar");
    Scalar p = a * a * k + a * 3 - k;
    EXPECT_EQ(p.substitute(params.index("a"), k + 1), (k + 1) * (k + 1) * k + (k + 1) * 3 - k);
    EXPECT_EQ(p.coefficient_of(params.index("a"), 2), k);
    EXPECT_EQ(p.coefficient_of(params.index("a"), 0), -k);
    EXPECT_EQ(p.degree(params.index("a")), 2U);
}

TEST(Scalar, UnknownParameterIsAnError)
{
    EXPECT_THROW(params.var("zeta"), UnknownSymbol);
    EXPECT_THROW(ParameterSet({"x", "x"}), Error);
}

TEST(Combinatorics, BinomExamples)
{
    Scalar alpha = params.var("alpha");
    EXPECT_EQ(binom(Scalar(2), 3), Scalar(0));
    EXPECT_EQ(binom(alpha + 1, 2), (alpha * alpha + alpha) / Rational(2));
    EXPECT_EQ(binom(params.var("a"), 0), Scalar(1));
    EXPECT_EQ(binom(Rational(-1), 4), Rational(1));
}

TEST(Combinatorics, RisingFallingExamples)
{
    Scalar k = params.var("kbar");
    Scalar d = params.var("D");
    EXPECT_EQ(rising(k, 2), k * k + k);
    EXPECT_EQ(falling(d, 2), d * d - d);
    EXPECT_EQ(falling(params.var("a"), 0), Scalar(1));
}

TEST(Combinatorics, BinomTimesFactorialIsFalling)
{
    Scalar a = params.var("a");
    for (unsigned j = 1; j <= 10; ++j)
        EXPECT_EQ(binom(a, j) * Scalar(Rational(factorial(j))), falling(a, j)) << j;
}

TEST(Combinatorics, RisingIsShiftedFalling)
{
    Scalar a = params.var("a");
    for (unsigned j = 0; j <= 8; ++j)
        EXPECT_EQ(rising(a, j), falling(a + Scalar(long(j) - 1), j)) << j;
}

TEST(Combinatorics, StirlingRowSums)
{
    // sum_k S(n,k) s(k,m) = δ_{nm}
    for (unsigned n = 0; n <= 9; ++n)
        for (unsigned m = 0; m <= 9; ++m) {
            Integer s = 0;
            for (unsigned k = 0; k <= 9; ++k)
                s += stirling2(n, k) * stirling1(k, m);
            EXPECT_EQ(s, n == m ? 1 : 0);
        }
    EXPECT_EQ(stirling1(3, 1), 2);
    EXPECT_EQ(stirling1(3, 2), -3);
    EXPECT_EQ(stirling2(4, 2), 7);
}

TEST(Lattice, MembershipExamples)
{
    Lattice z2 = Lattice::integers(2);
    auto x = lattice_membership({q(2), q(3)}, z2);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->coords, (std::vector<long>{2, 3}));
    EXPECT_FALSE(lattice_membership({q(1, 2), q(0)}, z2));

    Lattice skew({{q(1), q(0)}, {q(1), q(2)}}, 2);
    auto y = lattice_membership({q(0), q(2)}, skew);
    ASSERT_TRUE(y);
    EXPECT_EQ(y->coords, (std::vector<long>{-1, 1}));
    EXPECT_FALSE(lattice_membership({q(0), q(1)}, skew));
}

TEST(Lattice, MembershipDimensionMismatch)
{
    EXPECT_THROW(lattice_membership({q(1)}, Lattice::integers(2)), DimensionMismatch);
}

TEST(Lattice, MembershipInvertsAmbient)
{
    Lattice l({{q(1, 2), q(1)}, {q(-1, 3), q(2)}}, 2);
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        LatticePoint p = random_point(l, rng, 20);
        auto back = l.membership(l.ambient(p));
        ASSERT_TRUE(back);
        EXPECT_EQ(*back, p);
    }
}

TEST(Lattice, Nondegeneracy)
{
    EXPECT_TRUE(nondegenerate(Lattice::integers(2)));
    EXPECT_FALSE(nondegenerate(Lattice({{q(1), q(0)}}, 2)));
    EXPECT_THROW(Lattice({{q(1), q(1)}, {q(2), q(2)}, {q(0), q(3)}}, 2), DependentGenerators);
    EXPECT_THROW(Lattice({{q(1), q(1)}, {q(2), q(2)}}, 2), DependentGenerators);

    Lattice reduced = Lattice::generated_by({{q(1), q(1)}, {q(2), q(2)}, {q(0), q(3)}}, 2);
    EXPECT_TRUE(nondegenerate(reduced));
    EXPECT_EQ(reduced.rank(), 2U);
    for (const auto& v : {RationalVector{q(1), q(1)}, RationalVector{q(2), q(2)}, RationalVector{q(0), q(3)}})
        EXPECT_TRUE(reduced.membership(v));
    EXPECT_FALSE(reduced.membership({q(0), q(1)}));
}

TEST(Lattice, HermiteNormalFormSpansTheSameGroup)
{
    // (2,4),(3,6) generate the multiples of (1,2); (1,2) itself must be a member.
    Lattice l = Lattice::generated_by({{q(2), q(4)}, {q(3), q(6)}}, 2);
    EXPECT_EQ(l.rank(), 1U);
    EXPECT_TRUE(l.membership({q(1), q(2)}));
    Lattice half = Lattice::generated_by({{q(1, 2)}, {q(1, 3)}}, 1);
    EXPECT_EQ(half.generators(), (std::vector<RationalVector>{{q(1, 6)}}));
}

TEST(Lattice, InnerExamples)
{
    Lattice z2 = Lattice::integers(2);
    EXPECT_EQ(inner(z2, pt({1, 2}), Direction{{q(1), q(3)}}), Scalar(7));
    EXPECT_EQ(inner(z2, pt({0, 0}), Direction{{q(5), q(-2)}}), Scalar(0));
    EXPECT_EQ(inner(z2, pt({1, -1}), Direction{{q(1), q(1)}}), Scalar(0));
    EXPECT_THROW(inner(RationalVector{q(1)}, Direction{{q(1), q(1)}}), DimensionMismatch);
}

TEST(Lattice, InnerIsBilinear)
{
    Lattice l({{q(1), q(1, 2)}, {q(0), q(3)}}, 2);
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        LatticePoint b = random_point(l, rng, 6), g = random_point(l, rng, 6);
        Direction d{{random_rational(rng), random_rational(rng)}};
        Direction e{{random_rational(rng), random_rational(rng)}};
        Direction de{{d.coeffs[0] + e.coeffs[0], d.coeffs[1] + e.coeffs[1]}};
        EXPECT_EQ(inner(l, b + g, d), inner(l, b, d) + inner(l, g, d));
        EXPECT_EQ(inner(l, b, de), inner(l, b, d) + inner(l, b, e));
    }
}

TEST(Lattice, PairingNondegenerateOnGenerators)
{
    // <β, D> = 0 for every coordinate direction forces β = 0, checked on generators.
    for (const Lattice& l : {Lattice::integers(2), Lattice({{q(1), q(1)}, {q(1), q(-1)}}, 2),
                             Lattice({{q(1, 2), q(0), q(0)}, {q(0), q(1), q(1)}, {q(0), q(0), q(2)}}, 3)}) {
        ASSERT_TRUE(l.nondegenerate());
        for (std::size_t g = 0; g < l.rank(); ++g) {
            bool some_nonzero = false;
            for (std::size_t i = 0; i < l.dim(); ++i) {
                Direction d{RationalVector(l.dim(), q(0))};
                d.coeffs[i] = 1;
                some_nonzero |= !inner(l, l.basis(g), d).is_zero();
            }
            EXPECT_TRUE(some_nonzero);
        }
    }
}
