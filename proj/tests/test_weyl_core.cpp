#include "helpers.hpp"
#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/random.hpp"
#include "weyl/verify.hpp"

#include <gtest/gtest.h>

using namespace weyl;
using namespace weyl::testing;

namespace {

const LatticeRef Z1 = integers(1);
const LatticeRef Z2 = integers(2);

WeylElement falling_mono(long a, unsigned m, const Scalar& c = Scalar(1))
{
    return mono(Z1, {a}, {m}, c, Basis::falling);
}

bool same_action(const WeylElement& x, const WeylElement& y, const LatticeRef& lattice, Rng& rng)
{
    for (int k = 0; k < 4; ++k) {
        LatticePoint g = random_point(*lattice, rng, 6);
        if (operator_action(x, g) != operator_action(y, g))
            return false;
    }
    return true;
}

std::vector<LatticeRef> sample_lattices()
{
    return {Z1, Z2, make_lattice(Lattice({{q(1, 2)}}, 1)), make_lattice(Lattice({{q(1), q(1)}, {q(0), q(2)}}, 2))};
}

} // namespace

TEST(WeylProduct, Examples)
{
    EXPECT_EQ(mul(tD(Z1, 1), tD(Z1, 2)), tD(Z1, 3, 2) + tD(Z1, 3, 1, 2));
    EXPECT_EQ(mul(tD(Z1, 2), tD(Z1, -2)), tD(Z1, 0, 2) - tD(Z1, 0, 1, 2));
    // t^a D^0 times anything is plain multiplication by t^a.
    EXPECT_EQ(mul(tD(Z1, 3, 0), tD(Z1, -1, 2)), tD(Z1, 2, 2));
}

TEST(WeylProduct, ExamplesAgreeWithOperatorComposition)
{
    Rng rng(1);
    auto check = [&](const WeylElement& x, const WeylElement& y) {
        for (long g = -5; g <= 5; ++g)
            EXPECT_EQ(operator_action(mul(x, y), pt({g})), operator_action(x, operator_action(y, pt({g}))));
    };
    check(tD(Z1, 1), tD(Z1, 2));
    check(tD(Z1, 2), tD(Z1, -2));
}

TEST(WeylProduct, FallingBasisIsRejected)
{
    EXPECT_THROW(mul(falling_mono(1, 2), tD(Z1, 1)), BasisMismatch);
}

TEST(WeylProduct, CentralPartIsRejected)
{
    EXPECT_THROW(mul(WeylElement::central_element(Z1), tD(Z1, 1)), DomainError);
}

TEST(WeylProduct, MixedLatticesAreRejected)
{
    EXPECT_THROW(tD(Z1, 1) + mono(Z2, {1, 0}, {1, 0}), LatticeMismatch);
    EXPECT_THROW(mul(tD(Z1, 1), mono(Z2, {1, 0}, {1, 0})), LatticeMismatch);
}

TEST(WeylBracket, Examples)
{
    EXPECT_EQ(bracket(tD(Z1, 1), tD(Z1, 2)), tD(Z1, 3));
    EXPECT_EQ(bracket(tD(Z1, -1), tD(Z1, 2)), tD(Z1, 1, 1, 3));
    EXPECT_EQ(bracket(tD(Z1, 0), tD(Z1, 5)), tD(Z1, 5, 1, 5));
    EXPECT_TRUE(bracket(tD(Z1, 4, 3), tD(Z1, 4, 3)).is_zero());
}

TEST(WeylBasis, ConversionExamples)
{
    EXPECT_EQ(to_falling(tD(Z1, 0, 2)), falling_mono(0, 2) + falling_mono(0, 1));
    EXPECT_EQ(to_power(falling_mono(2, 3)), tD(Z1, 2, 3) - tD(Z1, 2, 2, 3) + tD(Z1, 2, 1, 2));
    auto x = to_falling(mono(Z2, {1, -1}, {2, 3}));
    EXPECT_EQ(x.basis(), Basis::falling);
    EXPECT_EQ(x.terms().size(), 6U);
}

TEST(WeylBasis, MixingBasesIsAnError)
{
    EXPECT_THROW(falling_mono(0, 2) + tD(Z1, 0, 2), BasisMismatch);
    // Degree-one terms coincide in both bases.
    EXPECT_NO_THROW(falling_mono(0, 2) + tD(Z1, 1, 1));
}

TEST(Cocycle, Examples)
{
    EXPECT_EQ(cocycle(falling_mono(2, 1), falling_mono(-2, 1)), Scalar(-1));
    EXPECT_EQ(cocycle(falling_mono(1, 1), falling_mono(2, 1)), Scalar(0));
    EXPECT_EQ(cocycle(falling_mono(3, 1), falling_mono(-3, 2)), Scalar(-2));
    EXPECT_EQ(cocycle(falling_mono(-3, 2), falling_mono(3, 1)), Scalar(2));
}

TEST(Cocycle, RequiresRankOne)
{
    EXPECT_THROW(cocycle(mono(Z2, {1, 0}, {1, 0}), mono(Z2, {-1, 0}, {1, 0})), DomainError);
}

TEST(Cocycle, AcceptsPowerBasisInputs)
{
    EXPECT_EQ(cocycle(tD(Z1, 0, 2), tD(Z1, 0, 1)), cocycle(to_falling(tD(Z1, 0, 2)), falling_mono(0, 1)));
}

TEST(ExtBracket, Examples)
{
    auto c = WeylElement::central_element(Z1);
    EXPECT_EQ(ext_bracket(tD(Z1, 2), tD(Z1, -2)), bracket(tD(Z1, 2), tD(Z1, -2)) - c);
    EXPECT_EQ(ext_bracket(tD(Z1, 2), tD(Z1, -2)), tD(Z1, 0, 1, -4) - c);
    EXPECT_TRUE(ext_bracket(c, tD(Z1, 3, 2)).is_zero());
    EXPECT_EQ(ext_bracket(tD(Z1, 1), tD(Z1, 2)), tD(Z1, 3));
}

TEST(Jacobi, Examples)
{
    auto r = verify_jacobi(tD(Z1, 1), tD(Z1, 2), tD(Z1, 3));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.residual, "0");
    EXPECT_TRUE(verify_cocycle_condition(tD(Z1, 1), tD(Z1, -1), tD(Z1, 0)).passed);
    auto c = verify_cocycle_condition(falling_mono(2, 2), falling_mono(-1, 1), falling_mono(-1, 1));
    EXPECT_TRUE(c.passed);
    EXPECT_EQ(c.residual, "0");
}

TEST(Grading, GradeAndProject)
{
    auto x = tD(Z1, 2) + tD(Z1, 2, 3, 5);
    ASSERT_TRUE(grade(x));
    EXPECT_EQ(*grade(x), pt({2}));
    EXPECT_FALSE(grade(tD(Z1, 2) + tD(Z1, 1)));
    auto y = tD(Z1, -2) + tD(Z1, 0, 2) + tD(Z1, 3);
    EXPECT_EQ(project(y, GradingWindow::positive()), tD(Z1, 3));
    EXPECT_EQ(project(y, GradingWindow::negative()), tD(Z1, -2));
    EXPECT_EQ(project(y, GradingWindow::zero()), tD(Z1, 0, 2));
    EXPECT_EQ(project(y, GradingWindow::interval(q(-2), q(1))), tD(Z1, -2) + tD(Z1, 0, 2));
}

TEST(OperatorAction, Examples)
{
    GroupAlgebraVector e1{{pt({3}), Scalar(2)}};
    EXPECT_EQ(operator_action(tD(Z1, 1), pt({2})), e1);
    GroupAlgebraVector e2{{pt({0}), Scalar(16)}};
    EXPECT_EQ(operator_action(tD(Z1, -4, 2), pt({4})), e2);
    EXPECT_TRUE(operator_action(tD(Z1, 1), pt({0})).empty());
}

TEST(DegreeOne, Examples)
{
    Direction x{{q(1), q(0)}}, y{{q(0), q(1)}};
    EXPECT_EQ(degree_one_bracket(Z2, pt({1, 0}), x, pt({0, 1}), y),
              bracket(direction_element(Z2, pt({1, 0}), x), direction_element(Z2, pt({0, 1}), y)));
    // Coordinate fields in independent variables commute.
    EXPECT_TRUE(degree_one_bracket(Z2, pt({1, 0}), x, pt({0, 1}), y).is_zero());
    EXPECT_EQ(degree_one_bracket(Z2, pt({1, 0}), y, pt({0, 1}), y), mono(Z2, {1, 1}, {0, 1}));
    EXPECT_EQ(degree_one_bracket(Z1, pt({2}), Direction{{q(1)}}, pt({5}), Direction{{q(1)}}), tD(Z1, 7, 1, 3));
    EXPECT_TRUE(degree_one_bracket(Z2, pt({1, 0}), x, pt({1, 0}), x).is_zero());
}

TEST(Printing, CanonicalForm)
{
    EXPECT_EQ(to_string(tD(Z1, 1) + tD(Z1, 0, 2, -3)), "-3*D^2 + t^(1)*D");
    EXPECT_EQ(to_string(falling_mono(2, 3)), "t^(2)*[D]_3");
    EXPECT_EQ(to_string(WeylElement(Z1)), "0");
}

// ---- properties ----

TEST(WeylProperty, AssociativityAndOracle)
{
    Rng rng(2024);
    int triples = 0;
    for (const auto& lat : sample_lattices()) {
        ElementShape shape{4, 0, lat->dim() == 1 ? 4u : 3u, 2, Basis::power};
        for (int k = 0; k < 60; ++k, ++triples) {
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            auto z = random_homogeneous(lat, rng, shape);
            auto xy = mul(x, y);
            ASSERT_EQ(mul(xy, z), mul(x, mul(y, z))) << to_string(x) << " | " << to_string(y) << " | " << to_string(z);
            for (int s = 0; s < 3; ++s) {
                LatticePoint g = random_point(*lat, rng, 6);
                ASSERT_EQ(operator_action(xy, g), operator_action(x, operator_action(y, g)));
            }
        }
    }
    EXPECT_GE(triples, 200);
}

TEST(WeylProperty, BracketAntisymmetryAndJacobi)
{
    Rng rng(7);
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 25; ++k) {
            ElementShape shape{4, 0, 3, 2, Basis::power};
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            auto z = random_homogeneous(lat, rng, shape);
            ASSERT_TRUE((bracket(x, y) + bracket(y, x)).is_zero());
            ASSERT_TRUE(verify_jacobi(x, y, z).passed);
        }
}

TEST(WeylProperty, BracketMatchesOperatorCommutator)
{
    Rng rng(8);
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 20; ++k) {
            ElementShape shape{4, 0, 3, 2, Basis::power};
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            auto c = mul(x, y) - mul(y, x);
            ASSERT_TRUE(same_action(bracket(x, y), c, lat, rng));
        }
}

TEST(WeylProperty, BasisRoundTrip)
{
    Rng rng(9);
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 30; ++k) {
            auto x = random_homogeneous(lat, rng, ElementShape{5, 0, 6, 3, Basis::power});
            ASSERT_EQ(to_power(to_falling(x)), x);
            auto f = random_homogeneous(lat, rng, ElementShape{5, 0, 6, 3, Basis::falling});
            ASSERT_EQ(to_falling(to_power(f)), f);
        }
}

TEST(WeylProperty, W1IsClosedUnderBracket)
{
    Rng rng(10);
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 30; ++k) {
            ElementShape shape{4, 1, 3, 3, Basis::power};
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            ASSERT_TRUE(x.in_w1() && y.in_w1());
            ASSERT_TRUE(bracket(x, y).in_w1());
        }
}

TEST(WeylProperty, DegreeOneClosedForm)
{
    Rng rng(11);
    int count = 0;
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 30; ++k, ++count) {
            auto random_direction = [&] {
                Direction d;
                for (std::size_t i = 0; i < lat->dim(); ++i)
                    d.coeffs.push_back(uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng));
                return d;
            };
            LatticePoint b = random_point(*lat, rng, 5), g = random_point(*lat, rng, 5);
            Direction d = random_direction(), e = random_direction();
            ASSERT_EQ(degree_one_bracket(lat, b, d, g, e),
                      bracket(direction_element(lat, b, d), direction_element(lat, g, e)));
        }
    EXPECT_GE(count, 100);
}

TEST(WeylProperty, GradingIsAdditive)
{
    Rng rng(12);
    for (const auto& lat : sample_lattices())
        for (int k = 0; k < 30; ++k) {
            ElementShape shape{4, 1, 3, 2, Basis::power};
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            auto bxy = bracket(x, y);
            if (bxy.is_zero())
                continue;
            ASSERT_TRUE(grade(bxy));
            ASSERT_EQ(*grade(bxy), *grade(x) + *grade(y));
        }
}

TEST(CocycleProperty, AntisymmetryAndCocycleCondition)
{
    Rng rng(13);
    int triples = 0;
    for (const LatticeRef lat : {Z1, make_lattice(Lattice({{q(1, 2)}}, 1))}) {
        for (int k = 0; k < 110; ++k, ++triples) {
            ElementShape shape{3, 0, 4, 2, Basis::falling};
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            // Force some α + β = 0 pairs so that ψ is exercised.
            auto z = random_homogeneous(lat, rng, shape, -(*grade(x) + *grade(y)));
            ASSERT_EQ(cocycle(x, y), -cocycle(y, x));
            auto r = verify_cocycle_condition(x, y, z);
            ASSERT_TRUE(r.passed) << r.residual;
            ASSERT_TRUE(verify_ext_jacobi(to_power(x), to_power(y), to_power(z)).passed);
        }
    }
    EXPECT_GE(triples, 200);
}
