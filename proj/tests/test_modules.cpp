#include "helpers.hpp"
#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/modules.hpp"

#include <gtest/gtest.h>

using namespace weyl;
using namespace weyl::testing;

namespace {

const LatticeRef Z1 = integers(1);
const LatticeRef Z2 = integers(2);
const auto alpha_params = std::make_shared<const ParameterSet>(std::vector<std::string>{"alpha"});
const auto alpha2_params = std::make_shared<const ParameterSet>(std::vector<std::string>{"a1", "a2"});

IntermediateModule numeric(ModuleKind kind, Rational alpha, long radius = 8)
{
    return IntermediateModule(kind, Z1, {Scalar(alpha)}, interval_window(-radius, radius));
}

IntermediateModule formal(ModuleKind kind, long lo = -12, long hi = 16)
{
    return IntermediateModule(kind, Z1, {alpha_params->var("alpha")}, interval_window(lo, hi), alpha_params);
}

WeylMonomial wm(long beta, unsigned mu) { return WeylMonomial{pt({beta}), {mu}}; }

ModuleVector y(long g, const Scalar& c = Scalar(1)) { return ModuleVector{{pt({g}), c}}; }

} // namespace

TEST(ModuleAction, Examples)
{
    EXPECT_EQ(act(numeric(ModuleKind::A, q(1, 2)), wm(2, 3), pt({1})), y(3, Scalar(q(27, 8))));
    for (long beta = -3; beta <= 3; ++beta)
        for (unsigned mu = 1; mu <= 3; ++mu)
            EXPECT_TRUE(act(numeric(ModuleKind::A, q(0)), wm(beta, mu), pt({0})).empty());
    EXPECT_EQ(act(numeric(ModuleKind::B, q(1, 2)), wm(1, 1), pt({0})), y(1, Scalar(q(3, 2))));
}

TEST(ModuleAction, Errors)
{
    auto m = numeric(ModuleKind::A, q(1, 2), 3);
    EXPECT_THROW(act(m, wm(1, 0), pt({0})), SubalgebraViolation);
    EXPECT_THROW(act(m, wm(2, 1), pt({2})), WindowEscape);
    EXPECT_THROW(act(m, wm(0, 1), pt({9})), WindowEscape);
}

TEST(ModuleAction, CentralElementActsAsZero)
{
    auto m = numeric(ModuleKind::A, q(1, 2));
    WeylElement x = tD(Z1, 1) + WeylElement::central_element(Z1, Scalar(5));
    EXPECT_EQ(act(m, x, y(0)), act(m, tD(Z1, 1), y(0)));
}

TEST(ModuleAction, WeightVectorLaw)
{
    Scalar a1 = alpha2_params->var("a1"), a2 = alpha2_params->var("a2");
    for (auto kind : {ModuleKind::A, ModuleKind::B}) {
        IntermediateModule m(kind, Z2, {a1, a2}, box_window(*Z2, 3), alpha2_params);
        for (const auto& g : m.window()) {
            auto d1 = act(m, WeylMonomial{pt({0, 0}), {1, 0}}, g);
            auto d2 = act(m, WeylMonomial{pt({0, 0}), {0, 1}}, g);
            EXPECT_EQ(d1.at(g), a1 + Scalar(g.coords[0]));
            EXPECT_EQ(d2.at(g), a2 + Scalar(g.coords[1]));
        }
    }
}

TEST(LieModule, FormalShiftBothKinds)
{
    for (auto kind : {ModuleKind::A, ModuleKind::B}) {
        auto r = lie_module_check(formal(kind, -8, 8), 100, 5);
        EXPECT_TRUE(r.passed) << r.to_json().dump();
        EXPECT_EQ(r.details["zero_residuals"], 100);
        IntermediateModule m2(kind, Z2, {alpha2_params->var("a1"), alpha2_params->var("a2")}, box_window(*Z2, 5),
                              alpha2_params);
        EXPECT_TRUE(lie_module_check(m2, 100, 6).passed);
    }
}

TEST(LieModule, SameElementTwice)
{
    auto m = formal(ModuleKind::B);
    WeylElement x = tD(Z1, 2, 3) + tD(Z1, 2, 1, 4);
    auto v = y(1);
    auto lhs = act(m, bracket(x, x), v);
    EXPECT_TRUE(lhs.empty());
}

TEST(AssocModule, Dichotomy)
{
    auto a = assoc_module_check(numeric(ModuleKind::A, q(1, 2)), 60, 9);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(a.details["nonzero_residuals"], 0);

    auto b = assoc_module_check(numeric(ModuleKind::B, q(1, 2)), 60, 9);
    EXPECT_TRUE(b.passed);
    const auto& w = b.details["first_nonzero"];
    EXPECT_EQ(w["x"], "t^(1)*D");
    EXPECT_EQ(w["v"], "y_0");
    EXPECT_EQ(w["product_action"], "-15/4*y_2");
    EXPECT_EQ(w["staged_action"], "15/4*y_2");
    EXPECT_EQ(b.residual, "-15/2*y_2");
}

TEST(AssocModule, ExampleValues)
{
    auto a = numeric(ModuleKind::A, q(1, 2));
    WeylElement x = tD(Z1, 1);
    Scalar expected(q(1, 2) * q(3, 2));
    EXPECT_EQ(act(a, mul(x, x), y(0)), y(2, expected));
    EXPECT_EQ(act(a, x, act(a, x, y(0))), y(2, expected));
}

TEST(AssocModule, FormalKindAIsAssociative)
{
    EXPECT_TRUE(assoc_module_check(formal(ModuleKind::A, -8, 8), 100, 4).passed);
}

TEST(SubmoduleScan, Examples)
{
    for (auto kind : {ModuleKind::A, ModuleKind::B})
        EXPECT_TRUE(submodule_scan(numeric(kind, q(1, 2))).empty());

    auto a0 = submodule_scan(numeric(ModuleKind::A, q(0)));
    ASSERT_EQ(a0.size(), 1U);
    EXPECT_EQ(a0[0], (Window{pt({0})}));

    auto b0 = submodule_scan(numeric(ModuleKind::B, q(0)));
    ASSERT_EQ(b0.size(), 1U);
    Window expected = interval_window(-8, 8);
    expected.erase(pt({0}));
    EXPECT_EQ(b0[0], expected);
}

TEST(SubmoduleScan, ShiftOutsideLatticeHasNoSubmodules)
{
    for (auto kind : {ModuleKind::A, ModuleKind::B})
        for (Rational a : {q(1, 3), q(-5, 2), q(7, 4)})
            for (long r = 1; r <= 8; ++r)
                EXPECT_TRUE(submodule_scan(numeric(kind, a, r)).empty());
}

TEST(SubmoduleScan, ShiftInLatticeMovesTheSubmodule)
{
    // α = 3 puts the special weight at γ = −3.
    auto a = submodule_scan(numeric(ModuleKind::A, q(3)));
    ASSERT_EQ(a.size(), 1U);
    EXPECT_EQ(a[0], (Window{pt({-3})}));
    auto b = submodule_scan(numeric(ModuleKind::B, q(3)));
    ASSERT_EQ(b.size(), 1U);
    EXPECT_EQ(b[0].size(), 16U);
    EXPECT_FALSE(b[0].count(pt({-3})));
}

TEST(SubmoduleScan, FormalShiftIsRejected)
{
    EXPECT_THROW(submodule_scan(formal(ModuleKind::A)), DomainError);
}

TEST(HighestWeight, Examples)
{
    EXPECT_FALSE(highest_weight_scan(numeric(ModuleKind::A, q(1, 2))));
    auto w = highest_weight_scan(numeric(ModuleKind::A, q(0)));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->gamma, pt({0}));
    EXPECT_TRUE(w->also_lowest);
    EXPECT_FALSE(w->caveat.empty());
    IntermediateModule empty(ModuleKind::A, Z1, {Scalar(q(1, 2))}, Window{});
    EXPECT_FALSE(highest_weight_scan(empty));
}

TEST(Normalize, KindA)
{
    PQData d = normalize_ddt_basis(formal(ModuleKind::A), 2, 6);
    ASSERT_TRUE(d.formal);
    ASSERT_TRUE(d.p_kbar_consistent);
    Scalar kbar = d.kbar_params->var("kbar");
    for (long i = -1; i <= 5; ++i)
        EXPECT_EQ(d.P_kbar.at(i), rising(kbar, static_cast<unsigned>(i + 1))) << i;
    EXPECT_TRUE(d.q_independent_of_k);
    for (long i : {1, 3})
        EXPECT_EQ(d.Q_value.at(i), Scalar(1));
    EXPECT_EQ(d.Q_value.at(2), Scalar(1));
    EXPECT_EQ(*d.P1, Scalar(0));
    EXPECT_EQ(*d.P2, Scalar(0));
}

TEST(Normalize, KindB)
{
    PQData d = normalize_ddt_basis(formal(ModuleKind::B), 2, 6);
    ASSERT_TRUE(d.p_kbar_consistent);
    Scalar kbar = d.kbar_params->var("kbar");
    for (long i = -1; i <= 5; ++i)
        EXPECT_EQ(d.P_kbar.at(i), rising(kbar, static_cast<unsigned>(i + 1))) << i;
    EXPECT_EQ(d.Q_value.at(1), Scalar(1));
    EXPECT_EQ(d.Q_value.at(2), Scalar(-1));
    EXPECT_EQ(d.Q_value.at(3), Scalar(1));
    EXPECT_EQ(d.Q_value.at(2) * d.Q_value.at(2), Scalar(1));
}

TEST(Normalize, NumericShiftAgrees)
{
    PQData d = normalize_ddt_basis(numeric(ModuleKind::A, q(1, 2), 20), 1, 4);
    EXPECT_FALSE(d.formal);
    for (long k = 1; k <= 4; ++k)
        EXPECT_EQ(d.P.at(3).at(k), rising(Scalar(q(1, 2) + k), 4));
    EXPECT_EQ(*d.P1, Scalar(0));
}

TEST(Normalize, VanishingRescaleFactor)
{
    EXPECT_THROW(normalize_ddt_basis(numeric(ModuleKind::A, q(-3), 20), 1, 4), DomainError);
    EXPECT_THROW(normalize_ddt_basis(numeric(ModuleKind::A, q(1, 2), 4), 1, 4), WindowEscape);
}

TEST(Sigma, Examples)
{
    Scalar a = alpha_params->var("alpha");
    auto ra = sigma_report(formal(ModuleKind::A));
    EXPECT_TRUE(ra.passed);
    EXPECT_EQ(sigma_eval(formal(ModuleKind::A)), rising(a, 3));
    EXPECT_TRUE(ra.details["product_equals_staged"].get<bool>());

    auto rb = sigma_report(formal(ModuleKind::B));
    EXPECT_TRUE(rb.passed);
    EXPECT_EQ(sigma_eval(formal(ModuleKind::B)), -rising(a, 3));
    EXPECT_FALSE(rb.details["product_equals_staged"].get<bool>());

    for (auto kind : {ModuleKind::A, ModuleKind::B}) {
        auto m = numeric(kind, q(-2));
        EXPECT_EQ(sigma_eval(m), Scalar(0));
        EXPECT_TRUE(sigma_report(m).passed);
    }
}
