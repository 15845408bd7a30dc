#include "helpers.hpp"
#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/weightlab.hpp"

#include <gtest/gtest.h>

using namespace weyl;
using namespace weyl::testing;

namespace {

const ParameterSet& P = weight_params();

Scalar v(const char* name) { return P.var(name); }

Scalar at_zero(const Scalar& s)
{
    return s.substitute(P.index("p1"), Scalar(0)).substitute(P.index("p2"), Scalar(0));
}

PQData formal_data(ModuleKind kind)
{
    auto ps = std::make_shared<const ParameterSet>(std::vector<std::string>{"alpha"});
    IntermediateModule m(kind, integers(1), {ps->var("alpha")}, interval_window(-10, 20), ps);
    return normalize_ddt_basis(m, 2, 6);
}

} // namespace

TEST(PSeries, Examples)
{
    PSeries s = build_p_series();
    Scalar k = v("kbar"), p1 = v("p1"), p2 = v("p2");
    EXPECT_EQ(s.transcribed.at(0), k);
    EXPECT_EQ(s.transcribed.at(-1), Scalar(1));
    EXPECT_EQ(s.transcribed.at(3), rising(k, 4) + Scalar(6) * rising(k, 2) * p1 + Scalar(4) * k * p2 +
                                       s.constants.at(3));
    for (long j = -1; j <= 5; ++j)
        EXPECT_EQ(at_zero(s.transcribed.at(j)), rising(k, static_cast<unsigned>(j + 1))) << j;
}

TEST(PSeries, TranscriptionMatchesDerivation)
{
    PSeries s = build_p_series();
    for (long j = 3; j <= 5; ++j) {
        EXPECT_EQ(s.transcribed.at(j), s.derived.at(j)) << j;
        EXPECT_EQ(s.constants.at(j), s.derived_constants.at(j)) << j;
    }
    EXPECT_TRUE(p_series_report(s).passed);
}

TEST(PSeries, AgreesWithModuleNormalization)
{
    // Independent route: A_α rescaled data has p1 = p2 = 0.
    PSeries s = build_p_series();
    PQData d = formal_data(ModuleKind::A);
    for (long j = -1; j <= 5; ++j) {
        Scalar from_series = at_zero(s.transcribed.at(j));
        EXPECT_EQ(from_series.to_string(P), d.P_kbar.at(j).to_string(*d.kbar_params)) << j;
    }
}

TEST(Virasoro, Examples)
{
    PSeries s = build_p_series();
    auto r = virasoro_consistency(s);
    EXPECT_TRUE(r.passed) << r.to_json().dump();
    EXPECT_TRUE(r.details["kbar_free"].get<bool>());
    EXPECT_EQ(r.details["factor"], "-8");
    EXPECT_EQ(r.details["spot_values"]["(0,0)"], "0");
    EXPECT_EQ(r.details["spot_values"]["(-2,0)"], "0");
    EXPECT_EQ(r.residual, "0");
}

TEST(Virasoro, ResidualFormsAgree)
{
    PSeries s = build_p_series();
    auto r = virasoro_consistency(s);
    EXPECT_EQ(r.details["R"], r.details["R_from_transcribed"]);
}

TEST(FPolys, CoefficientClaims)
{
    FPolys f = build_f_polynomials(build_p_series());
    std::size_t i = P.index("i");
    EXPECT_EQ(f.f2.coefficient_of(i, 4), v("p1") - v("p1p"));
    EXPECT_EQ(f.f2.degree(i), 4U);
    EXPECT_EQ(f.g.degree(i), 12U);
    EXPECT_EQ(f.g.coefficient_of(i, 12).substitute(P.index("p1p"), v("p1")), Scalar(6) * v("p1"));
    EXPECT_TRUE(f_polynomial_report(f).passed);
}

TEST(FPolys, ZeroConstantsReduceFirstRelation)
{
    FPolys f = build_f_polynomials(build_p_series());
    Scalar z = f.f1;
    for (const char* n : {"p1", "p2", "p1p", "p2p"})
        z = z.substitute(P.index(n), Scalar(0));
    EXPECT_EQ(z, -falling(v("i") + Scalar(1), 4));
}

TEST(FPolys, SecondRelationAtEqualConstants)
{
    FPolys f = build_f_polynomials(build_p_series());
    Scalar e = f.f2.substitute(P.index("p1p"), v("p1")).substitute(P.index("p2p"), v("p2"));
    EXPECT_EQ(e, Scalar(4) * falling(v("i"), 3) * (Scalar(3) * v("p1") - v("p2")));
    EXPECT_FALSE(e.depends_on(P.index("kbar")));
}

TEST(YkRelations, KindAData)
{
    auto r = verify_yk_relations(formal_data(ModuleKind::A));
    EXPECT_TRUE(r.passed) << r.residual;
    EXPECT_EQ(r.details["residuals"]["L23-1@i=1"], "0");
    EXPECT_EQ(r.details["residuals"]["L23-3@i=5"], "0");
    EXPECT_EQ(r.details["residuals"]["L23-3@i=1"], "0");
}

TEST(YkRelations, KindBData)
{
    EXPECT_TRUE(verify_yk_relations(formal_data(ModuleKind::B)).passed);
}

TEST(YkRelations, MissingEntries)
{
    IntermediateModule m(ModuleKind::A, integers(1), {Scalar(q(1, 2))}, interval_window(-10, 20));
    EXPECT_THROW(verify_yk_relations(normalize_ddt_basis(m, 2, 6)), Error);
}
