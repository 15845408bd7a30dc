#include "weyl/cli/suites.hpp"

#include "weyl/cli/pool.hpp"
#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/onevar.hpp"
#include "weyl/random.hpp"
#include "weyl/verify.hpp"
#include "weyl/weightlab.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace weyl::cli {

namespace {

using Checks = std::vector<VerificationReport>;

struct Task {
    std::string label;  // used only to derive a seed stream
    std::function<Checks(Rng::result_type)> run;
};

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.push_back("");
    return out;
}

std::string trim(std::string s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

RationalVector parse_vector(const std::string& text)
{
    RationalVector v;
    for (const auto& part : split(text, ','))
        v.push_back(parse_rational(trim(part)));
    return v;
}

std::string pad(long v, int width = 2)
{
    std::string s = std::to_string(v < 0 ? -v : v);
    while (static_cast<int>(s.size()) < width)
        s = "0" + s;
    return (v < 0 ? "-" : "") + s;
}

std::string point_text(const Lattice& lattice, const LatticePoint& p) { return weyl::to_string(lattice, p); }

Json window_json(const Lattice& lattice, const Window& w)
{
    Json a = Json::array();
    for (const auto& p : w)
        a.push_back(point_text(lattice, p));
    return a;
}

GroupAlgebraVector difference(GroupAlgebraVector a, const GroupAlgebraVector& b)
{
    for (const auto& [g, c] : b) {
        Scalar v = a[g] - c;
        if (v.is_zero())
            a.erase(g);
        else
            a[g] = v;
    }
    return a;
}

VerificationReport make_report(std::string name, bool passed, std::string residual = "0")
{
    VerificationReport r;
    r.name = std::move(name);
    r.passed = passed;
    r.residual = std::move(residual);
    return r;
}

UPoly random_poly(Rng& rng, long max_degree)
{
    std::vector<Rational> c(static_cast<std::size_t>(uniform_int(rng, 0, max_degree) + 1));
    for (auto& x : c)
        x = uniform_int(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng, 4);
    if (c.back() == 0)
        c.back() = 1;
    return UPoly(c);
}

Direction random_direction(Rng& rng, std::size_t n)
{
    Direction d;
    for (std::size_t i = 0; i < n; ++i)
        d.coeffs.push_back(uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng));
    return d;
}

// ---- option resolution ----

struct Resolved {
    const SuiteOptions& o;

    std::size_t samples(std::size_t fallback) const { return o.samples.value_or(fallback); }
    unsigned max_mu(unsigned fallback) const { return o.max_mu.value_or(fallback); }
    long window(long fallback) const { return o.window.value_or(fallback); }

    /// Lattices to sweep: the one given by --gamma/--n, or the defaults.
    std::vector<LatticeRef> lattices(const std::vector<std::size_t>& default_dims) const
    {
        if (o.gamma)
            return {parse_gamma(*o.gamma, o.n)};
        if (o.n)
            return {make_lattice(Lattice::integers(*o.n))};
        std::vector<LatticeRef> out;
        for (auto n : default_dims)
            out.push_back(make_lattice(Lattice::integers(n)));
        return out;
    }

    LatticeRef rank_one_lattice() const
    {
        auto lats = lattices({1});
        if (lats[0]->dim() != 1)
            throw Error("invalid options: this suite needs n = 1");
        return lats[0];
    }

    std::vector<ModuleKind> kinds() const
    {
        if (o.kind)
            return {*o.kind};
        return {ModuleKind::A, ModuleKind::B};
    }
};

void validate(const SuiteOptions& o)
{
    if (o.n && (*o.n < 1 || *o.n > 8))
        throw Error("invalid options: --n must be between 1 and 8");
    if (o.samples && *o.samples == 0)
        throw Error("invalid options: --samples must be positive");
    if (o.window && *o.window < 1)
        throw Error("invalid options: --window must be positive");
    if (o.max_mu && *o.max_mu < 1)
        throw Error("invalid options: --max-mu must be positive");
    if (o.gamma)
        parse_gamma(*o.gamma, o.n);
}

Json lattice_params(const Lattice& lat)
{
    return Json{{"n", lat.dim()}, {"gamma", lattice_label(lat)}};
}

// ---- suites ----

std::vector<Task> jacobi_suite(const Resolved& r)
{
    Mode mode = r.o.subalgebra.value_or(Mode::w1);
    std::vector<Task> tasks;
    for (const auto& lat : r.lattices({1, 2})) {
        if (mode == Mode::hat && lat->dim() != 1)
            throw Error("invalid options: hat mode needs n = 1");
        std::string name = "jacobi/n=" + std::to_string(lat->dim()) + "/" + lattice_label(*lat);
        std::size_t samples = r.samples(200);
        ElementShape shape{5, mode == Mode::w1 ? 1u : 0u, r.max_mu(4), 3, Basis::power};
        tasks.push_back({name, [=](std::uint64_t stream) {
            Checks out;
            std::vector<VerificationReport> reports;
            for (std::size_t s = 0; s < samples; ++s) {
                Rng rng(derive_seed(stream, 0, s));
                auto x = random_homogeneous(lat, rng, shape);
                auto y = random_homogeneous(lat, rng, shape);
                auto z = mode == Mode::hat && s % 2 == 0
                             ? random_homogeneous(lat, rng, shape, -(*grade(x) + *grade(y)))
                             : random_homogeneous(lat, rng, shape);
                reports.push_back(mode == Mode::hat ? verify_ext_jacobi(x, y, z) : verify_jacobi(x, y, z));
            }
            VerificationReport agg = aggregate(name, reports);
            agg.parameters = lattice_params(*lat);
            agg.parameters["subalgebra"] = to_string(mode);
            agg.parameters["max_mu"] = shape.max_order;
            agg.parameters["max_degree"] = shape.max_degree;
            out.push_back(std::move(agg));
            return out;
        }});
    }
    return tasks;
}

std::vector<Task> oracle_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    for (const auto& lat : r.lattices({1, 2})) {
        std::string label = "n=" + std::to_string(lat->dim()) + "/" + lattice_label(*lat);
        std::size_t samples = r.samples(200);
        ElementShape shape{5, 0, r.max_mu(4), 3, Basis::power};
        std::string name = "oracle/product/" + label;
        tasks.push_back({name, [=](std::uint64_t stream) {
            std::vector<VerificationReport> reports;
            for (std::size_t s = 0; s < samples; ++s) {
                Rng rng(derive_seed(stream, 0, s));
                auto x = random_homogeneous(lat, rng, shape);
                auto y = random_homogeneous(lat, rng, shape);
                WeylElement xy = mul(x, y);
                VerificationReport rep = make_report("oracle-sample", true);
                for (int v = 0; v < 5; ++v) {
                    LatticePoint g = random_point(*lat, rng, 6);
                    auto d = difference(operator_action(xy, g), operator_action(x, operator_action(y, g)));
                    if (!d.empty() && rep.passed) {
                        rep.passed = false;
                        rep.residual = to_string(d, *lat);
                        rep.witnesses = {to_string(x), to_string(y), "t^" + point_text(*lat, g)};
                    }
                }
                reports.push_back(std::move(rep));
            }
            VerificationReport agg = aggregate(name, reports);
            agg.parameters = lattice_params(*lat);
            agg.parameters["basis_vectors_per_pair"] = 5;
            return Checks{std::move(agg)};
        }});

        std::string dname = "oracle/degree-one/" + label;
        std::size_t cases = std::max<std::size_t>(1, samples / 2);
        tasks.push_back({dname, [=](std::uint64_t stream) {
            std::vector<VerificationReport> reports;
            for (std::size_t s = 0; s < cases; ++s) {
                Rng rng(derive_seed(stream, 0, s));
                LatticePoint b = random_point(*lat, rng, 5), g = random_point(*lat, rng, 5);
                Direction d = random_direction(rng, lat->dim()), e = random_direction(rng, lat->dim());
                WeylElement closed = degree_one_bracket(lat, b, d, g, e);
                WeylElement generic = bracket(direction_element(lat, b, d), direction_element(lat, g, e));
                reports.push_back(make_report("degree-one-sample", closed == generic, to_string(closed - generic)));
            }
            VerificationReport agg = aggregate(dname, reports);
            agg.parameters = lattice_params(*lat);
            return Checks{std::move(agg)};
        }});
    }
    tasks.push_back({"oracle/df-bracket", [](std::uint64_t stream) {
        std::vector<VerificationReport> reports;
        for (long i = -6; i <= 6; ++i)
            for (long j = -6; j <= 6; ++j) {
                Rng rng(derive_seed(stream, static_cast<std::uint64_t>(i + 6), static_cast<std::uint64_t>(j + 6)));
                UPoly f = random_poly(rng, 6), g = random_poly(rng, 6);
                WeylElement closed = to_weyl(df_bracket(i, f, j, g));
                WeylElement generic = bracket(to_weyl({i, f}), to_weyl({j, g}));
                reports.push_back(make_report("df-sample", closed == generic, to_string(closed - generic)));
            }
        VerificationReport agg = aggregate("oracle/df-bracket", reports);
        agg.parameters = {{"degrees", "-6..6"}, {"max_poly_degree", 6}};
        return Checks{std::move(agg)};
    }});
    return tasks;
}

std::vector<Task> cocycle_suite(const Resolved& r)
{
    LatticeRef lat = r.rank_one_lattice();
    std::size_t samples = r.samples(200);
    ElementShape shape{3, 0, r.max_mu(4), 2, Basis::falling};
    std::vector<Task> tasks;
    auto opposite = [lat, shape](Rng& rng, const WeylElement& x, const WeylElement& y, std::size_t s) {
        return s % 4 == 3 ? random_homogeneous(lat, rng, shape) : random_homogeneous(lat, rng, shape, -(*grade(x) + *grade(y)));
    };
    tasks.push_back({"cocycle/condition", [=](std::uint64_t stream) {
        std::vector<VerificationReport> reports;
        for (std::size_t s = 0; s < samples; ++s) {
            Rng rng(derive_seed(stream, 0, s));
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            reports.push_back(verify_cocycle_condition(x, y, opposite(rng, x, y, s)));
        }
        VerificationReport agg = aggregate("cocycle/condition", reports);
        agg.parameters = lattice_params(*lat);
        return Checks{std::move(agg)};
    }});
    std::size_t half = std::max<std::size_t>(1, samples / 2);
    tasks.push_back({"cocycle/ext-jacobi", [=](std::uint64_t stream) {
        std::vector<VerificationReport> reports;
        for (std::size_t s = 0; s < half; ++s) {
            Rng rng(derive_seed(stream, 0, s));
            auto x = random_homogeneous(lat, rng, shape);
            auto y = random_homogeneous(lat, rng, shape);
            auto z = opposite(rng, x, y, s);
            reports.push_back(verify_ext_jacobi(to_power(x), to_power(y), to_power(z)));
        }
        VerificationReport agg = aggregate("cocycle/ext-jacobi", reports);
        agg.parameters = lattice_params(*lat);
        return Checks{std::move(agg)};
    }});
    tasks.push_back({"cocycle/antisymmetry", [=](std::uint64_t stream) {
        std::vector<VerificationReport> reports;
        std::size_t nonzero = 0;
        for (std::size_t s = 0; s < half; ++s) {
            Rng rng(derive_seed(stream, 0, s));
            auto x = random_homogeneous(lat, rng, shape);
            auto y = s % 4 == 3 ? random_homogeneous(lat, rng, shape) : random_homogeneous(lat, rng, shape, -*grade(x));
            Scalar a = cocycle(x, y), b = cocycle(y, x);
            if (!a.is_zero())
                ++nonzero;
            reports.push_back(make_report("antisymmetry-sample", (a + b).is_zero(), (a + b).to_string()));
        }
        VerificationReport agg = aggregate("cocycle/antisymmetry", reports);
        agg.parameters = lattice_params(*lat);
        agg.details["nonzero_values"] = nonzero;
        return Checks{std::move(agg)};
    }});
    return tasks;
}

std::vector<Task> onevar_suite(const Resolved&)
{
    std::vector<Task> tasks;
    for (const char* id : {"L23-1", "L23-2", "L23-3"})
        for (long i = 1; i <= 12; ++i) {
            std::string name = std::string("onevar-identities/") + id + "/i=" + pad(i);
            tasks.push_back({name, [name, id = std::string(id), i](std::uint64_t) {
                VerificationReport rep = verify_named_identity(id, i);
                rep.name = name;
                return Checks{std::move(rep)};
            }});
        }
    tasks.push_back({"onevar-identities/CUBE", [](std::uint64_t) {
        VerificationReport rep = verify_named_identity("CUBE", 0);
        rep.name = "onevar-identities/CUBE";
        return Checks{std::move(rep)};
    }});
    tasks.push_back({"onevar-identities/L23-3/unique-reading", [](std::uint64_t) {
        std::set<std::string> common(l23_3_readings().begin(), l23_3_readings().end());
        Json per_i = Json::object();
        Json legend;
        for (long i = 1; i <= 12; ++i) {
            VerificationReport rep = verify_named_identity("L23-3", i);
            std::set<std::string> zero;
            for (const auto& z : rep.details["zero_readings"])
                zero.insert(z.get<std::string>());
            per_i["i=" + pad(i)] = rep.details["zero_readings"];
            legend = rep.details["readings"];
            std::set<std::string> keep;
            std::set_intersection(common.begin(), common.end(), zero.begin(), zero.end(),
                                  std::inserter(keep, keep.begin()));
            common = keep;
        }
        VerificationReport r = make_report("onevar-identities/L23-3/unique-reading", common.size() == 1);
        r.parameters = {{"i", "1..12"}};
        r.details["readings"] = legend;
        r.details["zero_readings_by_i"] = per_i;
        r.details["zero_for_all_i"] = Json(std::vector<std::string>(common.begin(), common.end()));
        if (!r.passed)
            r.residual = std::to_string(common.size()) + " readings vanish for every i";
        return Checks{std::move(r)};
    }});
    return tasks;
}

std::vector<Task> lemma21_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    SubalgebraCaps caps;
    if (r.o.window)
        caps.max_degree = *r.o.window;
    unsigned m0 = 2;
    for (long i0 : {1L, 2L}) {
        std::string prefix = "lemma21/i0=" + std::to_string(i0);
        tasks.push_back({prefix, [=](std::uint64_t) {
            Checks out;
            GeneratedSubalgebra alg = lemma21_subalgebra(i0, m0, caps);
            VerificationReport closure = make_report(prefix + "/closure", alg.closed());
            closure.parameters = {{"i0", i0}, {"m0", m0}};
            closure.details["dimension"] = alg.dimension();
            closure.details["growth"] = alg.growth();
            closure.details["closed"] = alg.closed();
            out.push_back(std::move(closure));
            for (long k = 3 * i0; k <= caps.max_degree; ++k)
                for (unsigned m = 1; m <= 4; ++m) {
                    VerificationReport rep =
                        generation_membership(alg, i0, m0, DfElement{k, UPoly::monomial(m - 1)});
                    rep.name = prefix + "/k=" + pad(k) + "/m=" + std::to_string(m);
                    out.push_back(std::move(rep));
                }
            return out;
        }});
    }
    return tasks;
}

struct ModuleSetup {
    LatticeRef lattice;
    std::vector<Scalar> alpha;
    std::shared_ptr<const ParameterSet> params;
    std::string alpha_label;
};

ModuleSetup module_setup(const LatticeRef& lat, const std::string& alpha_text)
{
    ModuleSetup s;
    s.lattice = lat;
    s.alpha = parse_alpha(alpha_text, lat->dim(), s.params);
    s.alpha_label = alpha_text == "formal" ? "formal" : alpha_text;
    return s;
}

std::string half_vector(std::size_t n)
{
    std::string s = "1/2";
    for (std::size_t i = 1; i < n; ++i)
        s += ",1/2";
    return s;
}

Window default_window(const Lattice& lat, long radius) { return box_window(lat, radius); }

std::vector<Task> modules_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    std::string alpha_text = r.o.alpha.value_or("formal");
    std::size_t samples = r.samples(100);
    unsigned max_mu = r.max_mu(3);
    for (const auto& lat : r.lattices({1, 2})) {
        ModuleSetup s = module_setup(lat, alpha_text);
        long radius = r.window(lat->dim() == 1 ? 8 : 5);
        for (ModuleKind kind : r.kinds()) {
            std::string name = std::string("modules/lie/") + to_string(kind) + "/" + lattice_label(*lat);
            tasks.push_back({name, [=](std::uint64_t stream) {
                IntermediateModule m(kind, s.lattice, s.alpha, default_window(*s.lattice, radius), s.params);
                VerificationReport rep = lie_module_check(m, samples, stream, max_mu);
                rep.name = name;
                rep.parameters["alpha"] = s.alpha_label;
                return Checks{std::move(rep)};
            }});
        }
    }
    LatticeRef line = r.o.gamma || r.o.n ? r.lattices({1})[0] : make_lattice(Lattice::integers(1));
    if (line->dim() == 1) {
        ModuleSetup s = module_setup(line, alpha_text);
        for (ModuleKind kind : r.kinds()) {
            std::string name = std::string("modules/sigma/") + to_string(kind);
            tasks.push_back({name, [=](std::uint64_t) {
                IntermediateModule m(kind, s.lattice, s.alpha, default_window(*s.lattice, 8), s.params);
                VerificationReport rep = sigma_report(m);
                rep.name = name;
                return Checks{std::move(rep)};
            }});
        }
    }
    return tasks;
}

std::vector<Task> assoc_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    LatticeRef lat = r.lattices({1})[0];
    ModuleSetup s = module_setup(lat, r.o.alpha.value_or(half_vector(lat->dim())));
    std::size_t samples = r.samples(100);
    unsigned max_mu = r.max_mu(3);
    long radius = r.window(8);
    for (ModuleKind kind : r.kinds()) {
        std::string name = std::string("assoc-dichotomy/") + to_string(kind);
        tasks.push_back({name, [=](std::uint64_t stream) {
            IntermediateModule m(kind, s.lattice, s.alpha, default_window(*s.lattice, radius), s.params);
            VerificationReport rep = assoc_module_check(m, samples, stream, max_mu);
            rep.name = name;
            rep.parameters["alpha"] = s.alpha_label;
            return Checks{std::move(rep)};
        }});
    }
    return tasks;
}

/// Expected outcome of the graded scan: nothing for α ∉ Γ; for α ∈ Γ of rank one, span{y_{−α}}
/// for A and its complement for B (when −α lies in the window); otherwise at least one subspace.
VerificationReport submodule_check(std::string name, ModuleKind kind, const ModuleSetup& s, long radius,
                                   unsigned max_mu)
{
    IntermediateModule m(kind, s.lattice, s.alpha, default_window(*s.lattice, radius), s.params);
    auto found = submodule_scan(m, max_mu);
    RationalVector neg;
    for (const auto& a : s.alpha)
        neg.push_back(-a.constant_value());
    auto special = s.lattice->membership(neg);

    VerificationReport rep = make_report(std::move(name), false);
    rep.parameters = lattice_params(*s.lattice);
    rep.parameters["kind"] = to_string(kind);
    rep.parameters["alpha"] = s.alpha_label;
    rep.parameters["window"] = radius;
    rep.parameters["max_mu"] = max_mu;
    Json list = Json::array();
    for (const auto& w : found)
        list.push_back(window_json(*s.lattice, w));
    rep.details["found"] = list;
    rep.details["alpha_in_gamma"] = special.has_value();
    auto hw = highest_weight_scan(m, max_mu);
    rep.details["highest_weight"] = hw ? Json(point_text(*s.lattice, hw->gamma)) : Json(nullptr);

    if (!special || !m.contains(*special)) {
        rep.details["expected"] = "none";
        rep.passed = found.empty();
    } else if (s.lattice->rank() == 1) {
        Window expected;
        if (kind == ModuleKind::A) {
            expected.insert(*special);
            rep.details["expected"] = "span{y_" + point_text(*s.lattice, *special) + "}";
        } else {
            expected = m.window();
            expected.erase(*special);
            rep.details["expected"] = "span{y_g : g != " + point_text(*s.lattice, *special) + "}";
        }
        rep.passed = found.size() == 1 && found[0] == expected;
    } else {
        rep.details["expected"] = "at least one";
        rep.passed = !found.empty();
    }
    if (!rep.passed)
        rep.residual = list.dump();
    return rep;
}

std::vector<Task> submodules_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    unsigned max_mu = r.max_mu(2);
    struct Config {
        LatticeRef lattice;
        std::string alpha;
        long radius;
    };
    std::vector<Config> configs;
    if (r.o.alpha || r.o.gamma || r.o.n) {
        if (r.o.alpha && *r.o.alpha == "formal")
            throw Error("invalid options: submodule scans need a numeric alpha");
        LatticeRef lat = r.lattices({1})[0];
        std::string a = r.o.alpha.value_or(half_vector(lat->dim()));
        configs.push_back({lat, a, r.window(lat->dim() == 1 ? 8 : 3)});
    } else {
        LatticeRef z1 = make_lattice(Lattice::integers(1));
        LatticeRef z2 = make_lattice(Lattice::integers(2));
        long radius = r.window(8);
        configs = {{z1, "1/2", radius}, {z1, "0", radius}, {z2, "1/2,1/3", r.window(3)}, {z2, "0,0", r.window(3)}};
    }
    for (const auto& c : configs) {
        ModuleSetup s = module_setup(c.lattice, c.alpha);
        for (ModuleKind kind : r.kinds()) {
            std::string name = std::string("submodules/") + to_string(kind) + "/" + lattice_label(*c.lattice) +
                               "/alpha=" + c.alpha;
            tasks.push_back({name, [=](std::uint64_t) {
                return Checks{submodule_check(name, kind, s, c.radius, max_mu)};
            }});
        }
    }
    return tasks;
}

struct NormalizeRange {
    long k_lo = 2, k_hi = 6;
};

NormalizeRange normalize_range(const Resolved& r)
{
    NormalizeRange n;
    if (r.o.window) {
        if (*r.o.window < 5)
            throw Error("invalid options: normalize needs --window >= 5");
        n.k_lo = -(*r.o.window - 5);
        n.k_hi = *r.o.window - 5;
    }
    return n;
}

PQData normalized(ModuleKind kind, const ModuleSetup& s, const NormalizeRange& range)
{
    IntermediateModule m(kind, s.lattice, s.alpha, interval_window(range.k_lo - 5, range.k_hi + 5), s.params);
    return normalize_ddt_basis(m, range.k_lo, range.k_hi);
}

VerificationReport normalize_check(const std::string& name, ModuleKind kind, const ModuleSetup& s,
                                   const NormalizeRange& range)
{
    PQData d = normalized(kind, s, range);
    VerificationReport rep = make_report(name, true);
    rep.parameters = {{"kind", to_string(kind)}, {"alpha", s.alpha_label}, {"k_lo", range.k_lo}, {"k_hi", range.k_hi}};
    std::vector<std::string> failures;
    Json P = Json::object();
    for (long i = -1; i <= 5; ++i) {
        std::string key = "P_" + std::to_string(i);
        if (d.formal) {
            Scalar kbar = d.kbar_params->var("kbar");
            Scalar expected = rising(kbar, static_cast<unsigned>(i + 1));
            bool ok = d.p_kbar_consistent && d.P_kbar.count(i) && d.P_kbar.at(i) == expected;
            P[key] = d.P_kbar.count(i) ? d.P_kbar.at(i).to_string(*d.kbar_params) : "missing";
            if (!ok)
                failures.push_back(key + " != [kbar]^" + std::to_string(i + 1));
        } else {
            for (long k = range.k_lo; k <= range.k_hi; ++k) {
                Scalar expected = rising(Scalar(s.alpha[0].constant_value() + k), static_cast<unsigned>(i + 1));
                if (d.P.at(i).at(k) != expected)
                    failures.push_back(key + "," + std::to_string(k));
            }
            P[key] = "checked numerically for every k";
        }
    }
    rep.details["P"] = P;
    rep.details["P_rule"] = "P_{i,k} = [kbar]^{i+1} (rising), kbar = k + alpha";
    Json Q = Json::object();
    for (const auto& [i, q] : d.Q_value)
        Q["Q_" + std::to_string(i)] = q.to_string(d.params.get());
    rep.details["Q"] = Q;
    rep.details["q_independent_of_k"] = d.q_independent_of_k;
    if (!d.q_independent_of_k)
        failures.push_back("Q_{i,k} depends on k");
    for (long i : {1L, 3L, 5L})
        if (!d.Q_value.count(i) || d.Q_value.at(i) != Scalar(1))
            failures.push_back("Q_" + std::to_string(i) + " != 1");
    Scalar q2_expected = kind == ModuleKind::A ? Scalar(1) : Scalar(-1);
    if (!d.Q_value.count(2) || d.Q_value.at(2) != q2_expected)
        failures.push_back("Q_2 != " + q2_expected.to_string());
    else if (!(d.Q_value.at(2) * d.Q_value.at(2) - Scalar(1)).is_zero())
        failures.push_back("Q_2^2 != 1");
    rep.details["Q2_expected"] = q2_expected.to_string();
    if (!failures.empty()) {
        rep.passed = false;
        rep.residual = failures.front();
        rep.details["failures"] = failures;
    }
    return rep;
}

std::vector<Task> normalize_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    ModuleSetup s = module_setup(r.rank_one_lattice(), r.o.alpha.value_or("formal"));
    NormalizeRange range = normalize_range(r);
    for (ModuleKind kind : r.kinds()) {
        std::string name = std::string("normalize/") + to_string(kind);
        tasks.push_back({name, [=](std::uint64_t) { return Checks{normalize_check(name, kind, s, range)}; }});
    }
    return tasks;
}

std::vector<Task> single(const std::string& name, std::function<VerificationReport()> f)
{
    return {{name, [name, f](std::uint64_t) {
        VerificationReport rep = f();
        rep.name = name;
        return Checks{std::move(rep)};
    }}};
}

std::vector<Task> yk_suite(const Resolved& r)
{
    std::vector<Task> tasks;
    if (r.o.alpha && *r.o.alpha != "formal")
        throw Error("invalid options: weightlab-yk needs formal alpha");
    ModuleSetup s = module_setup(r.rank_one_lattice(), "formal");
    NormalizeRange range = normalize_range(r);
    for (ModuleKind kind : r.kinds()) {
        std::string name = std::string("weightlab-yk/") + to_string(kind);
        tasks.push_back({name, [=](std::uint64_t) {
            VerificationReport rep = verify_yk_relations(normalized(kind, s, range));
            rep.name = name;
            rep.parameters["kind"] = to_string(kind);
            return Checks{std::move(rep)};
        }});
    }
    return tasks;
}

using SuiteFn = std::function<std::vector<Task>(const Resolved&)>;

const std::map<std::string, SuiteFn>& registry()
{
    static const std::map<std::string, SuiteFn> suites{
        {"jacobi", jacobi_suite},
        {"oracle", oracle_suite},
        {"cocycle", cocycle_suite},
        {"onevar-identities", onevar_suite},
        {"lemma21", lemma21_suite},
        {"modules", modules_suite},
        {"assoc-dichotomy", assoc_suite},
        {"submodules", submodules_suite},
        {"normalize", normalize_suite},
        {"weightlab-p", [](const Resolved&) { return single("weightlab-p", [] { return p_series_report(build_p_series()); }); }},
        {"weightlab-215",
         [](const Resolved&) { return single("weightlab-215", [] { return virasoro_consistency(build_p_series()); }); }},
        {"weightlab-f",
         [](const Resolved&) {
             return single("weightlab-f", [] { return f_polynomial_report(build_f_polynomials(build_p_series())); });
         }},
        {"weightlab-yk", yk_suite},
    };
    return suites;
}

} // namespace

Json SuiteOptions::to_json() const
{
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"n", opt(n)},
                {"gamma", opt(gamma)},
                {"alpha", opt(alpha)},
                {"window", opt(window)},
                {"samples", opt(samples)},
                {"seed", seed},
                {"max_mu", opt(max_mu)},
                {"kind", kind ? Json(weyl::to_string(*kind)) : Json(nullptr)},
                {"subalgebra", subalgebra ? Json(cli::to_string(*subalgebra)) : Json(nullptr)}};
}

bool ReportDocument::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

Json ReportDocument::to_json() const
{
    Json list = Json::array();
    std::size_t ok = 0;
    for (const auto& c : checks) {
        list.push_back(c.to_json());
        ok += c.passed;
    }
    Json j{{"report_version", 1},
           {"grammar", grammar},
           {"suite", suite},
           {"seed", seed},
           {"options", options},
           {"passed", passed()},
           {"summary", {{"checks", checks.size()}, {"passed", ok}, {"failed", checks.size() - ok}}},
           {"checks", list}};
    if (wall_time)
        j["wall_time_s"] = *wall_time;
    return j;
}

std::string ReportDocument::to_text() const
{
    std::string out;
    std::size_t ok = 0;
    for (const auto& c : checks) {
        out += (c.passed ? "PASS " : "FAIL ") + c.name;
        if (!c.passed)
            out += ": residual " + c.residual;
        out += "\n";
        ok += c.passed;
    }
    out += "suite " + suite + ": " + std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks passed";
    if (wall_time) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " in %.2f s", *wall_time);
        out += buf;
    }
    return out + "\n";
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry())
            v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

ReportDocument run_suite(const std::string& name, const SuiteOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    validate(options);
    Resolved r{options};
    std::vector<Task> tasks;
    if (name == "all") {
        for (const auto& [suite, fn] : registry()) {
            auto t = fn(r);
            tasks.insert(tasks.end(), t.begin(), t.end());
        }
    } else {
        auto it = registry().find(name);
        if (it == registry().end())
            throw Error("unknown suite '" + name + "'");
        tasks = it->second(r);
    }

    std::vector<Checks> results(tasks.size());
    parallel_for(tasks.size(), options.jobs, [&](std::size_t i) {
        results[i] = tasks[i].run(derive_seed(options.seed, fnv1a(tasks[i].label), 0));
    });

    ReportDocument doc;
    doc.suite = name;
    doc.seed = options.seed;
    doc.options = options.to_json();
    for (auto& checks : results)
        for (auto& c : checks)
            doc.checks.push_back(std::move(c));
    std::sort(doc.checks.begin(), doc.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    if (options.timing)
        doc.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return doc;
}

LatticeRef parse_gamma(const std::string& text, std::optional<std::size_t> n)
{
    std::vector<RationalVector> gens;
    try {
        for (const auto& part : split(text, ';'))
            gens.push_back(parse_vector(trim(part)));
    } catch (const Error& e) {
        throw Error(std::string("invalid options: --gamma: ") + e.what());
    }
    if (gens.empty())
        throw Error("invalid options: --gamma is empty");
    std::size_t dim = n.value_or(gens[0].size());
    for (const auto& g : gens)
        if (g.size() != dim)
            throw Error("invalid options: --gamma generators must have n = " + std::to_string(dim) + " entries");
    return make_lattice(Lattice(gens, dim));
}

std::vector<Scalar> parse_alpha(const std::string& text, std::size_t n, std::shared_ptr<const ParameterSet>& params)
{
    std::vector<Scalar> alpha;
    if (text == "formal") {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(n == 1 ? "alpha" : "alpha" + std::to_string(i + 1));
        params = std::make_shared<const ParameterSet>(names);
        for (const auto& name : names)
            alpha.push_back(params->var(name));
        return alpha;
    }
    RationalVector v;
    try {
        v = parse_vector(text);
    } catch (const Error& e) {
        throw Error(std::string("invalid options: --alpha: ") + e.what());
    }
    if (v.size() != n)
        throw Error("invalid options: --alpha needs " + std::to_string(n) + " entries");
    for (const auto& q : v)
        alpha.emplace_back(q);
    params = nullptr;
    return alpha;
}

ModuleKind parse_kind(const std::string& text)
{
    if (text == "A")
        return ModuleKind::A;
    if (text == "B")
        return ModuleKind::B;
    throw Error("invalid options: --kind must be A or B");
}

std::string lattice_label(const Lattice& lattice)
{
    if (lattice == Lattice::integers(lattice.dim()))
        return lattice.dim() == 1 ? "Z" : "Z^" + std::to_string(lattice.dim());
    std::string s;
    for (const auto& g : lattice.generators()) {
        if (!s.empty())
            s += ";";
        for (std::size_t i = 0; i < g.size(); ++i)
            s += (i ? "," : "") + g[i].get_str();
    }
    return s;
}

} // namespace weyl::cli
