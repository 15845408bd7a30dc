// weylcas: command-line front end for the Weyl-type algebra library.
//
// Exit status: 0 when every check passes, 1 when some check fails, 2 on usage errors.

#include "CLI11.hpp"
#include "weyl/cli/expr.hpp"
#include "weyl/cli/suites.hpp"
#include "weyl/error.hpp"
#include "weyl/onevar.hpp"
#include "weyl/weightlab.hpp"

#include <fstream>
#include <iostream>

using namespace weyl;
using namespace weyl::cli;

namespace {

struct Common {
    std::optional<std::size_t> n;
    std::optional<std::string> gamma, alpha, kind, subalgebra, json;
    std::optional<long> window;
    std::optional<std::size_t> samples;
    std::optional<unsigned> max_mu;
    std::uint64_t seed = 7;
    unsigned jobs = 0;
    bool timing = false;
    std::string params;
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--n", c.n, "Number of variables");
    app->add_option("--gamma", c.gamma, "Lattice generators \"g1;g2;...\", entries separated by ','");
    app->add_option("--alpha", c.alpha, "Module shift: rational vector or 'formal'");
    app->add_option("--window", c.window, "Window radius (or degree cap)");
    app->add_option("--samples", c.samples, "Random samples per check");
    app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app->add_option("--max-mu", c.max_mu, "Bound on |mu|");
    app->add_option("--json", c.json, "Write the JSON report to this path ('-' for stdout)");
    app->add_option("--kind", c.kind, "Module kind A or B");
    app->add_option("--subalgebra", c.subalgebra, "w1, full or hat");
    app->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");
    app->add_flag("--timing", c.timing, "Record wall time in the report");
}

SuiteOptions suite_options(const Common& c)
{
    SuiteOptions o;
    o.n = c.n;
    o.gamma = c.gamma;
    o.alpha = c.alpha;
    o.window = c.window;
    o.samples = c.samples;
    o.seed = c.seed;
    o.max_mu = c.max_mu;
    if (c.kind)
        o.kind = parse_kind(*c.kind);
    if (c.subalgebra)
        o.subalgebra = parse_mode(*c.subalgebra);
    o.jobs = c.jobs;
    o.timing = c.timing;
    return o;
}

LatticeRef lattice_of(const Common& c, std::size_t default_n = 1)
{
    if (c.gamma)
        return parse_gamma(*c.gamma, c.n);
    return make_lattice(Lattice::integers(c.n.value_or(default_n)));
}

Session session_of(const Common& c, Mode fallback)
{
    std::vector<std::string> names;
    std::string cur;
    for (char ch : c.params + ",") {
        if (ch == ',') {
            if (!cur.empty())
                names.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    Mode mode = c.subalgebra ? parse_mode(*c.subalgebra) : fallback;
    return Session::make(lattice_of(c), names, mode);
}

void write_json(const Common& c, const Json& j)
{
    if (!c.json)
        return;
    std::string text = j.dump(2) + "\n";
    if (*c.json == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(*c.json);
    if (!out)
        throw Error("cannot write " + *c.json);
    out << text;
}

int emit(const Common& c, const VerificationReport& r)
{
    if (!c.json || *c.json != "-") {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
        std::cout << "  parameters: " << r.parameters.dump() << "\n";
        std::cout << "  residual: " << r.residual << "\n";
        for (const auto& w : r.witnesses)
            std::cout << "  " << w << "\n";
        for (const auto& [k, v] : r.details.items())
            std::cout << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    Json j = r.to_json();
    j["grammar"] = grammar_version;
    write_json(c, j);
    return r.passed ? 0 : 1;
}

std::shared_ptr<const ParameterSet> module_params;

IntermediateModule module_of(const Common& c, ModuleKind fallback_kind, const std::string& fallback_alpha,
                             long fallback_radius)
{
    LatticeRef lat = lattice_of(c);
    ModuleKind kind = c.kind ? parse_kind(*c.kind) : fallback_kind;
    auto alpha = parse_alpha(c.alpha.value_or(fallback_alpha), lat->dim(), module_params);
    return IntermediateModule(kind, lat, alpha, box_window(*lat, c.window.value_or(fallback_radius)), module_params);
}

LatticePoint point_of(const std::string& text, const Lattice& lat)
{
    RationalVector v;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            v.push_back(parse_rational(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (v.size() != lat.dim())
        throw Error("point '" + text + "' needs " + std::to_string(lat.dim()) + " entries");
    auto p = lat.membership(v);
    if (!p)
        throw Error("point '" + text + "' is not in the lattice");
    return *p;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in Weyl-type algebras, their central extension and intermediate-series modules"};
    app.require_subcommand(1);
    Common c;

    std::string expr_text;
    bool tree = false;
    std::string basis;
    auto* eval_cmd = app.add_subcommand("eval", "Parse and evaluate an expression, print its canonical form");
    add_common(eval_cmd, c);
    eval_cmd->add_option("expr", expr_text, "Expression (see FORMAT.md)")->required();
    eval_cmd->add_option("--params", c.params, "Comma-separated parameter names");
    eval_cmd->add_option("--basis", basis, "Print in the power or falling basis")->check(CLI::IsMember({"power", "falling"}));
    eval_cmd->add_flag("--tree", tree, "Also print the parse tree");

    std::string suite_name;
    auto* suite_cmd = app.add_subcommand("suite", "Run a named verification suite");
    add_common(suite_cmd, c);
    suite_cmd->add_option("name", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_names()));

    std::string identity_name;
    long identity_i = 1;
    auto* identity_cmd = app.add_subcommand("identity", "Check one named operator identity (L23-1, L23-2, L23-3, CUBE)");
    add_common(identity_cmd, c);
    identity_cmd->add_option("name", identity_name, "Identity name")->required()->check(CLI::IsMember(named_identities()));
    identity_cmd->add_option("--i", identity_i, "Index i")->capture_default_str();

    long i0 = 1, target_k = 3;
    unsigned m0 = 2, target_m = 1;
    auto* lemma_cmd = app.add_subcommand("lemma21", "Certify membership of t^k D^m in the truncated generated subalgebra");
    add_common(lemma_cmd, c);
    lemma_cmd->add_option("--i0", i0)->capture_default_str();
    lemma_cmd->add_option("--m0", m0)->capture_default_str();
    lemma_cmd->add_option("--k", target_k, "Target degree")->capture_default_str();
    lemma_cmd->add_option("--m", target_m, "Target D-power")->capture_default_str()->check(CLI::PositiveNumber);

    std::string at_text = "0";
    auto* act_cmd = app.add_subcommand("act", "Apply an element to a basis vector y_gamma of A_alpha or B_alpha");
    add_common(act_cmd, c);
    act_cmd->add_option("expr", expr_text, "Element of W^(1)")->required();
    act_cmd->add_option("--at", at_text, "Degree gamma of the basis vector")->capture_default_str();

    auto* sub_cmd = app.add_subcommand("submodules", "Scan a truncated module for graded invariant subspaces");
    add_common(sub_cmd, c);

    long k_lo = 2, k_hi = 6;
    auto* norm_cmd = app.add_subcommand("normalize", "Normalized basis data P_{i,k}, Q_{i,k} of a rank-one module");
    add_common(norm_cmd, c);
    norm_cmd->add_option("--k-lo", k_lo)->capture_default_str();
    norm_cmd->add_option("--k-hi", k_hi)->capture_default_str();

    auto* sigma_cmd = app.add_subcommand("sigma", "The scalar of sigma on V_0");
    add_common(sigma_cmd, c);

    auto* pseries_cmd = app.add_subcommand("pseries", "The p-series closed forms and their rederivation");
    add_common(pseries_cmd, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval_cmd) {
            Session s = session_of(c, Mode::full);
            Expr e = parse(expr_text);
            if (tree)
                std::cout << to_string(e) << "\n";
            Value v = eval(e, s);
            if (auto* x = std::get_if<WeylElement>(&v); x && !basis.empty())
                v = basis == "power" ? to_power(*x) : to_falling(*x);
            std::string text = to_string(v, s);
            if (!c.json || *c.json != "-")
                std::cout << text << "\n";
            write_json(c, Json{{"grammar", grammar_version},
                               {"input", expr_text},
                               {"type", std::holds_alternative<Scalar>(v) ? "scalar" : "element"},
                               {"value", text}});
            return 0;
        }
        if (*suite_cmd) {
            ReportDocument doc = run_suite(suite_name, suite_options(c));
            if (!c.json || *c.json != "-")
                std::cout << doc.to_text();
            write_json(c, doc.to_json());
            return doc.passed() ? 0 : 1;
        }
        if (*identity_cmd)
            return emit(c, verify_named_identity(identity_name, identity_i));
        if (*lemma_cmd) {
            SubalgebraCaps caps;
            if (c.window)
                caps.max_degree = *c.window;
            if (target_k > caps.max_degree)
                caps.max_degree = target_k;
            DfElement target{target_k, UPoly::monomial(target_m - 1)};
            return emit(c, generation_membership(i0, m0, target, caps));
        }
        if (*act_cmd) {
            IntermediateModule m = module_of(c, ModuleKind::A, "1/2", 8);
            std::vector<std::string> names = m.params() ? m.params()->names() : std::vector<std::string>{};
            Session s = Session::make(m.lattice(), names, Mode::w1);
            WeylElement x = as_element(evaluate(expr_text, s), s);
            LatticePoint g = point_of(at_text, *m.lattice());
            ModuleVector out = act(m, x, ModuleVector{{g, Scalar(1)}});
            std::string text = to_string(out, m);
            if (!c.json || *c.json != "-")
                std::cout << text << "\n";
            write_json(c, Json{{"grammar", grammar_version},
                               {"kind", to_string(m.kind())},
                               {"element", to_string(x, s.params.get())},
                               {"gamma", at_text},
                               {"value", text}});
            return 0;
        }
        if (*sub_cmd) {
            IntermediateModule m = module_of(c, ModuleKind::A, "1/2", 8);
            auto found = submodule_scan(m, c.max_mu.value_or(2));
            auto hw = highest_weight_scan(m, c.max_mu.value_or(2));
            Json list = Json::array();
            for (const auto& w : found) {
                Json degrees = Json::array();
                for (const auto& p : w)
                    degrees.push_back(to_string(*m.lattice(), p));
                list.push_back(degrees);
            }
            if (!c.json || *c.json != "-") {
                std::cout << found.size() << " proper graded invariant subspace(s)\n";
                for (const auto& d : list)
                    std::cout << "  span{y_g : g in " << d.dump() << "}\n";
                if (hw)
                    std::cout << "highest weight vector y_" << to_string(*m.lattice(), hw->gamma)
                              << (hw->also_lowest ? " (also lowest)" : "") << "\n  " << hw->caveat << "\n";
            }
            write_json(c, Json{{"kind", to_string(m.kind())},
                               {"subspaces", list},
                               {"highest_weight", hw ? Json(to_string(*m.lattice(), hw->gamma)) : Json(nullptr)}});
            return 0;
        }
        if (*norm_cmd) {
            LatticeRef lat = lattice_of(c);
            ModuleKind kind = c.kind ? parse_kind(*c.kind) : ModuleKind::A;
            auto alpha = parse_alpha(c.alpha.value_or("formal"), lat->dim(), module_params);
            IntermediateModule m(kind, lat, alpha, interval_window(k_lo - 5, k_hi + 5), module_params);
            PQData d = normalize_ddt_basis(m, k_lo, k_hi);
            Json j{{"kind", to_string(kind)}, {"k_lo", k_lo}, {"k_hi", k_hi}, {"q_independent_of_k", d.q_independent_of_k}};
            for (const auto& [i, row] : d.P)
                for (const auto& [k, v] : row)
                    j["P"][std::to_string(i)][std::to_string(k)] = v.to_string(d.params.get());
            for (const auto& [i, v] : d.Q_value)
                j["Q"][std::to_string(i)] = v.to_string(d.params.get());
            for (const auto& [i, v] : d.P_kbar)
                j["P_kbar"][std::to_string(i)] = v.to_string(d.kbar_params.get());
            if (!c.json || *c.json != "-") {
                for (const auto& [i, v] : d.P_kbar)
                    std::cout << "P_" << i << ",k = " << v.to_string(d.kbar_params.get()) << "\n";
                for (const auto& [i, v] : d.Q_value)
                    std::cout << "Q_" << i << " = " << v.to_string(d.params.get()) << "\n";
                if (!d.formal)
                    std::cout << "(numeric shift: see --json for P_{i,k} by k)\n";
            }
            write_json(c, j);
            return 0;
        }
        if (*sigma_cmd) {
            LatticeRef lat = lattice_of(c);
            ModuleKind kind = c.kind ? parse_kind(*c.kind) : ModuleKind::A;
            auto alpha = parse_alpha(c.alpha.value_or("formal"), lat->dim(), module_params);
            IntermediateModule m(kind, lat, alpha, box_window(*lat, c.window.value_or(8)), module_params);
            return emit(c, sigma_report(m));
        }
        if (*pseries_cmd) {
            PSeries s = build_p_series();
            const ParameterSet& p = weight_params();
            Json j;
            for (const auto& [i, v] : s.transcribed)
                j["transcribed"][std::to_string(i)] = v.to_string(p);
            for (const auto& [i, v] : s.derived)
                j["derived"][std::to_string(i)] = v.to_string(p);
            if (!c.json || *c.json != "-")
                for (const auto& [i, v] : s.transcribed)
                    std::cout << "p_" << i << ",k = " << v.to_string(p)
                              << (s.derived.count(i) && s.derived.at(i) != v ? "   (derivation differs)" : "") << "\n";
            write_json(c, j);
            VerificationReport r = p_series_report(s);
            return r.passed ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        if (!expr_text.empty() && e.position() <= expr_text.size())
            std::cerr << "  " << expr_text << "\n  " << std::string(e.position(), ' ') << "^\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
