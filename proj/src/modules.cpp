#include "weyl/modules.hpp"

#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"
#include "weyl/random.hpp"

#include <algorithm>

namespace weyl {

const char* to_string(ModuleKind kind) { return kind == ModuleKind::A ? "A" : "B"; }

Window box_window(const Lattice& lattice, long radius)
{
    Window w;
    if (radius < 0)
        return w;
    std::vector<long> c(lattice.rank(), -radius);
    while (true) {
        w.insert(LatticePoint{c});
        std::size_t i = 0;
        while (i < c.size() && c[i] == radius)
            c[i++] = -radius;
        if (i == c.size())
            break;
        ++c[i];
    }
    return w;
}

Window interval_window(long lo, long hi)
{
    Window w;
    for (long k = lo; k <= hi; ++k)
        w.insert(LatticePoint{{k}});
    return w;
}

IntermediateModule::IntermediateModule(ModuleKind kind, LatticeRef lattice, std::vector<Scalar> alpha, Window window,
                                       std::shared_ptr<const ParameterSet> params)
    : kind_(kind), lattice_(std::move(lattice)), alpha_(std::move(alpha)), window_(std::move(window)),
      params_(std::move(params))
{
    if (alpha_.size() != lattice_->dim())
        throw DimensionMismatch("module shift has " + std::to_string(alpha_.size()) + " entries, expected " +
                                std::to_string(lattice_->dim()));
    for (const auto& g : window_)
        if (g.rank() != lattice_->rank())
            throw DimensionMismatch("window point of the wrong rank");
}

bool IntermediateModule::numeric() const
{
    return std::all_of(alpha_.begin(), alpha_.end(), [](const Scalar& a) { return a.is_constant(); });
}

std::string to_string(const ModuleVector& v, const IntermediateModule& m)
{
    return to_string(v, *m.lattice(), m.params().get(), "y");
}

Scalar action_coefficient(const IntermediateModule& m, const WeylMonomial& x, const LatticePoint& gamma)
{
    if (x.order() == 0)
        throw SubalgebraViolation("modules of the intermediate series are modules over W^(1) only");
    const Lattice& lattice = *m.lattice();
    RationalVector g = lattice.ambient(m.kind() == ModuleKind::A ? gamma : gamma + x.exponent);
    Scalar c(1);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (x.mu[i] > 0)
            c *= (m.alpha()[i] + Scalar(g[i])).pow(x.mu[i]);
    if (m.kind() == ModuleKind::B && x.order() % 2 == 0)
        c = -c;
    return c;
}

ModuleVector act(const IntermediateModule& m, const WeylMonomial& x, const LatticePoint& gamma)
{
    LatticePoint target = gamma + x.exponent;
    if (!m.contains(gamma) || !m.contains(target))
        throw WindowEscape("action leaves the window: y_" + to_string(*m.lattice(), gamma) + " -> y_" +
                           to_string(*m.lattice(), target));
    ModuleVector r;
    Scalar c = action_coefficient(m, x, gamma);
    if (!c.is_zero())
        r.emplace(target, std::move(c));
    return r;
}

ModuleVector act(const IntermediateModule& m, const WeylElement& x, const ModuleVector& v)
{
    if (!same_lattice(x.lattice(), m.lattice()))
        throw LatticeMismatch("element and module live over different lattices");
    WeylElement p = to_power(x.without_central());
    ModuleVector r;
    for (const auto& [g, cv] : v)
        for (const auto& [mono, cx] : p.terms())
            for (const auto& [target, c] : act(m, mono, g)) {
                Scalar& slot = r[target];
                slot += cx * cv * c;
                if (slot.is_zero())
                    r.erase(target);
            }
    return r;
}

namespace {

ModuleVector subtract(ModuleVector a, const ModuleVector& b)
{
    for (const auto& [g, c] : b) {
        Scalar& slot = a[g];
        slot -= c;
        if (slot.is_zero())
            a.erase(g);
    }
    return a;
}

ModuleVector basis_vector(const LatticePoint& g) { return ModuleVector{{g, Scalar(1)}}; }

struct Sample {
    WeylElement x, y;
    LatticePoint gamma;
};

/// Random x, y of W^(1) and a basis vector y_γ such that every action involved stays in the window.
Sample draw_sample(const IntermediateModule& m, Rng& rng, unsigned max_mu)
{
    ElementShape shape{2, 1, max_mu, 2, Basis::power};
    for (int attempt = 0; attempt < 1000; ++attempt) {
        WeylElement x = random_homogeneous(m.lattice(), rng, shape);
        WeylElement y = random_homogeneous(m.lattice(), rng, shape);
        LatticePoint bx = *grade(x), by = *grade(y);
        std::vector<LatticePoint> admissible;
        for (const auto& g : m.window())
            if (m.contains(g + bx) && m.contains(g + by) && m.contains(g + bx + by))
                admissible.push_back(g);
        if (admissible.empty())
            continue;
        LatticePoint g = admissible[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<long>(admissible.size()) - 1))];
        return Sample{std::move(x), std::move(y), std::move(g)};
    }
    throw WindowEscape("window too small to sample double actions");
}

Json module_parameters(const IntermediateModule& m, std::size_t samples, std::uint64_t seed, unsigned max_mu)
{
    Json alpha = Json::array();
    for (const auto& a : m.alpha())
        alpha.push_back(a.to_string(m.params().get()));
    return Json{{"kind", to_string(m.kind())},
                {"alpha", alpha},
                {"window_size", m.window().size()},
                {"samples", samples},
                {"seed", seed},
                {"max_mu", max_mu}};
}

WeylElement unit_probe(const IntermediateModule& m)
{
    std::size_t n = m.lattice()->dim();
    std::vector<unsigned> mu(n, 0);
    mu[0] = 1;
    // Point whose ambient value is the first unit vector when it lies in Γ, else the first generator.
    RationalVector e(n, Rational(0));
    e[0] = 1;
    auto p = m.lattice()->membership(e);
    return WeylElement::monomial(m.lattice(), p ? *p : m.lattice()->basis(0), mu);
}

} // namespace

VerificationReport lie_module_check(const IntermediateModule& m, std::size_t samples, std::uint64_t seed,
                                    unsigned max_mu)
{
    Rng rng(seed);
    const ParameterSet* params = m.params().get();
    std::vector<VerificationReport> out;
    out.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        Sample smp = draw_sample(m, rng, max_mu);
        ModuleVector v = basis_vector(smp.gamma);
        ModuleVector lhs = act(m, bracket(smp.x, smp.y), v);
        ModuleVector rhs = subtract(act(m, smp.x, act(m, smp.y, v)), act(m, smp.y, act(m, smp.x, v)));
        ModuleVector residual = subtract(lhs, rhs);
        VerificationReport r;
        r.name = "lie-module";
        r.passed = residual.empty();
        r.residual = to_string(residual, m);
        r.witnesses = {to_string(smp.x, params), to_string(smp.y, params), to_string(v, m)};
        out.push_back(std::move(r));
    }
    VerificationReport r = aggregate(std::string("lie-module-") + to_string(m.kind()), out);
    r.parameters = module_parameters(m, samples, seed, max_mu);
    return r;
}

VerificationReport assoc_module_check(const IntermediateModule& m, std::size_t samples, std::uint64_t seed,
                                      unsigned max_mu)
{
    Rng rng(seed);
    const ParameterSet* params = m.params().get();
    std::size_t nonzero = 0;
    Json first = nullptr;
    auto run = [&](const WeylElement& x, const WeylElement& y, const LatticePoint& g) {
        ModuleVector v = basis_vector(g);
        ModuleVector lhs = act(m, mul(x, y), v);
        ModuleVector rhs = act(m, x, act(m, y, v));
        ModuleVector residual = subtract(lhs, rhs);
        if (residual.empty())
            return;
        ++nonzero;
        if (first.is_null())
            first = Json{{"x", to_string(x, params)},
                         {"y", to_string(y, params)},
                         {"v", to_string(v, m)},
                         {"product_action", to_string(lhs, m)},
                         {"staged_action", to_string(rhs, m)},
                         {"residual", to_string(residual, m)}};
    };
    WeylElement probe = unit_probe(m);
    LatticePoint zero = m.lattice()->zero();
    LatticePoint step = *grade(probe);
    std::size_t total = 0;
    if (m.contains(zero) && m.contains(step) && m.contains(step + step)) {
        run(probe, probe, zero);
        ++total;
    }
    for (; total < samples; ++total) {
        Sample smp = draw_sample(m, rng, max_mu);
        run(smp.x, smp.y, smp.gamma);
    }
    VerificationReport r;
    r.name = std::string("assoc-dichotomy-") + to_string(m.kind());
    r.parameters = module_parameters(m, samples, seed, max_mu);
    r.details["expected"] = m.kind() == ModuleKind::A ? "associative" : "not associative";
    r.details["samples"] = total;
    r.details["nonzero_residuals"] = nonzero;
    r.details["first_nonzero"] = first;
    if (m.kind() == ModuleKind::A) {
        r.passed = nonzero == 0;
        r.residual = first.is_null() ? "0" : first["residual"].get<std::string>();
    } else {
        r.passed = nonzero > 0;
        r.residual = first.is_null() ? "0" : first["residual"].get<std::string>();
        if (!first.is_null())
            r.witnesses = {first["x"], first["y"], first["v"]};
    }
    return r;
}

namespace {

std::vector<std::vector<unsigned>> multi_exponents(std::size_t n, unsigned max_mu)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> mu(n, 0);
    while (true) {
        unsigned total = 0;
        for (unsigned u : mu)
            total += u;
        if (total >= 1 && total <= max_mu)
            out.push_back(mu);
        std::size_t i = 0;
        while (i < n && mu[i] == max_mu)
            mu[i++] = 0;
        if (i == n)
            break;
        ++mu[i];
    }
    return out;
}

/// Some t^β D^μ with 1 <= |μ| <= max_mu maps y_γ to a nonzero multiple of y_{γ+β}.
bool reaches(const IntermediateModule& m, const LatticePoint& gamma, const LatticePoint& beta,
             const std::vector<std::vector<unsigned>>& mus)
{
    for (const auto& mu : mus)
        if (!action_coefficient(m, WeylMonomial{beta, mu}, gamma).is_zero())
            return true;
    return false;
}

void require_numeric(const IntermediateModule& m, const char* what)
{
    if (!m.numeric())
        throw DomainError(std::string(what) + " needs a numeric shift α");
}

} // namespace

std::vector<Window> submodule_scan(const IntermediateModule& m, unsigned max_mu)
{
    require_numeric(m, "submodule_scan");
    auto mus = multi_exponents(m.lattice()->dim(), max_mu);
    std::map<LatticePoint, std::vector<LatticePoint>> edges;
    for (const auto& g : m.window())
        for (const auto& h : m.window())
            if (reaches(m, g, h - g, mus))
                edges[g].push_back(h);

    std::set<Window> found;
    for (const auto& g : m.window()) {
        Window closure{g};
        std::vector<LatticePoint> stack{g};
        while (!stack.empty()) {
            LatticePoint p = stack.back();
            stack.pop_back();
            for (const auto& h : edges[p])
                if (closure.insert(h).second)
                    stack.push_back(h);
        }
        if (closure.size() < m.window().size())
            found.insert(std::move(closure));
    }
    return {found.begin(), found.end()};
}

std::optional<HighestWeightWitness> highest_weight_scan(const IntermediateModule& m, unsigned max_mu)
{
    require_numeric(m, "highest_weight_scan");
    auto mus = multi_exponents(m.lattice()->dim(), max_mu);
    GradingWindow positive = GradingWindow::positive();
    GradingWindow negative = GradingWindow::negative();
    const Lattice& lattice = *m.lattice();
    for (const auto& g : m.window()) {
        bool some_action = false, killed = true, killed_below = true;
        for (const auto& h : m.window()) {
            LatticePoint beta = h - g;
            if (positive.contains(lattice, beta)) {
                some_action = true;
                killed = killed && !reaches(m, g, beta, mus);
            } else if (negative.contains(lattice, beta)) {
                killed_below = killed_below && !reaches(m, g, beta, mus);
            }
        }
        if (!some_action || !killed)
            continue;
        HighestWeightWitness w{g, killed_below, ""};
        if (killed_below)
            w.caveat = "y_" + to_string(lattice, g) +
                       " is annihilated by every action in the window: it is also a lowest-weight vector "
                       "spanning a trivial submodule";
        return w;
    }
    return std::nullopt;
}

namespace {

/// Writes a polynomial in the single variable `var` of `from` as a polynomial in variable 0.
Scalar as_univariate(const Scalar& s, std::size_t var)
{
    Scalar r;
    for (const auto& [e, c] : s.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw DomainError("normalized entry depends on parameters other than the shift");
        std::uint32_t p = var < e.size() ? e[var] : 0;
        r += Scalar::monomial(Scalar::Exponent{p}, c);
    }
    return r;
}

} // namespace

PQData normalize_ddt_basis(const IntermediateModule& m, long k_lo, long k_hi)
{
    if (m.lattice()->dim() != 1 || *m.lattice() != Lattice::integers(1))
        throw DomainError("normalize_ddt_basis needs Γ = Z");
    if (k_lo > k_hi)
        throw DomainError("empty k range");
    const LatticeRef& lat = m.lattice();
    auto coefficient = [&](long i, unsigned mu, long k) {
        WeylMonomial x{LatticePoint{{i}}, {mu}};
        ModuleVector v = act(m, x, LatticePoint{{k}});
        return v.empty() ? Scalar(0) : v.begin()->second;
    };
    auto ddt_coefficient = [&](long i, long k) {
        WeylElement x = WeylElement::monomial(lat, LatticePoint{{-i}}, {static_cast<unsigned>(i)}, Scalar(1),
                                              Basis::falling);
        ModuleVector v = act(m, x, ModuleVector{{LatticePoint{{k}}, Scalar(1)}});
        return v.empty() ? Scalar(0) : v.begin()->second;
    };

    // (t^{-1}D) y_k = a_k y_{k-1}; Y_k = c_k y_k with c_{k-1} = a_k c_k, so
    // c_k / c_{k+i} = a_{k+1} ... a_{k+i}.
    std::map<long, Scalar> a;
    for (long k = k_lo - 4; k <= k_hi + 5; ++k) {
        a[k] = coefficient(-1, 1, k);
        if (a[k].is_zero())
            throw DomainError("vanishing rescale factor: (t^-1 D) y_" + std::to_string(k) + " = 0");
    }
    auto ratio = [&](long from, long to) {  // c_from / c_to for to >= from
        Scalar r(1);
        for (long k = from + 1; k <= to; ++k)
            r *= a.at(k);
        return r;
    };

    PQData d;
    d.kind = m.kind();
    d.k_lo = k_lo;
    d.k_hi = k_hi;
    d.params = m.params();
    for (long k = k_lo; k <= k_hi; ++k) {
        for (long i = -1; i <= 5; ++i) {
            Scalar c = coefficient(i, 1, k);
            if (i >= 0) {
                d.P[i][k] = c * ratio(k, k + i);
            } else {
                auto q = c.divide_exact(ratio(k - 1, k));
                if (!q)
                    throw DomainError("normalized entry is not polynomial");
                d.P[i][k] = *q;
            }
        }
        for (long i = 1; i <= 5; ++i) {
            auto q = ddt_coefficient(i, k).divide_exact(ratio(k - i, k));
            if (!q)
                throw DomainError("normalized entry is not polynomial");
            d.Q[i][k] = *q;
        }
    }
    d.q_independent_of_k = true;
    for (const auto& [i, row] : d.Q) {
        const Scalar& first = row.begin()->second;
        bool same = std::all_of(row.begin(), row.end(), [&](const auto& e) { return e.second == first; });
        d.q_independent_of_k = d.q_independent_of_k && same;
        if (same)
            d.Q_value[i] = first;
    }

    const Scalar& alpha = m.alpha()[0];
    if (alpha.is_constant()) {
        Rational al = alpha.constant_value();
        std::optional<Scalar> p1, p2;
        bool constant = true;
        for (long k = k_lo; k <= k_hi; ++k) {
            Scalar kb(al + k);
            Scalar c1 = d.P[1][k] - rising(kb, 2);
            Scalar c2 = d.P[2][k] - rising(kb, 3) - Scalar(3) * kb * c1;
            if (p1 && (*p1 != c1 || *p2 != c2))
                constant = false;
            p1 = c1;
            p2 = c2;
        }
        if (constant) {
            d.P1 = p1;
            d.P2 = p2;
        }
        return d;
    }

    // Formal α = c v + e in one variable v: substitute v = (kbar − k − e)/c.
    if (alpha.total_degree() != 1)
        throw DomainError("formal shift must be linear in one parameter");
    std::optional<std::size_t> var;
    for (std::size_t i = 0; m.params() && i < m.params()->size(); ++i)
        if (alpha.depends_on(i)) {
            if (var)
                throw DomainError("formal shift must be linear in one parameter");
            var = i;
        }
    if (!var)
        throw DomainError("formal shift needs its parameter set");
    Rational slope = alpha.coefficient_of(*var, 1).constant_value();
    Rational offset = alpha.coefficient_of(*var, 0).constant_value();
    d.formal = true;
    d.kbar_params = std::make_shared<const ParameterSet>(std::vector<std::string>{"kbar"});
    const std::size_t kbar_index = m.params()->size();
    Scalar kbar_var = Scalar::variable(kbar_index);
    d.p_kbar_consistent = true;
    for (const auto& [i, row] : d.P) {
        std::optional<Scalar> form;
        for (const auto& [k, value] : row) {
            Scalar v = (kbar_var - Scalar(Rational(k) + offset)) / slope;
            Scalar f = as_univariate(value.substitute(*var, v), kbar_index);
            if (form && *form != f)
                d.p_kbar_consistent = false;
            form = f;
        }
        d.P_kbar[i] = *form;
    }
    if (d.p_kbar_consistent) {
        Scalar kb = Scalar::variable(0);
        Scalar p1 = d.P_kbar[1] - rising(kb, 2);
        d.P1 = p1;
        d.P2 = d.P_kbar[2] - rising(kb, 3) - Scalar(3) * kb * p1;
    }
    return d;
}

namespace {

WeylElement sigma_factor_left(const LatticeRef& lat)
{
    return to_power(WeylElement::monomial(lat, LatticePoint{{-2}}, {2}, Scalar(1), Basis::falling));
}

WeylElement sigma_factor_right(const LatticeRef& lat) { return WeylElement::monomial(lat, LatticePoint{{2}}, {1}); }

Scalar coefficient_at_zero(const ModuleVector& v)
{
    auto it = v.find(LatticePoint{{0}});
    return it == v.end() ? Scalar(0) : it->second;
}

} // namespace

Scalar sigma_eval(const IntermediateModule& m)
{
    if (m.lattice()->dim() != 1 || *m.lattice() != Lattice::integers(1))
        throw DomainError("sigma needs Γ = Z");
    const LatticeRef& lat = m.lattice();
    ModuleVector y0{{LatticePoint{{0}}, Scalar(1)}};
    return coefficient_at_zero(act(m, sigma_factor_left(lat), act(m, sigma_factor_right(lat), y0)));
}

VerificationReport sigma_report(const IntermediateModule& m)
{
    const LatticeRef& lat = m.lattice();
    const ParameterSet* params = m.params().get();
    Scalar staged = sigma_eval(m);
    ModuleVector y0{{LatticePoint{{0}}, Scalar(1)}};
    WeylElement product = mul(sigma_factor_left(lat), sigma_factor_right(lat));
    Scalar product_value = coefficient_at_zero(act(m, product, y0));

    const Scalar& alpha = m.alpha()[0];
    Scalar zero_bar_cubed = rising(alpha, 3);
    Scalar two_bar_cubed = rising(alpha + Scalar(2), 3);

    // Q_2 of the rescaled basis: (d/dt)^2 y_2 = b y_0 and c_2/c_0 = 1/(a_1 a_2).
    auto a = [&](long k) {
        ModuleVector v = act(m, WeylMonomial{LatticePoint{{-1}}, {1}}, LatticePoint{{k}});
        return v.empty() ? Scalar(0) : v.begin()->second;
    };
    Scalar b = coefficient_at_zero(act(m, sigma_factor_left(lat), ModuleVector{{LatticePoint{{2}}, Scalar(1)}}));
    std::optional<Scalar> q2;
    Scalar denom = a(1) * a(2);
    if (!denom.is_zero())
        q2 = b.divide_exact(denom);

    VerificationReport r;
    r.name = std::string("sigma-") + to_string(m.kind());
    r.parameters = {{"kind", to_string(m.kind())}, {"alpha", alpha.to_string(params)}};
    r.details["staged"] = staged.to_string(params);
    r.details["product_element"] = to_string(product);
    r.details["product_element_action"] = product_value.to_string(params);
    r.details["product_equals_staged"] = product_value == staged;
    r.details["zero_bar_rising_cubed"] = zero_bar_cubed.to_string(params);
    r.details["two_bar_rising_cubed"] = two_bar_cubed.to_string(params);
    if (q2) {
        Scalar expected = zero_bar_cubed * *q2;
        r.details["Q2"] = q2->to_string(params);
        r.details["matches_zero_bar"] = staged == expected;
        r.details["matches_two_bar_as_printed"] = staged == two_bar_cubed * *q2;
        r.passed = staged == expected;
        r.residual = (staged - expected).to_string(params);
    } else {
        // Degenerate normalization: the rescale factor vanishes, only the zero factor can be checked.
        r.details["Q2"] = nullptr;
        r.passed = zero_bar_cubed.is_zero() && staged.is_zero();
        r.residual = staged.to_string(params);
    }
    return r;
}

} // namespace weyl
