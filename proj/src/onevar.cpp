#include "weyl/onevar.hpp"

#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"

#include <algorithm>
#include <functional>

namespace weyl {

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(unsigned power, const Rational& c)
{
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::shifted_variable(const Rational& a) { return UPoly(std::vector<Rational>{a, Rational(1)}); }

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UPoly::coefficient(unsigned power) const { return power < c_.size() ? c_[power] : Rational(0); }

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (other.c_.size() > c_.size())
        c_.resize(other.c_.size(), Rational(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k)
        c_[k] += other.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other)
{
    if (other.c_.size() > c_.size())
        c_.resize(other.c_.size(), Rational(0));
    for (std::size_t k = 0; k < other.c_.size(); ++k)
        c_[k] -= other.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& factor)
{
    if (factor == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= factor;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

UPoly UPoly::shift(const Rational& a) const
{
    UPoly r;
    UPoly x = shifted_variable(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + constant(*it);
    return r;
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::string UPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = a == 1 && k > 0;
        if (!unit)
            out += weyl::to_string(a);
        if (k > 0) {
            if (!unit)
                out += "*";
            out += "D";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

const LatticeRef& integer_line()
{
    static const LatticeRef z = make_lattice(Lattice::integers(1));
    return z;
}

WeylElement to_weyl(const DfElement& x)
{
    WeylElement r(integer_line());
    const auto& c = x.f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            r.add(WeylMonomial{LatticePoint{{x.degree}}, {static_cast<unsigned>(k + 1)}}, Scalar(c[k]));
    return r;
}

DfElement to_df(const WeylElement& x)
{
    if (x.dim() != 1 || *x.lattice() != Lattice::integers(1))
        throw DomainError("Df normal form needs an element of W(Z,1)");
    if (!x.central().is_zero())
        throw DomainError("Df normal form has no central part");
    WeylElement p = to_power(x);
    if (p.is_zero())
        return {};
    auto g = grade(p);
    if (!g)
        throw DomainError("Df normal form needs a homogeneous element");
    std::vector<Rational> f;
    for (const auto& [m, c] : p.terms()) {
        if (m.mu[0] == 0)
            throw SubalgebraViolation("Df normal form needs an element of W^(1)");
        auto value = c.as_rational();
        if (!value)
            throw DomainError("Df normal form needs rational coefficients");
        std::size_t k = m.mu[0] - 1;
        if (f.size() <= k)
            f.resize(k + 1, Rational(0));
        f[k] = *value;
    }
    return DfElement{g->coords[0], UPoly(std::move(f))};
}

DfElement df_bracket(long i, const UPoly& f, long j, const UPoly& g)
{
    UPoly left = UPoly::shifted_variable(j) * f.shift(j) * g;
    UPoly right = UPoly::shifted_variable(i) * g.shift(i) * f;
    return DfElement{i + j, left - right};
}

WeylElement ddt_power(long j)
{
    if (j < 1)
        throw DomainError("(d/dt)^j needs j >= 1");
    WeylElement r = WeylElement::monomial(integer_line(), LatticePoint{{-j}}, {static_cast<unsigned>(j)}, Scalar(1),
                                          Basis::falling);
    return to_power(r);
}

WeylElement ddt_power_or_zero(long j)
{
    if (j < 0)
        return WeylElement(integer_line());
    if (j == 0)
        return WeylElement::monomial(integer_line(), LatticePoint{{0}}, {0});
    return ddt_power(j);
}

WeylElement t_ddt(long a) { return WeylElement::monomial(integer_line(), LatticePoint{{a - 1}}, {1}); }

const std::vector<std::string>& named_identities()
{
    static const std::vector<std::string> names{"CUBE", "L23-1", "L23-2", "L23-3"};
    return names;
}

const std::vector<std::string>& l23_3_readings()
{
    static const std::vector<std::string> names{"a", "b", "c"};
    return names;
}

namespace {

WeylElement br(const WeylElement& x, const WeylElement& y) { return bracket(x, y); }

Scalar falling_int(long x, unsigned j) { return Scalar(falling(Rational(x), j)); }

VerificationReport identity_report(const std::string& name, long i, const WeylElement& lhs, const WeylElement& rhs)
{
    VerificationReport r;
    r.name = name;
    r.parameters = {{"i", i}};
    WeylElement residual = lhs - rhs;
    r.passed = residual.is_zero();
    r.residual = to_string(residual);
    r.witnesses = {to_string(lhs), to_string(rhs)};
    return r;
}

} // namespace

VerificationReport verify_named_identity(const std::string& name, long i)
{
    if (name == "CUBE") {
        WeylElement d2 = ddt_power(2);
        WeylElement lhs = br(d2, br(d2, t_ddt(2)));
        WeylElement rhs = Scalar(8) * ddt_power(3);
        auto r = identity_report(name, 0, lhs, rhs);
        r.parameters = Json::object();
        return r;
    }
    if (i < 1)
        throw DomainError("named identities need i >= 1");
    WeylElement x = ddt_power(i);
    if (name == "L23-1") {
        WeylElement a = t_ddt(2);
        WeylElement lhs = -falling_int(i + 1, 4) * ddt_power_or_zero(i - 2);
        WeylElement rhs = Scalar(3) * br(a, br(a, x)) + Scalar(2 * (2 * i - 1)) * br(t_ddt(3), x);
        return identity_report(name, i, lhs, rhs);
    }
    if (name == "L23-2") {
        WeylElement a = t_ddt(2);
        WeylElement lhs(integer_line());
        WeylElement rhs = br(a, br(a, br(a, x))) + Scalar((i - 1) * (i - 2)) * br(t_ddt(4), x) +
                          Scalar(2 * (i - 1)) * br(a, br(t_ddt(3), x));
        return identity_report(name, i, lhs, rhs);
    }
    if (name == "L23-3") {
        WeylElement a = t_ddt(3), e = t_ddt(5), b = t_ddt(2), f = t_ddt(4);
        WeylElement lhs = falling_int(i + 1, 6) * ddt_power_or_zero(i - 4);
        Scalar c = Scalar(-6 * (i - 4));
        std::map<std::string, WeylElement> readings;
        readings.emplace("a", Scalar(10) * br(a, br(a, x)) + c * br(e, x) - Scalar(15) * br(b, br(f, x)));
        readings.emplace("b", Scalar(10) * br(a, br(a, x) + c * br(e, x)) - Scalar(15) * br(b, br(f, x)));
        readings.emplace("c", Scalar(10) * br(a, br(a, x) + c * br(e, x) - Scalar(15) * br(b, br(f, x))));

        VerificationReport r;
        r.name = name;
        r.parameters = {{"i", i}};
        r.witnesses = {to_string(lhs)};
        Json zero = Json::array();
        Json residuals = Json::object();
        std::string first_nonzero;
        for (const auto& [label, rhs] : readings) {
            WeylElement residual = lhs - rhs;
            residuals[label] = to_string(residual);
            if (residual.is_zero())
                zero.push_back(label);
            else if (first_nonzero.empty())
                first_nonzero = to_string(residual);
        }
        r.details["readings"] = {
            {"a", "10[A,[A,X]] + c[E,X] - 15[B,[F,X]]"},
            {"b", "10[A,[A,X] + c[E,X]] - 15[B,[F,X]]"},
            {"c", "10[A,[A,X] + c[E,X] - 15[B,[F,X]]]"},
        };
        r.details["legend"] = "A = t^3 d/dt, E = t^5 d/dt, B = t^2 d/dt, F = t^4 d/dt, X = (d/dt)^i, c = -6(i-4)";
        r.details["residuals"] = residuals;
        r.details["zero_readings"] = zero;
        r.passed = !zero.empty();
        r.residual = r.passed ? "0" : first_nonzero;
        return r;
    }
    throw Error("unknown identity '" + name + "'");
}

Witness::Witness(std::vector<WeylElement> generators, std::vector<Node> nodes)
    : generators_(std::move(generators)), nodes_(std::move(nodes))
{
}

WeylElement Witness::evaluate() const
{
    std::vector<WeylElement> value;
    value.reserve(nodes_.size());
    for (const Node& n : nodes_) {
        switch (n.kind) {
        case Node::Kind::generator:
            value.push_back(to_power(generators_.at(n.generator)));
            break;
        case Node::Kind::bracket:
            value.push_back(bracket(value.at(n.left), value.at(n.right)));
            break;
        case Node::Kind::combination: {
            WeylElement sum(integer_line());
            for (const auto& [c, id] : n.terms)
                sum += Scalar(c) * value.at(id);
            value.push_back(std::move(sum));
            break;
        }
        }
    }
    return value.empty() ? WeylElement(integer_line()) : value.back();
}

std::vector<std::string> Witness::lines() const
{
    std::vector<std::string> out;
    auto name = [](std::size_t id) { return "w" + std::to_string(id); };
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        const Node& n = nodes_[id];
        std::string rhs;
        switch (n.kind) {
        case Node::Kind::generator:
            rhs = to_string(generators_.at(n.generator));
            break;
        case Node::Kind::bracket:
            rhs = "[" + name(n.left) + ", " + name(n.right) + "]";
            break;
        case Node::Kind::combination:
            for (const auto& [c, ref] : n.terms) {
                Rational a = abs(c);
                if (rhs.empty())
                    rhs += c < 0 ? "-" : "";
                else
                    rhs += c < 0 ? " - " : " + ";
                if (a != 1)
                    rhs += to_string(a) + "*";
                rhs += name(ref);
            }
            if (rhs.empty())
                rhs = "0";
            break;
        }
        out.push_back(name(id) + " = " + rhs);
    }
    return out;
}

GeneratedSubalgebra::GeneratedSubalgebra(std::vector<WeylElement> generators, SubalgebraCaps caps)
    : generators_(std::move(generators)), caps_(caps)
{
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        DfElement x = to_df(generators_[g]);
        if (x.is_zero())
            continue;
        if (!within_caps(x))
            throw DomainError("generator " + to_string(generators_[g]) + " lies outside the caps");
        Witness::Node node{Witness::Node::Kind::generator, g, 0, 0, {}};
        insert(x.degree, x.f, add_node(std::move(node)));
    }
    growth_.push_back(rows_count_);
}

std::size_t GeneratedSubalgebra::add_node(Witness::Node node)
{
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
}

bool GeneratedSubalgebra::within_caps(const DfElement& x) const
{
    return x.degree >= caps_.min_degree && x.degree <= caps_.max_degree &&
           x.f.degree() + 1 <= static_cast<long>(caps_.max_d_degree);
}

std::size_t GeneratedSubalgebra::dimension(long degree) const
{
    auto it = rows_.find(degree);
    return it == rows_.end() ? 0 : it->second.size();
}

std::vector<DfElement> GeneratedSubalgebra::basis() const
{
    std::vector<DfElement> out;
    for (const auto& [degree, rows] : rows_)
        for (const auto& [pivot, row] : rows)
            out.push_back(DfElement{degree, row.v});
    return out;
}

UPoly GeneratedSubalgebra::reduce(long degree, UPoly v, std::vector<std::pair<Rational, std::size_t>>& used) const
{
    auto it = rows_.find(degree);
    if (it == rows_.end())
        return v;
    for (const auto& [pivot, row] : it->second) {
        if (v.degree() < pivot)
            continue;
        Rational c = v.coefficient(static_cast<unsigned>(pivot));
        if (c == 0)
            continue;
        v -= row.v * c;
        used.emplace_back(c, row.node);
    }
    return v;
}

bool GeneratedSubalgebra::insert(long degree, const UPoly& v, std::size_t node)
{
    std::vector<std::pair<Rational, std::size_t>> used;
    UPoly r = reduce(degree, v, used);
    if (r.is_zero())
        return false;
    Rational scale = 1 / r.leading();
    std::size_t id = node;
    if (scale != 1 || !used.empty()) {
        Witness::Node comb{Witness::Node::Kind::combination, 0, 0, 0, {}};
        comb.terms.emplace_back(scale, node);
        for (const auto& [c, ref] : used)
            comb.terms.emplace_back(-scale * c, ref);
        id = add_node(std::move(comb));
    }
    long pivot = r.degree();
    rows_[degree].emplace(pivot, Row{r * scale, id});
    ++rows_count_;
    pending_.emplace_back(degree, pivot);
    return true;
}

std::size_t GeneratedSubalgebra::close(std::size_t max_rounds)
{
    std::size_t rounds = 0;
    while (!pending_.empty() && rounds < max_rounds) {
        auto fresh = std::move(pending_);
        pending_.clear();
        for (const auto& [d1, p1] : fresh) {
            // Snapshot of the partners: rows inserted during this pass are handled next round.
            std::vector<std::pair<long, long>> partners;
            for (const auto& [d2, rows] : rows_) {
                if (d1 + d2 < caps_.min_degree || d1 + d2 > caps_.max_degree)
                    continue;
                for (const auto& [p2, row] : rows)
                    partners.emplace_back(d2, p2);
            }
            for (const auto& [d2, p2] : partners) {
                const Row& a = rows_.at(d1).at(p1);
                const Row& b = rows_.at(d2).at(p2);
                DfElement c = df_bracket(d1, a.v, d2, b.v);
                if (c.is_zero() || !within_caps(c))
                    continue;
                std::vector<std::pair<Rational, std::size_t>> used;
                if (reduce(c.degree, c.f, used).is_zero())
                    continue;
                std::size_t node = add_node(Witness::Node{Witness::Node::Kind::bracket, 0, a.node, b.node, {}});
                insert(c.degree, c.f, node);
            }
        }
        ++rounds;
        growth_.push_back(rows_count_);
    }
    return rounds;
}

std::optional<Witness> GeneratedSubalgebra::express(const DfElement& x) const
{
    std::vector<std::pair<Rational, std::size_t>> used;
    if (!x.is_zero() && !reduce(x.degree, x.f, used).is_zero())
        return std::nullopt;

    // Collect the sub-DAG reachable from the used rows and renumber it in topological order.
    std::vector<bool> needed(nodes_.size(), false);
    std::vector<std::size_t> stack;
    for (const auto& [c, id] : used)
        stack.push_back(id);
    while (!stack.empty()) {
        std::size_t id = stack.back();
        stack.pop_back();
        if (needed[id])
            continue;
        needed[id] = true;
        const auto& n = nodes_[id];
        if (n.kind == Witness::Node::Kind::bracket) {
            stack.push_back(n.left);
            stack.push_back(n.right);
        } else if (n.kind == Witness::Node::Kind::combination) {
            for (const auto& [c, ref] : n.terms)
                stack.push_back(ref);
        }
    }
    std::vector<std::size_t> renumber(nodes_.size(), 0);
    std::vector<Witness::Node> out;
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (!needed[id])
            continue;
        Witness::Node n = nodes_[id];
        n.left = renumber[n.left];
        n.right = renumber[n.right];
        for (auto& [c, ref] : n.terms)
            ref = renumber[ref];
        renumber[id] = out.size();
        out.push_back(std::move(n));
    }
    Witness::Node result{Witness::Node::Kind::combination, 0, 0, 0, {}};
    for (const auto& [c, id] : used)
        result.terms.emplace_back(c, renumber[id]);
    out.push_back(std::move(result));
    return Witness(generators_, std::move(out));
}

GeneratedSubalgebra lemma21_subalgebra(long i0, unsigned m0, const SubalgebraCaps& caps)
{
    if (i0 < 1)
        throw DomainError("generation needs i0 >= 1");
    const LatticeRef& z = integer_line();
    std::vector<WeylElement> gens{
        WeylElement::monomial(z, LatticePoint{{i0}}, {1}),
        WeylElement::monomial(z, LatticePoint{{i0 + 1}}, {1}),
        WeylElement::monomial(z, LatticePoint{{i0}}, {2}),
    };
    for (unsigned j = m0 + 1; j <= caps.max_d_degree; ++j)
        gens.push_back(WeylElement::monomial(z, LatticePoint{{0}}, {j}));
    GeneratedSubalgebra algebra(std::move(gens), caps);
    algebra.close();
    return algebra;
}

VerificationReport generation_membership(const GeneratedSubalgebra& algebra, long i0, unsigned m0,
                                         const DfElement& target)
{
    if (!algebra.within_caps(target))
        throw DomainError("caps too small to express the target " + to_string(to_weyl(target)));
    VerificationReport r;
    r.name = "lemma21-membership";
    WeylElement t = to_weyl(target);
    long k = target.degree;
    Integer a = Integer((static_cast<long>(m0) - 1) * i0) - 2 * Integer(k - i0);
    r.parameters = {{"i0", i0},
                    {"m0", m0},
                    {"target", to_string(t)},
                    {"caps",
                     {{"min_degree", algebra.caps().min_degree},
                      {"max_degree", algebra.caps().max_degree},
                      {"max_d_degree", algebra.caps().max_d_degree}}}};
    r.details["a"] = a.get_str();
    r.details["a_sign"] = sgn(a) < 0 ? "negative" : sgn(a) > 0 ? "positive" : "zero";
    auto witness = algebra.express(target);
    r.details["member"] = witness.has_value();
    if (!witness) {
        r.passed = false;
        r.residual = to_string(t);
        return r;
    }
    WeylElement value = witness->evaluate();
    WeylElement residual = value - t;
    r.details["witness_nodes"] = witness->nodes().size();
    r.witnesses = witness->lines();
    r.residual = to_string(residual);
    r.passed = residual.is_zero();
    return r;
}

VerificationReport generation_membership(long i0, unsigned m0, const DfElement& target, const SubalgebraCaps& caps)
{
    return generation_membership(lemma21_subalgebra(i0, m0, caps), i0, m0, target);
}

} // namespace weyl
