#include "weyl/weyl_element.hpp"

#include "weyl/combinatorics.hpp"
#include "weyl/error.hpp"

#include <algorithm>
#include <numeric>

namespace weyl {

namespace {

constexpr unsigned kStirlingTable = 48;

// Stirling tables, row-major up to kStirlingTable.
struct StirlingTables {
    std::vector<std::vector<Integer>> first;
    std::vector<std::vector<Integer>> second;

    StirlingTables() : first(kStirlingTable + 1), second(kStirlingTable + 1)
    {
        first[0] = {1};
        second[0] = {1};
        for (unsigned m = 1; m <= kStirlingTable; ++m) {
            first[m].assign(m + 1, 0);
            second[m].assign(m + 1, 0);
            for (unsigned k = 1; k <= m; ++k) {
                Integer same1 = k < m ? first[m - 1][k] : Integer(0);
                Integer same2 = k < m ? second[m - 1][k] : Integer(0);
                first[m][k] = first[m - 1][k - 1] - Integer(m - 1) * same1;
                second[m][k] = second[m - 1][k - 1] + Integer(k) * same2;
            }
        }
    }
};

const StirlingTables& stirling_tables()
{
    static const StirlingTables tables;
    return tables;
}

Integer stirling(bool first, unsigned n, unsigned k)
{
    if (n > kStirlingTable)
        return first ? stirling1(n, k) : stirling2(n, k);
    const auto& t = first ? stirling_tables().first : stirling_tables().second;
    return k <= n ? t[n][k] : Integer(0);
}

// Expands prod_i sum_k table(mu_i, k) X_i^k coordinatewise.
std::vector<std::pair<std::vector<unsigned>, Rational>> change_basis(const std::vector<unsigned>& mu, bool first)
{
    std::vector<std::pair<std::vector<unsigned>, Rational>> acc{{{}, Rational(1)}};
    for (unsigned m : mu) {
        std::vector<std::pair<std::vector<unsigned>, Rational>> next;
        for (unsigned k = 0; k <= m; ++k) {
            Integer c = stirling(first, m, k);
            if (c == 0)
                continue;
            for (const auto& [v, q] : acc) {
                auto w = v;
                w.push_back(k);
                next.emplace_back(std::move(w), q * Rational(c));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

WeylElement convert(const WeylElement& x, Basis target)
{
    if (x.basis() == target)
        return x;
    WeylElement r(x.lattice(), target);
    bool to_falling = target == Basis::falling;
    for (const auto& [m, c] : x.terms())
        // D^m = sum_k S(m,k) [D]_k ; [D]_m = sum_k s(m,k) D^k
        for (const auto& [nu, q] : change_basis(m.mu, !to_falling))
            r.add(WeylMonomial{m.exponent, nu}, c * Scalar(q));
    r.add_central(x.central());
    return r;
}

bool lex_positive(const RationalVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return x > 0;
    return false;
}

} // namespace

unsigned WeylMonomial::order() const noexcept { return std::accumulate(mu.begin(), mu.end(), 0U); }

WeylElement::WeylElement(LatticeRef lattice, Basis basis) : lattice_(std::move(lattice)), basis_(basis)
{
    if (!lattice_)
        throw Error("WeylElement needs a lattice");
}

WeylElement WeylElement::monomial(LatticeRef lattice, LatticePoint exponent, std::vector<unsigned> mu,
                                  const Scalar& coefficient, Basis basis)
{
    WeylElement x(std::move(lattice), basis);
    x.add(WeylMonomial{std::move(exponent), std::move(mu)}, coefficient);
    return x;
}

WeylElement WeylElement::central_element(LatticeRef lattice, const Scalar& coefficient)
{
    WeylElement x(std::move(lattice));
    x.add_central(coefficient);
    return x;
}

Scalar WeylElement::coefficient(const WeylMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

bool WeylElement::basis_neutral() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return std::all_of(t.first.mu.begin(), t.first.mu.end(), [](unsigned m) { return m <= 1; });
    });
}

bool WeylElement::in_w1() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.order() >= 1; });
}

void WeylElement::add(const WeylMonomial& m, const Scalar& coefficient)
{
    if (m.exponent.rank() != lattice_->rank())
        throw DimensionMismatch("monomial exponent has rank " + std::to_string(m.exponent.rank()) +
                                ", lattice has rank " + std::to_string(lattice_->rank()));
    if (m.mu.size() != lattice_->dim())
        throw DimensionMismatch("monomial has " + std::to_string(m.mu.size()) + " D-exponents, expected " +
                                std::to_string(lattice_->dim()));
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void WeylElement::add_central(const Scalar& coefficient) { central_ += coefficient; }

WeylElement WeylElement::without_central() const
{
    WeylElement r = *this;
    r.central_ = Scalar();
    return r;
}

WeylElement WeylElement::retagged(Basis basis) const
{
    if (basis == basis_)
        return *this;
    if (!basis_neutral())
        throw BasisMismatch("element is not basis-neutral and cannot be retagged");
    WeylElement r = *this;
    r.basis_ = basis;
    return r;
}

void WeylElement::require_compatible(const WeylElement& other) const
{
    if (!same_lattice(lattice_, other.lattice_))
        throw LatticeMismatch("elements live over different lattices");
}

WeylElement& WeylElement::operator+=(const WeylElement& other)
{
    require_compatible(other);
    if (other.basis_ != basis_) {
        if (other.basis_neutral())
            return *this += other.retagged(basis_);
        if (basis_neutral() && !terms_.empty()) {
            basis_ = other.basis_;
            return *this += other;
        }
        if (terms_.empty())
            basis_ = other.basis_;
        else
            throw BasisMismatch("cannot add elements written in different bases");
    }
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    central_ += other.central_;
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) { return *this += -other; }

WeylElement& WeylElement::operator*=(const Scalar& factor)
{
    if (factor.is_zero()) {
        terms_.clear();
        central_ = Scalar();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= factor;
    central_ *= factor;
    return *this;
}

WeylElement WeylElement::operator-() const
{
    WeylElement r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    r.central_ = -r.central_;
    return r;
}

bool operator==(const WeylElement& a, const WeylElement& b)
{
    if (!same_lattice(a.lattice_, b.lattice_) || a.terms_ != b.terms_ || a.central_ != b.central_)
        return false;
    return a.basis_ == b.basis_ || a.basis_neutral();
}

WeylElement mul(const WeylElement& x, const WeylElement& y)
{
    if (!same_lattice(x.lattice(), y.lattice()))
        throw LatticeMismatch("mul: elements live over different lattices");
    if (x.basis() != Basis::power || y.basis() != Basis::power)
        throw BasisMismatch("mul needs both factors in the power basis");
    if (!x.central().is_zero() || !y.central().is_zero())
        throw DomainError("the central element has no associative product");
    const Lattice& lattice = *x.lattice();
    const std::size_t n = lattice.dim();
    WeylElement r(x.lattice());
    for (const auto& [mb, cb] : y.terms()) {
        RationalVector beta = lattice.ambient(mb.exponent);
        for (const auto& [ma, ca] : x.terms()) {
            // sum over λ <= μ of binom(μ,λ) β^λ t^{α+β} D^{μ+ν−λ}, built coordinatewise.
            std::vector<std::pair<std::vector<unsigned>, Rational>> acc{{{}, Rational(1)}};
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::pair<std::vector<unsigned>, Rational>> next;
                Rational power = 1;
                for (unsigned lambda = 0; lambda <= ma.mu[i]; ++lambda) {
                    if (lambda > 0)
                        power *= beta[i];
                    if (power == 0)
                        break;
                    Rational weight = binom(Rational(ma.mu[i]), lambda) * power;
                    for (const auto& [nu, q] : acc) {
                        auto w = nu;
                        w.push_back(ma.mu[i] + mb.mu[i] - lambda);
                        next.emplace_back(std::move(w), q * weight);
                    }
                }
                acc = std::move(next);
            }
            Scalar c = ca * cb;
            LatticePoint exponent = ma.exponent + mb.exponent;
            for (const auto& [nu, q] : acc)
                r.add(WeylMonomial{exponent, nu}, c * Scalar(q));
        }
    }
    return r;
}

WeylElement bracket(const WeylElement& x, const WeylElement& y) { return mul(x, y) - mul(y, x); }

WeylElement to_falling(const WeylElement& x) { return convert(x, Basis::falling); }

WeylElement to_power(const WeylElement& x) { return convert(x, Basis::power); }

Scalar cocycle(const WeylElement& x, const WeylElement& y)
{
    if (x.dim() != 1 || y.dim() != 1)
        throw DomainError("the cocycle is defined only for n = 1");
    if (!same_lattice(x.lattice(), y.lattice()))
        throw LatticeMismatch("cocycle: elements live over different lattices");
    WeylElement fx = to_falling(x.without_central());
    WeylElement fy = to_falling(y.without_central());
    const Lattice& lattice = *x.lattice();
    Scalar total;
    for (const auto& [ma, ca] : fx.terms()) {
        Rational alpha = lattice.ambient(ma.exponent)[0];
        for (const auto& [mb, cb] : fy.terms()) {
            if (!(ma.exponent + mb.exponent).is_zero())
                continue;
            unsigned mu = ma.mu[0];
            unsigned nu = mb.mu[0];
            Rational value = Rational(factorial(mu) * factorial(nu)) * binom(alpha + mu, mu + nu + 1);
            if (mu % 2 == 1)
                value = -value;
            total += ca * cb * Scalar(value);
        }
    }
    return total;
}

WeylElement ext_bracket(const WeylElement& x, const WeylElement& y)
{
    if (x.dim() != 1 || y.dim() != 1)
        throw DomainError("the central extension exists only for n = 1");
    WeylElement px = to_power(x.without_central());
    WeylElement py = to_power(y.without_central());
    WeylElement r = bracket(px, py);
    r.add_central(cocycle(px, py));
    return r;
}

GradingWindow GradingWindow::interval(std::optional<Rational> lo, std::optional<Rational> hi)
{
    return GradingWindow([lo, hi](const Lattice& lattice, const LatticePoint& p) {
        if (lattice.dim() != 1)
            throw DomainError("interval grading windows need n = 1");
        Rational d = lattice.ambient(p)[0];
        return (!lo || *lo <= d) && (!hi || d < *hi);
    });
}

GradingWindow GradingWindow::positive()
{
    return GradingWindow([](const Lattice& lattice, const LatticePoint& p) { return lex_positive(lattice.ambient(p)); });
}

GradingWindow GradingWindow::negative()
{
    return GradingWindow(
        [](const Lattice& lattice, const LatticePoint& p) { return lex_positive(lattice.ambient(-p)); });
}

GradingWindow GradingWindow::zero()
{
    return GradingWindow([](const Lattice&, const LatticePoint& p) { return p.is_zero(); });
}

std::optional<LatticePoint> grade(const WeylElement& x)
{
    std::optional<LatticePoint> degree;
    if (!x.central().is_zero())
        degree = x.lattice()->zero();
    for (const auto& [m, c] : x.terms()) {
        if (degree && *degree != m.exponent)
            return std::nullopt;
        degree = m.exponent;
    }
    return degree;
}

WeylElement project(const WeylElement& x, const GradingWindow& window)
{
    WeylElement r(x.lattice(), x.basis());
    for (const auto& [m, c] : x.terms())
        if (window.contains(*x.lattice(), m.exponent))
            r.add(m, c);
    if (window.contains(*x.lattice(), x.lattice()->zero()))
        r.add_central(x.central());
    return r;
}

GroupAlgebraVector operator_action(const WeylElement& x, const LatticePoint& gamma)
{
    if (x.basis() != Basis::power)
        throw BasisMismatch("operator_action needs the power basis");
    if (!x.central().is_zero())
        throw DomainError("the central element does not act on the group algebra");
    const Lattice& lattice = *x.lattice();
    RationalVector g = lattice.ambient(gamma);
    GroupAlgebraVector out;
    for (const auto& [m, c] : x.terms()) {
        // D^μ t^γ = γ^μ t^γ, then multiplication by t^α.
        Rational scale = 1;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (unsigned k = 0; k < m.mu[i]; ++k)
                scale *= g[i];
        if (scale == 0)
            continue;
        Scalar& slot = out[gamma + m.exponent];
        slot += c * Scalar(scale);
        if (slot.is_zero())
            out.erase(gamma + m.exponent);
    }
    return out;
}

GroupAlgebraVector operator_action(const WeylElement& x, const GroupAlgebraVector& v)
{
    GroupAlgebraVector out;
    for (const auto& [gamma, coeff] : v)
        for (const auto& [target, c] : operator_action(x, gamma)) {
            Scalar& slot = out[target];
            slot += coeff * c;
            if (slot.is_zero())
                out.erase(target);
        }
    return out;
}

WeylElement direction_element(const LatticeRef& lattice, const LatticePoint& beta, const Direction& d)
{
    if (d.coeffs.size() != lattice->dim())
        throw DimensionMismatch("direction has wrong dimension");
    WeylElement r(lattice);
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
        std::vector<unsigned> mu(lattice->dim(), 0);
        mu[i] = 1;
        r.add(WeylMonomial{beta, mu}, Scalar(d.coeffs[i]));
    }
    return r;
}

WeylElement degree_one_bracket(const LatticeRef& lattice, const LatticePoint& beta, const Direction& d,
                               const LatticePoint& gamma, const Direction& d2)
{
    if (d.coeffs.size() != lattice->dim() || d2.coeffs.size() != lattice->dim())
        throw DimensionMismatch("direction has wrong dimension");
    Rational gd = inner(lattice->ambient(gamma), d);
    Rational bd2 = inner(lattice->ambient(beta), d2);
    Direction combined{RationalVector(lattice->dim())};
    for (std::size_t i = 0; i < lattice->dim(); ++i)
        combined.coeffs[i] = gd * d2.coeffs[i] - bd2 * d.coeffs[i];
    return direction_element(lattice, beta + gamma, combined);
}

namespace {

std::string exponent_text(const Lattice& lattice, const LatticePoint& p)
{
    RationalVector a = lattice.ambient(p);
    if (lattice.dim() == 1)
        return "t^(" + a[0].get_str() + ")";
    std::string s = "t[";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + a[i].get_str();
    return s + "]";
}

std::string monomial_text(const Lattice& lattice, const WeylMonomial& m, Basis basis)
{
    std::vector<std::string> parts;
    if (!m.exponent.is_zero())
        parts.push_back(exponent_text(lattice, m.exponent));
    for (std::size_t i = 0; i < m.mu.size(); ++i) {
        if (m.mu[i] == 0)
            continue;
        std::string d = m.mu.size() == 1 ? "D" : "D" + std::to_string(i + 1);
        if (basis == Basis::falling)
            parts.push_back("[" + d + "]_" + std::to_string(m.mu[i]));
        else
            parts.push_back(m.mu[i] == 1 ? d : d + "^" + std::to_string(m.mu[i]));
    }
    std::string s;
    for (const auto& p : parts)
        s += (s.empty() ? "" : "*") + p;
    return s;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono, const ParameterSet* params)
{
    bool first = out.empty();
    if (auto q = c.as_rational()) {
        Rational mag = abs(*q);
        out += first ? (*q < 0 ? "-" : "") : (*q < 0 ? " - " : " + ");
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
        return;
    }
    out += first ? "" : " + ";
    std::string poly = c.size() == 1 ? c.to_string(params) : "(" + c.to_string(params) + ")";
    if (c.size() == 1 && poly.front() == '-')
        poly = "(" + poly + ")";
    out += mono.empty() ? poly : poly + "*" + mono;
}

} // namespace

std::string to_string(const WeylElement& x, const ParameterSet* params)
{
    std::string out;
    for (const auto& [m, c] : x.terms())
        append_term(out, c, monomial_text(*x.lattice(), m, x.basis()), params);
    if (!x.central().is_zero())
        append_term(out, x.central(), "C", params);
    return out.empty() ? "0" : out;
}

std::string to_string(const Lattice& lattice, const LatticePoint& p)
{
    RationalVector a = lattice.ambient(p);
    if (a.size() == 1)
        return a[0].get_str();
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + a[i].get_str();
    return s + ")";
}

std::string to_string(const GroupAlgebraVector& v, const Lattice& lattice, const ParameterSet* params,
                      const std::string& symbol)
{
    std::string out;
    for (const auto& [g, c] : v)
        append_term(out, c, symbol + "_" + to_string(lattice, g), params);
    return out.empty() ? "0" : out;
}

} // namespace weyl
