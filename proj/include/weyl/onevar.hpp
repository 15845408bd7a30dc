#pragma once

#include "weyl/report.hpp"
#include "weyl/weyl_element.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weyl {

/// Dense polynomial in one variable D over Q; coefficient k belongs to D^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coefficients);
    static UPoly constant(const Rational& c);
    static UPoly monomial(unsigned power, const Rational& c = Rational(1));
    /// D + a.
    static UPoly shifted_variable(const Rational& a);

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Rational coefficient(unsigned power) const;
    Rational leading() const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const Rational& factor);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// f(D + a).
    UPoly shift(const Rational& a) const;
    Rational evaluate(const Rational& x) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// t^i D f(D) in W(Z,1)^(1).
struct DfElement {
    long degree = 0;
    UPoly f;

    bool is_zero() const noexcept { return f.is_zero(); }
    friend bool operator==(const DfElement& a, const DfElement& b)
    {
        return a.f == b.f && (a.f.is_zero() || a.degree == b.degree);
    }
};

/// The shared lattice Z inside Q.
const LatticeRef& integer_line();

WeylElement to_weyl(const DfElement& x);
/// Requires a homogeneous element of W(Z,1)^(1) without central part.
DfElement to_df(const WeylElement& x);

/// t^{i+j} D((D+j) f(D+j) g(D) − (D+i) g(D+i) f(D)) = [t^i D f(D), t^j D g(D)].
DfElement df_bracket(long i, const UPoly& f, long j, const UPoly& g);
inline DfElement df_bracket(const DfElement& x, const DfElement& y) { return df_bracket(x.degree, x.f, y.degree, y.f); }

/// (d/dt)^j = t^{−j}[D]_j in the power basis, j >= 1.
WeylElement ddt_power(long j);
/// (d/dt)^j with the zero convention: 0 for j < 0 and 1 for j = 0.
WeylElement ddt_power_or_zero(long j);
/// t^a d/dt = t^{a−1} D.
WeylElement t_ddt(long a);

/// Identity names understood by verify_named_identity.
const std::vector<std::string>& named_identities();
/// The three bracket nestings of the unbalanced third identity, by reading label.
const std::vector<std::string>& l23_3_readings();

/// Checks L23-1, L23-2, L23-3 or CUBE at the given i (ignored for CUBE).
/// For L23-3 every reading is evaluated; details.zero_readings lists those with zero residual
/// and the report passes iff at least one reading vanishes.
VerificationReport verify_named_identity(const std::string& name, long i);

struct SubalgebraCaps {
    long min_degree = 0;
    long max_degree = 40;
    unsigned max_d_degree = 6;
};

/// Bracket-word expression for an element of a generated subalgebra. Nodes are stored in
/// topological order; the last node is the expressed element.
class Witness {
public:
    struct Node {
        enum class Kind { generator, bracket, combination } kind;
        std::size_t generator = 0;
        std::size_t left = 0, right = 0;
        std::vector<std::pair<Rational, std::size_t>> terms;
    };

    Witness(std::vector<WeylElement> generators, std::vector<Node> nodes);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    /// Re-evaluates the expression with the generic bracket of weyl-core.
    WeylElement evaluate() const;
    /// One definition per line, "w3 = [w0, w1]", "w5 = w3 - 2*w4", ending with the result node.
    std::vector<std::string> lines() const;

private:
    std::vector<WeylElement> generators_;
    std::vector<Node> nodes_;
};

/// Truncated subalgebra of W(Z,1)^(1) generated by homogeneous elements: the span of all
/// bracket words whose intermediate results stay inside the caps. Brackets leaving the caps are
/// discarded, so the computed span is contained in the true subalgebra.
class GeneratedSubalgebra {
public:
    GeneratedSubalgebra(std::vector<WeylElement> generators, SubalgebraCaps caps = {});

    /// Breadth-first bracket closure; returns the number of rounds run.
    std::size_t close(std::size_t max_rounds = static_cast<std::size_t>(-1));
    bool closed() const noexcept { return pending_.empty(); }

    const SubalgebraCaps& caps() const noexcept { return caps_; }
    const std::vector<WeylElement>& generators() const noexcept { return generators_; }
    std::size_t dimension() const noexcept { return rows_count_; }
    std::size_t dimension(long degree) const;
    /// Total dimension after construction and after each closure round.
    const std::vector<std::size_t>& growth() const noexcept { return growth_; }
    /// All basis elements, as elements of W(Z,1).
    std::vector<DfElement> basis() const;

    bool within_caps(const DfElement& x) const;
    /// A witness expressing x in the current span, if x lies in it.
    std::optional<Witness> express(const DfElement& x) const;

private:
    struct Row {
        UPoly v;      // f of t^k D f(D), leading coefficient 1
        std::size_t node;
    };

    std::size_t add_node(Witness::Node node);
    /// Reduces v against the rows of its degree; returns remainder and the subtracted combination.
    UPoly reduce(long degree, UPoly v, std::vector<std::pair<Rational, std::size_t>>& used) const;
    bool insert(long degree, const UPoly& v, std::size_t node);

    std::vector<WeylElement> generators_;
    SubalgebraCaps caps_;
    std::vector<Witness::Node> nodes_;
    std::map<long, std::map<long, Row, std::greater<>>> rows_;  // degree -> pivot -> row
    std::size_t rows_count_ = 0;
    std::vector<std::pair<long, long>> pending_;  // (degree, pivot) of rows added in the last round
    std::vector<std::size_t> growth_;
};

/// Generators t^{i0}D, t^{i0+1}D, t^{i0}D^2 together with S = span{D^j : m0+1 <= j <= max_d_degree}
/// (the elements D f(D) with deg f >= m0), closed under brackets within the caps.
GeneratedSubalgebra lemma21_subalgebra(long i0, unsigned m0, const SubalgebraCaps& caps = {});

/// Membership of the target in a closed lemma21_subalgebra, with a re-evaluated witness and the
/// auxiliary quantity a = (m0 − 1) i0 − 2(k − i0) for target degree k.
VerificationReport generation_membership(const GeneratedSubalgebra& algebra, long i0, unsigned m0,
                                         const DfElement& target);
VerificationReport generation_membership(long i0, unsigned m0, const DfElement& target,
                                         const SubalgebraCaps& caps = {});

} // namespace weyl
