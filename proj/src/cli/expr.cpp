#include "weyl/cli/expr.hpp"

#include "weyl/error.hpp"

#include <cctype>

namespace weyl::cli {

const char* to_string(Mode mode)
{
    switch (mode) {
    case Mode::full: return "full";
    case Mode::w1: return "w1";
    case Mode::hat: return "hat";
    }
    return "?";
}

Mode parse_mode(std::string_view text)
{
    if (text == "full")
        return Mode::full;
    if (text == "w1")
        return Mode::w1;
    if (text == "hat")
        return Mode::hat;
    throw Error("unknown subalgebra mode '" + std::string(text) + "' (expected w1, full or hat)");
}

namespace {

struct Token {
    enum class Kind { number, ident, ddt, symbol, end } kind;
    std::string text;
    std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Kind::number, std::string(s.substr(start, i - start)), start});
        } else if (s.substr(i, 4) == "d/dt" && (i + 4 == s.size() || !ident_char(s[i + 4]))) {
            i += 4;
            out.push_back({Token::Kind::ddt, "d/dt", start});
        } else if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i]))
                ++i;
            out.push_back({Token::Kind::ident, std::string(s.substr(start, i - start)), start});
        } else if (std::string_view("+-*^/()[],_").find(c) != std::string_view::npos) {
            ++i;
            out.push_back({Token::Kind::symbol, std::string(1, c), start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

/// D -> 0, Dk -> k; nullopt for any other identifier.
std::optional<unsigned> d_index(const std::string& name)
{
    if (name.empty() || name[0] != 'D')
        return std::nullopt;
    if (name.size() == 1)
        return 0u;
    if (name[1] == '0')
        return std::nullopt;
    unsigned k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || k > 100000)
            return std::nullopt;
        k = 10 * k + static_cast<unsigned>(name[i] - '0');
    }
    return k;
}

bool reserved(const std::string& name) { return name == "t" || name == "C" || d_index(name).has_value(); }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    Expr parse_all()
    {
        Expr e = expression();
        if (peek().kind != Token::Kind::end)
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(i_ + ahead, tokens_.size() - 1)]; }
    bool is(const char* sym, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Token::Kind::symbol && peek(ahead).text == sym;
    }
    const Token& next() { return tokens_[std::min(i_++, tokens_.size() - 1)]; }

    void expect(const char* sym)
    {
        if (!is(sym)) {
            const Token& t = peek();
            throw ParseError(std::string("expected '") + sym + "'" +
                                 (t.kind == Token::Kind::end ? " before end of input" : ", found '" + t.text + "'"),
                             t.pos);
        }
        ++i_;
    }

    unsigned small_integer()
    {
        const Token& t = peek();
        if (t.kind != Token::Kind::number)
            throw ParseError("expected a non-negative integer", t.pos);
        if (t.text.size() > 6)
            throw ParseError("integer '" + t.text + "' is too large here", t.pos);
        ++i_;
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Rational signed_rational()
    {
        bool negative = false;
        if (is("-")) {
            negative = true;
            ++i_;
        }
        Rational r = unsigned_rational();
        return negative ? Rational(-r) : r;
    }

    Rational unsigned_rational()
    {
        const Token& t = peek();
        if (t.kind != Token::Kind::number)
            throw ParseError("expected a number", t.pos);
        ++i_;
        std::string text = t.text;
        if (is("/")) {
            ++i_;
            const Token& d = peek();
            if (d.kind != Token::Kind::number)
                throw ParseError("expected a denominator", d.pos);
            ++i_;
            if (d.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", d.pos);
            text += "/" + d.text;
        }
        return parse_rational(text);
    }

    static Expr node(Expr::Kind kind, std::size_t pos, std::vector<Expr> args = {})
    {
        Expr e;
        e.kind = kind;
        e.pos = pos;
        e.args = std::move(args);
        return e;
    }

    Expr expression()
    {
        Expr lhs = term();
        while (is("+") || is("-")) {
            const Token& op = next();
            Expr rhs = term();
            lhs = node(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr term()
    {
        Expr lhs = unary();
        while (is("*")) {
            const Token& op = next();
            Expr rhs = unary();
            lhs = node(Expr::Kind::mul, op.pos, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr unary()
    {
        if (is("-")) {
            std::size_t pos = next().pos;
            return node(Expr::Kind::neg, pos, {unary()});
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (is("^")) {
            std::size_t pos = next().pos;
            Expr e = node(Expr::Kind::pow, pos, {std::move(base)});
            e.power = small_integer();
            return e;
        }
        return base;
    }

    Expr atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::number: {
            Expr e = node(Expr::Kind::number, t.pos);
            e.value = unsigned_rational();
            return e;
        }
        case Token::Kind::ddt:
            ++i_;
            return node(Expr::Kind::ddt, t.pos);
        case Token::Kind::ident:
            return identifier();
        case Token::Kind::end:
            throw ParseError("unexpected end of input", t.pos);
        case Token::Kind::symbol:
            break;
        }
        if (is("(")) {
            ++i_;
            Expr e = expression();
            expect(")");
            return e;
        }
        if (is("[")) {
            if (peek(1).kind == Token::Kind::ident && d_index(peek(1).text) && is("]", 2))
                return falling();
            std::size_t pos = next().pos;
            Expr x = expression();
            expect(",");
            Expr y = expression();
            expect("]");
            return node(Expr::Kind::bracket, pos, {std::move(x), std::move(y)});
        }
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }

    Expr falling()
    {
        std::size_t pos = next().pos;
        Expr e = node(Expr::Kind::falling, pos);
        e.index = *d_index(next().text);
        expect("]");
        expect("_");
        e.power = small_integer();
        return e;
    }

    Expr identifier()
    {
        const Token& t = next();
        if (t.text == "C")
            return node(Expr::Kind::central, t.pos);
        if (auto k = d_index(t.text)) {
            Expr e = node(Expr::Kind::d_var, t.pos);
            e.index = *k;
            return e;
        }
        if (t.text != "t") {
            Expr e = node(Expr::Kind::parameter, t.pos);
            e.name = t.text;
            return e;
        }
        Expr e = node(Expr::Kind::t_power, t.pos);
        if (is("[")) {
            ++i_;
            e.exponent = rational_list("]");
        } else if (is("^")) {
            ++i_;
            if (is("(")) {
                ++i_;
                e.exponent = rational_list(")");
            } else {
                e.exponent = {signed_rational()};
            }
        } else {
            e.exponent = {Rational(1)};
        }
        return e;
    }

    std::vector<Rational> rational_list(const char* close)
    {
        std::vector<Rational> v{signed_rational()};
        while (is(",")) {
            ++i_;
            v.push_back(signed_rational());
        }
        expect(close);
        return v;
    }

    std::vector<Token> tokens_;
    std::size_t i_ = 0;
};

const char* kind_name(Expr::Kind k)
{
    switch (k) {
    case Expr::Kind::number: return "num";
    case Expr::Kind::parameter: return "param";
    case Expr::Kind::t_power: return "t";
    case Expr::Kind::d_var: return "D";
    case Expr::Kind::falling: return "fall";
    case Expr::Kind::ddt: return "ddt";
    case Expr::Kind::central: return "C";
    case Expr::Kind::add: return "+";
    case Expr::Kind::sub: return "-";
    case Expr::Kind::mul: return "*";
    case Expr::Kind::neg: return "neg";
    case Expr::Kind::pow: return "^";
    case Expr::Kind::bracket: return "bracket";
    }
    return "?";
}

// ---- evaluation ----

class Evaluator {
public:
    explicit Evaluator(const Session& s) : s_(s) {}

    Value eval(const Expr& e) const
    {
        switch (e.kind) {
        case Expr::Kind::number:
            return Scalar(e.value);
        case Expr::Kind::parameter: {
            auto idx = s_.params ? s_.params->find(e.name) : std::nullopt;
            if (!idx)
                throw UnknownSymbol("unknown symbol '" + e.name + "' at position " + std::to_string(e.pos));
            return Scalar::variable(*idx);
        }
        case Expr::Kind::t_power:
            return WeylElement::monomial(s_.lattice, exponent(e), std::vector<unsigned>(s_.n(), 0));
        case Expr::Kind::d_var:
            return WeylElement::monomial(s_.lattice, s_.lattice->zero(), unit_mu(e, 1));
        case Expr::Kind::falling:
            return WeylElement::monomial(s_.lattice, s_.lattice->zero(), unit_mu(e, e.power), Scalar(1),
                                         Basis::falling);
        case Expr::Kind::ddt: {
            if (s_.n() != 1)
                throw UnknownSymbol("d/dt needs n = 1 (position " + std::to_string(e.pos) + ")");
            auto p = s_.lattice->membership({Rational(-1)});
            if (!p)
                throw DomainError("d/dt = t^(-1)*D needs -1 in the lattice (position " + std::to_string(e.pos) + ")");
            return WeylElement::monomial(s_.lattice, *p, {1u});
        }
        case Expr::Kind::central:
            if (s_.mode != Mode::hat)
                throw UnknownSymbol("C exists only in hat mode (position " + std::to_string(e.pos) + ")");
            return WeylElement::central_element(s_.lattice);
        case Expr::Kind::add:
        case Expr::Kind::sub:
            return add(eval(e.args[0]), eval(e.args[1]), e.kind == Expr::Kind::sub);
        case Expr::Kind::neg: {
            Value v = eval(e.args[0]);
            if (auto* s = std::get_if<Scalar>(&v))
                return -*s;
            return -std::get<WeylElement>(v);
        }
        case Expr::Kind::mul:
            return multiply(eval(e.args[0]), eval(e.args[1]), e.pos);
        case Expr::Kind::pow: {
            Value base = eval(e.args[0]);
            if (auto* s = std::get_if<Scalar>(&base))
                return s->pow(e.power);
            Value r = Scalar(1);
            for (unsigned k = 0; k < e.power; ++k)
                r = multiply(r, base, e.pos);
            return r;
        }
        case Expr::Kind::bracket: {
            WeylElement x = to_power(as_element(eval(e.args[0]), s_));
            WeylElement y = to_power(as_element(eval(e.args[1]), s_));
            return s_.mode == Mode::hat ? ext_bracket(x, y) : bracket(x.without_central(), y.without_central());
        }
        }
        throw Error("corrupt expression tree");
    }

private:
    LatticePoint exponent(const Expr& e) const
    {
        if (e.exponent.size() != s_.n())
            throw DimensionMismatch("exponent at position " + std::to_string(e.pos) + " has " +
                                    std::to_string(e.exponent.size()) + " entries, expected n = " +
                                    std::to_string(s_.n()));
        auto p = s_.lattice->membership(e.exponent);
        if (!p)
            throw DomainError("exponent at position " + std::to_string(e.pos) + " is not in the lattice");
        return *p;
    }

    std::vector<unsigned> unit_mu(const Expr& e, unsigned power) const
    {
        std::size_t n = s_.n();
        std::size_t i = e.index == 0 ? 0 : e.index - 1;
        if ((e.index == 0 && n != 1) || i >= n)
            throw UnknownSymbol("unknown symbol 'D" + (e.index ? std::to_string(e.index) : std::string()) +
                                "' for n = " + std::to_string(n) + " at position " + std::to_string(e.pos));
        std::vector<unsigned> mu(n, 0);
        mu[i] = power;
        return mu;
    }

    Value add(const Value& a, const Value& b, bool subtract) const
    {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            const Scalar& x = std::get<Scalar>(a);
            const Scalar& y = std::get<Scalar>(b);
            return subtract ? x - y : x + y;
        }
        WeylElement x = as_element(a, s_);
        WeylElement y = as_element(b, s_);
        if (subtract)
            y = -y;
        if (x.basis() != y.basis()) {
            // Neutral summands adopt the other basis, falling winning a tie, so that printed
            // falling elements read back in the falling basis.
            if (x.basis_neutral() && y.basis_neutral()) {
                x = x.retagged(Basis::falling);
                y = y.retagged(Basis::falling);
            } else if (x.basis_neutral()) {
                x = x.retagged(y.basis());
            } else if (y.basis_neutral()) {
                y = y.retagged(x.basis());
            } else {
                x = to_power(x);
                y = to_power(y);
            }
        }
        return x + y;
    }

    Value multiply(const Value& a, const Value& b, std::size_t pos) const
    {
        if (auto* s = std::get_if<Scalar>(&a)) {
            if (auto* t = std::get_if<Scalar>(&b))
                return *s * *t;
            return *s * std::get<WeylElement>(b);
        }
        const WeylElement& x = std::get<WeylElement>(a);
        if (auto* t = std::get_if<Scalar>(&b))
            return x * *t;
        const WeylElement& y = std::get<WeylElement>(b);
        if (!x.central().is_zero() || !y.central().is_zero())
            throw DomainError("C can only be multiplied by scalars (position " + std::to_string(pos) + ")");
        if (auto r = pure_t_times(x, y))
            return *r;
        if (auto r = times_falling_d(x, y))
            return *r;
        return mul(to_power(x), to_power(y));
    }

    /// c t^α · y keeps the basis of y.
    static std::optional<WeylElement> pure_t_times(const WeylElement& x, const WeylElement& y)
    {
        if (x.terms().size() != 1 || x.terms().begin()->first.order() != 0)
            return std::nullopt;
        const auto& [m, c] = *x.terms().begin();
        WeylElement r(y.lattice(), y.basis());
        for (const auto& [ym, yc] : y.terms())
            r.add(WeylMonomial{m.exponent + ym.exponent, ym.mu}, c * yc);
        return r;
    }

    /// x · [D_i]_j for a lone falling factor in D-variables unused by x: the falling
    /// factors simply concatenate.
    static std::optional<WeylElement> times_falling_d(const WeylElement& x, const WeylElement& y)
    {
        if (y.terms().size() != 1)
            return std::nullopt;
        const auto& [ym, yc] = *y.terms().begin();
        if (!ym.exponent.is_zero() || (y.basis() != Basis::falling && !y.basis_neutral()))
            return std::nullopt;
        if (x.basis() != Basis::falling && !x.basis_neutral())
            return std::nullopt;
        if (x.basis() != Basis::falling && y.basis() != Basis::falling)
            return std::nullopt;
        WeylElement r(x.lattice(), Basis::falling);
        for (const auto& [m, c] : x.terms()) {
            std::vector<unsigned> mu = m.mu;
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] && ym.mu[i])
                    return std::nullopt;
                mu[i] += ym.mu[i];
            }
            r.add(WeylMonomial{m.exponent, mu}, c * yc);
        }
        return r;
    }

    const Session& s_;
};

} // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e)
{
    std::string s = std::string("(") + kind_name(e.kind);
    switch (e.kind) {
    case Expr::Kind::number: s += " " + e.value.get_str(); break;
    case Expr::Kind::parameter: s += " " + e.name; break;
    case Expr::Kind::t_power:
        for (const auto& q : e.exponent)
            s += " " + q.get_str();
        break;
    case Expr::Kind::d_var: s += " " + std::to_string(e.index); break;
    case Expr::Kind::falling:
    case Expr::Kind::pow:
        if (e.kind == Expr::Kind::falling)
            s += " " + std::to_string(e.index);
        s += " " + std::to_string(e.power);
        break;
    default: break;
    }
    for (const auto& a : e.args)
        s += " " + to_string(a);
    return s + ")";
}

Session Session::make(LatticeRef lattice, std::vector<std::string> params, Mode mode)
{
    for (const auto& p : params) {
        if (reserved(p))
            throw Error("parameter name '" + p + "' is reserved");
        if (p.empty() || !ident_start(p[0]))
            throw Error("parameter name '" + p + "' must start with a letter");
    }
    if (mode == Mode::hat && lattice->dim() != 1)
        throw DomainError("hat mode needs n = 1");
    Session s;
    s.lattice = std::move(lattice);
    s.params = std::make_shared<const ParameterSet>(std::move(params));
    s.mode = mode;
    return s;
}

Value eval(const Expr& e, const Session& session)
{
    Value v = Evaluator(session).eval(e);
    if (session.mode == Mode::w1)
        if (auto* x = std::get_if<WeylElement>(&v); x && !x->in_w1())
            throw SubalgebraViolation("result " + to_string(*x, session.params.get()) + " is not in W^(1)");
    return v;
}

Value evaluate(std::string_view text, const Session& session) { return eval(parse(text), session); }

WeylElement as_element(const Value& v, const Session& session)
{
    if (auto* x = std::get_if<WeylElement>(&v))
        return *x;
    return WeylElement::monomial(session.lattice, session.lattice->zero(), std::vector<unsigned>(session.n(), 0),
                                 std::get<Scalar>(v));
}

std::string to_string(const Value& v, const Session& session)
{
    if (auto* s = std::get_if<Scalar>(&v))
        return s->to_string(session.params.get());
    return to_string(std::get<WeylElement>(v), session.params.get());
}

} // namespace weyl::cli
