#pragma once

#include "weyl/lattice.hpp"
#include "weyl/scalar.hpp"
#include "weyl/weyl_element.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weyl::cli {

/// Version tag of the element text format described in FORMAT.md.
inline constexpr const char* grammar_version = "weyl-expr/1";

/// Which algebra expressions are evaluated in: W(Γ,n), W(Γ,n)^(1) or Ŵ(Γ,1).
enum class Mode { full, w1, hat };

const char* to_string(Mode mode);
/// "full", "w1" or "hat"; throws Error otherwise.
Mode parse_mode(std::string_view text);

struct Expr {
    enum class Kind {
        number,     // value
        parameter,  // name
        t_power,    // exponent
        d_var,      // index (0 for plain D)
        falling,    // index, power
        ddt,
        central,
        add,
        sub,
        mul,
        neg,
        pow,        // power
        bracket,
    };

    Kind kind = Kind::number;
    std::size_t pos = 0;
    Rational value;
    std::string name;
    std::vector<Rational> exponent;
    unsigned index = 0;
    unsigned power = 0;
    std::vector<Expr> args;
};

/// Parses one expression; throws ParseError with the offending character offset.
Expr parse(std::string_view text);

/// S-expression dump of a parse tree, for debugging.
std::string to_string(const Expr& e);

struct Session {
    LatticeRef lattice;
    std::shared_ptr<const ParameterSet> params;
    Mode mode = Mode::full;

    /// Z^n with the given parameter names. Throws for reserved or invalid names and for
    /// hat mode with n != 1.
    static Session make(LatticeRef lattice, std::vector<std::string> params = {}, Mode mode = Mode::full);
    std::size_t n() const { return lattice->dim(); }
};

using Value = std::variant<Scalar, WeylElement>;

/// Evaluates a parse tree. Elements keep the falling basis where the input is written in it
/// (see FORMAT.md); in w1 mode an element result must lie in W^(1).
Value eval(const Expr& e, const Session& session);
Value evaluate(std::string_view text, const Session& session);

/// The value as an element (scalars become multiples of 1).
WeylElement as_element(const Value& v, const Session& session);
std::string to_string(const Value& v, const Session& session);

} // namespace weyl::cli
