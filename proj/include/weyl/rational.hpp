#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weyl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optionally signed); throws weyl::Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace weyl
