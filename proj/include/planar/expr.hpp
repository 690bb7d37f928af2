#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planar/series.hpp"

namespace planar {

/// Parses "term (('+'|'-') term)*" with term = [rational '*'] mono and
/// mono = '1' | atom ('*' atom)*, atom = 'x' | 'y' | 'x^'INT (INT >= 2) |
/// '{'atomlist'}' orbit sum | '('atomlist')' group. An m-atom product is the
/// single m-ary graft. Inside parentheses ',' is accepted as a separator so
/// canonical encodings parse back. Whitespace is insignificant. The result
/// has precision equal to the largest x-degree present.
Series parse_series(std::string_view text);

/// Parses text that must denote one monomial with coefficient 1.
Monomial parse_monomial(std::string_view text);

/// Sign-folded "coeff*encoding" terms in canonical order; zero is "0*1".
std::string format_canonical(const Series& f);

/// Human style: unit coefficients omitted, all-x corollas as "x^n", full
/// orbits with one shared coefficient collapsed into "{...}"; zero is "0*1".
std::string format_pretty(const Series& f);

/// One monomial in pretty atom syntax, e.g. "x*(x*x^2)"; unit is "1".
std::string pretty_monomial(Monomial m);

/// JSON document with precision and the canonical term list; "k" is included
/// when the producing command had one. Byte-stable for equal inputs.
std::string format_json(const Series& f, std::optional<long> k);

} // namespace planar
