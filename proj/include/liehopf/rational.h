#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace liehopf {

/// Exact rational scalar (arbitrary precision, always canonical).
using Rational = mpq_class;

/// Parses an integer or `p/q` literal (optional leading sign). Throws
/// Error(MalformedRational) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(Rational const &q);

inline bool is_zero(Rational const &q) { return sgn(q) == 0; }

} // namespace liehopf
