#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cbundle {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

} // namespace cbundle
