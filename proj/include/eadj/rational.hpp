#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace eadj {

using Integer = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer.
Integer factorial(std::size_t n);

/// Canonical text form: `num/den`, or just `num` when den == 1.
std::string to_string(const Rational& q);

/// Parses `num` or `num/den`; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// Fixed 12 significant digits, used for every floating value that is printed.
std::string format_real(double v);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

}  // namespace eadj
