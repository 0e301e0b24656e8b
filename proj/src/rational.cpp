#include "eadj/rational.hpp"

#include <cstdio>

#include "eadj/error.hpp"

namespace eadj {

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace eadj
