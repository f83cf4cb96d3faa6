#ifndef STRATA_RATIONAL_HPP
#define STRATA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace strata {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) as long
// as values are produced by arithmetic; only raw string input needs an
// explicit canonicalize, which rat_from_string does.
using Rational = mpq_class;

// "p/q", or just "p" when the denominator is 1
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);

} // namespace strata

#endif
