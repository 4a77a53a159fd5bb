#ifndef STRINGY_RATIONAL_HPP
#define STRINGY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace stringy {

// Exact arbitrary-precision scalars. All arithmetic in this library is exact;
// no floating point appears anywhere.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline bool isInteger(const Rat& r) { return denominator(r) == 1; }

// "5", "-4" or "7/2".
std::string to_string(const Rat& r);

// Accepts an optional sign, an integer, or "p/q".
Rat parseRat(const std::string& text);

}  // namespace stringy

#endif
