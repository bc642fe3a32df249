#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace excalg {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (lowest terms not required). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

/// Lowest-terms rendering; denominator omitted when it is 1 ("5", "-3/2").
std::string format_rat(const Rat& q);

std::string format_int(const Int& z);

Int parse_int(const std::string& s);

}  // namespace excalg
