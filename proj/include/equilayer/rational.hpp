#pragma once

#include <gmpxx.h>

#include <string>

namespace equilayer {

// Exact arithmetic everywhere: counts may exceed 64 bits (Bell numbers do
// so near m = 25) and verification admits no epsilon.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not reduce; this does, and fixes the sign of den.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& value);

}  // namespace equilayer
