#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace syz {

// All certification arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point. Strict inequalities at boundary values
// decide everything downstream.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k); zero when k < 0 or k > n (n >= 0).
Int binomial(const Int& n, long k);

// floor(q) and ceil(q) as exact integers.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

bool is_integer(const Rat& q);

// Parses "num/den" or a plain integer literal. Rejects anything else
// (whitespace, decimals, zero denominators).
Rat parse_rat(const std::string& s);

// Canonical rendering: "num/den", or just "num" when the denominator is 1.
std::string rat_str(const Rat& q);
std::string int_str(const Int& n);

}  // namespace syz
