#pragma once

#include <gmpxx.h>

#include <string>

namespace vecmeas {

// Exact rational scalar. All measure weights, matrix entries and polyhedral
// norm values are carried in this type; nothing in the core modules rounds.
using Rat = mpq_class;

// Parses "p/q" or "p" (optional sign, arbitrary precision). The result is
// canonicalized, so "2/4" and "1/2" parse to the same value.
// Throws std::invalid_argument naming the offending text.
Rat rat_parse(const std::string& text);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int rat_sign(const Rat& r) { return sgn(r); }

// 2^-k as an exact rational, k >= 0.
Rat rat_pow2_inv(int k);

}  // namespace vecmeas
