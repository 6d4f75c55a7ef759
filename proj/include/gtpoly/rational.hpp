#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gtpoly {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den reduced to lowest terms with positive denominator.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

/// "p" for integers, "p/q" otherwise; denominator always positive.
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

/// q in 1/2 + Z.
bool is_half_integer(const Rat& q);

/// q in offset + step*Z, step > 0.
bool in_coset(const Rat& q, const Rat& offset, const Rat& step);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// Clears denominators and divides by the content; the zero vector maps to itself.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

struct RatVecLess {
  bool operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

std::string vec_str(const std::vector<Rat>& v);

}  // namespace gtpoly
