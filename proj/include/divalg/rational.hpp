#pragma once

// Arbitrary-precision integers and rationals (GMP) plus small helpers shared
// by every module. Nothing in the library uses floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace divalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or " 5 / 2 " into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Splits a comma-separated list of rationals ("1,0,-1/2").
std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact integer k-th root of a non-negative integer, if it exists.
bool exact_root(const Integer& value, unsigned long k, Integer& root);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);

/// Lexicographic comparison of rational vectors (shorter-is-smaller on ties).
int compare(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct RationalVectorLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    return compare(a, b) < 0;
  }
};

}  // namespace divalg
