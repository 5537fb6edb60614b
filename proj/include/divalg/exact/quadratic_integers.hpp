#pragma once

// Gaussian integers Z[i] and Eisenstein integers Z[w] (w^2 + w + 1 = 0):
// Euclidean arithmetic and prime factorization of elements.

#include <optional>
#include <utility>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg::exact {

enum class QuadraticRing { Gaussian, Eisenstein };

/// x + y*t with t = i or t = w.
struct QuadInt {
  Integer x;
  Integer y;
  friend bool operator==(const QuadInt& a, const QuadInt& b) { return a.x == b.x && a.y == b.y; }
};

class QuadArith {
 public:
  explicit QuadArith(QuadraticRing ring) : ring_(ring) {}

  QuadraticRing ring() const { return ring_; }
  QuadInt mul(const QuadInt& a, const QuadInt& b) const;
  QuadInt sub(const QuadInt& a, const QuadInt& b) const { return {a.x - b.x, a.y - b.y}; }
  QuadInt conj(const QuadInt& a) const;
  Integer norm(const QuadInt& a) const;
  /// Exact quotient a / b when b divides a.
  std::optional<QuadInt> divide_exact(const QuadInt& a, const QuadInt& b) const;
  QuadInt gcd(QuadInt a, QuadInt b) const;

  /// The prime elements above a rational prime p, with e = v_pi(p).
  std::vector<std::pair<QuadInt, int>> primes_above(const Integer& p) const;

 private:
  QuadInt round_div(const QuadInt& a, const QuadInt& b) const;
  QuadraticRing ring_;
};

/// Prime factorization of |n| > 0 (trial division, then Pollard rho).
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

}  // namespace divalg::exact
