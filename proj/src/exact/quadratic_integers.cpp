#include "divalg/exact/quadratic_integers.hpp"

#include <algorithm>
#include <map>

#include "divalg/error.hpp"

namespace divalg::exact {

QuadInt QuadArith::mul(const QuadInt& a, const QuadInt& b) const {
  if (ring_ == QuadraticRing::Gaussian) return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
  // w^2 = -1 - w
  const Integer yy = a.y * b.y;
  return {a.x * b.x - yy, a.x * b.y + a.y * b.x - yy};
}

QuadInt QuadArith::conj(const QuadInt& a) const {
  if (ring_ == QuadraticRing::Gaussian) return {a.x, -a.y};
  return {a.x - a.y, -a.y};
}

Integer QuadArith::norm(const QuadInt& a) const {
  if (ring_ == QuadraticRing::Gaussian) return a.x * a.x + a.y * a.y;
  return a.x * a.x - a.x * a.y + a.y * a.y;
}

std::optional<QuadInt> QuadArith::divide_exact(const QuadInt& a, const QuadInt& b) const {
  const Integer n = norm(b);
  if (n == 0) fail(ErrorCode::DivisionByZero, "division by zero in quadratic ring");
  QuadInt t = mul(a, conj(b));
  if (t.x % n != 0 || t.y % n != 0) return std::nullopt;
  return QuadInt{t.x / n, t.y / n};
}

namespace {

Integer round_quotient(const Integer& num, const Integer& den) {
  // floor((2 num + den) / (2 den)) for den > 0
  Integer q;
  Integer twice = 2 * num + den;
  Integer d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
  return q;
}

}  // namespace

QuadInt QuadArith::round_div(const QuadInt& a, const QuadInt& b) const {
  const Integer n = norm(b);
  QuadInt t = mul(a, conj(b));
  return {round_quotient(t.x, n), round_quotient(t.y, n)};
}

QuadInt QuadArith::gcd(QuadInt a, QuadInt b) const {
  while (!(b.x == 0 && b.y == 0)) {
    QuadInt r = sub(a, mul(b, round_div(a, b)));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<QuadInt, int>> QuadArith::primes_above(const Integer& p) const {
  if (ring_ == QuadraticRing::Gaussian) {
    if (p == 2) return {{QuadInt{1, 1}, 2}};
    if (p % 4 == 3) return {{QuadInt{p, 0}, 1}};
    // r^2 = -1 mod p from a non-residue g: r = g^((p-1)/4).
    Integer e = (p - 1) / 4;
    for (Integer g = 2;; ++g) {
      Integer r;
      mpz_powm(r.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      if ((r * r + 1) % p == 0) {
        QuadInt pi = gcd(QuadInt{p, 0}, QuadInt{r, 1});
        return {{pi, 1}, {conj(pi), 1}};
      }
    }
  }
  if (p == 3) return {{QuadInt{1, -1}, 2}};
  if (p % 3 == 2) return {{QuadInt{p, 0}, 1}};
  Integer e = (p - 1) / 3;
  for (Integer g = 2;; ++g) {
    Integer r;
    mpz_powm(r.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r != 1) {
      QuadInt pi = gcd(QuadInt{p, 0}, QuadInt{-r, 1});
      return {{pi, 1}, {conj(pi), 1}};
    }
  }
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return Integer(2);
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  n = abs(n);
  if (n == 0) fail(ErrorCode::ZeroInput, "factorization of zero");
  std::map<Integer, int> found;
  for (unsigned long d = 2; d < 10000 && Integer(d) * d <= n; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      found[Integer(d)] += 1;
      n /= d;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

}  // namespace divalg::exact
