#include "divalg/exact/modular.hpp"

#include <algorithm>
#include <tuple>

#include "divalg/error.hpp"

namespace divalg::exact {

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [q, e] : factor_u64(n)) phi = phi / q * (q - 1);
  return phi;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    auto q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) fail(ErrorCode::DivisionByZero, "no inverse mod " + std::to_string(m));
  return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

void make_monic(PolyP& f, u64 p) {
  if (f.empty()) return;
  const u64 inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
}

// Remainder of a divided by b (b nonzero).
PolyP poly_rem(PolyP a, const PolyP& b, u64 p) {
  trim(a);
  const u64 lead_inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    const u64 f = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(f, b[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PolyP poly_quot(PolyP a, const PolyP& b, u64 p) {
  trim(a);
  if (deg(a) < deg(b)) return {};
  PolyP q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    const u64 f = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(f, b[j], p)) % p;
    }
    trim(a);
  }
  return q;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return poly_rem(std::move(out), m, p);
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

PolyP poly_pow_mod(PolyP base, u64 e, const PolyP& m, u64 p) {
  PolyP result{1};
  base = poly_rem(std::move(base), m, p);
  while (e != 0) {
    if (e & 1U) result = poly_mul_mod(result, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(u64 m) {
  std::vector<Integer> num(m + 1, Integer(0));
  num[0] = -1;
  num[m] = 1;
  for (u64 d : divisors(m)) {
    if (d == m) continue;
    num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

PolyP reduce_poly(const std::vector<Integer>& f, u64 p) {
  PolyP out;
  out.reserve(f.size());
  Integer r;
  for (const auto& c : f) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

std::vector<u64> roots_mod_p(const PolyP& f, u64 p) {
  std::vector<u64> out;
  if (f.empty()) return out;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + f[i]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

bool squarefree_mod_p(const PolyP& f, u64 p) {
  if (f.size() < 2) return !f.empty();
  PolyP df(f.size() - 1, 0);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = mul_mod(f[i], i % p, p);
  trim(df);
  if (df.empty()) return false;
  return deg(poly_gcd(f, df, p)) == 0;
}

std::vector<int> factor_degrees_mod_p(PolyP f, u64 p) {
  make_monic(f, p);
  std::vector<int> out;
  const PolyP t{0, 1};
  PolyP h = t;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = poly_pow_mod(h, p, f, p);
    PolyP diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    PolyP g = poly_gcd(f, diff, p);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) out.push_back(i);
      f = poly_quot(f, g, p);
      h = poly_rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(deg(f));
  return out;
}

std::vector<ResidueMap> residue_maps(const NumberField& field, u64 p, std::size_t limit) {
  if (field.is_rationals()) return {ResidueMap{p, {1 % p}}};
  auto below = residue_maps(*field.base(), p, limit);
  if (below.empty()) return {};
  const PolyP f = reduce_poly(field.defining_polynomial(), p);
  if (!squarefree_mod_p(f, p)) return {};
  const auto roots = roots_mod_p(f, p);
  std::vector<ResidueMap> out;
  for (const auto& b : below) {
    for (u64 root : roots) {
      ResidueMap m{p, {}};
      m.basis_values.reserve(field.absolute_degree());
      u64 power = 1;
      for (int j = 0; j < field.degree(); ++j) {
        for (u64 v : b.basis_values) m.basis_values.push_back(mul_mod(v, power, p));
        power = mul_mod(power, root, p);
      }
      out.push_back(std::move(m));
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

std::optional<u64> reduce(const ResidueMap& map, const FieldElement& x) {
  const u64 p = map.prime;
  u64 acc = 0;
  Integer r;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const Rational& c = x[i];
    if (c == 0) continue;
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return std::nullopt;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), p);
    u64 num = r.get_ui();
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_den_mpz_t(), p);
    u64 val = mul_mod(num, inv_mod(r.get_ui(), p), p);
    acc = (acc + mul_mod(val, map.basis_values[i], p)) % p;
  }
  return acc;
}

}  // namespace divalg::exact
