#include "divalg/groups/balanced.hpp"

#include "divalg/error.hpp"
#include "divalg/exact/modular.hpp"
#include "divalg/groups/morphism.hpp"

namespace divalg::groups {

using exact::factor_u64;
using exact::pow_mod;

bool is_odd_prime(std::uint64_t p) { return p > 2 && exact::is_prime_u64(p); }

namespace {

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

}  // namespace

bool balanced_exists(std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p);
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  for (auto [q, e] : factor_u64(n)) {
    if (q % p != 1) return false;
  }
  return true;
}

FiniteGroupTable semidirect_table(std::uint64_t n, std::uint64_t p, std::uint64_t r) {
  const std::uint64_t order = n * p;
  std::vector<std::uint64_t> rp(p);
  rp[0] = 1 % n;
  for (std::uint64_t j = 1; j < p; ++j) rp[j] = rp[j - 1] * r % n;
  if (rp[p - 1] * r % n != 1 % n) fail(ErrorCode::InvalidArgument, "r^p is not 1 mod n");
  std::vector<Elem> t(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % n, j = x / n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t i2 = y % n, j2 = y / n;
      t[x * order + y] = static_cast<Elem>((i + rp[j] * i2) % n + n * ((j + j2) % p));
    }
  }
  return FiniteGroupTable(order, std::move(t));
}

std::pair<BalancedSdpDescriptor, FiniteGroupTable> balanced_build(std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p);
  if (n < 2) fail(ErrorCode::NoBalancedProduct, "n must be greater than 1");
  if (!balanced_exists(n, p)) fail(ErrorCode::NoBalancedProduct, "a prime factor of " + std::to_string(n) + " is not 1 mod " + std::to_string(p));
  for (std::uint64_t r = 2; r < n; ++r) {
    if (pow_mod(r, p, n) == 1 && gcd64(static_cast<std::int64_t>(r - 1), static_cast<std::int64_t>(n)) == 1) {
      auto table = semidirect_table(n, p, r);
      if (center(table).size() != 1) fail(ErrorCode::NoBalancedProduct, "center is not trivial");
      return {BalancedSdpDescriptor{n, p, r}, std::move(table)};
    }
  }
  fail(ErrorCode::NoBalancedProduct, "no multiplier of order " + std::to_string(p) + " mod " + std::to_string(n));
}

ShapeGroup::ShapeGroup(std::uint64_t n, std::uint64_t p, std::uint64_t r) : n_(n), p_(p), r_(r), r_powers_(p) {
  r_powers_[0] = 1 % n;
  for (std::uint64_t j = 1; j < p; ++j) r_powers_[j] = r_powers_[j - 1] * r % n;
}

std::uint64_t ShapeGroup::mul(std::uint64_t x, std::uint64_t y) const {
  const std::uint64_t i = x % n_, j = (x / n_) % p_, k = x / (n_ * p_);
  const std::uint64_t i2 = y % n_, j2 = (y / n_) % p_, k2 = y / (n_ * p_);
  return (i + r_powers_[j] * i2) % n_ + n_ * ((j + j2) % p_ + p_ * ((k + k2) % p_));
}

int ShapeGroup::element_order(std::uint64_t x) const {
  int k = 1;
  for (std::uint64_t y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

std::optional<ShapeEmbedding> embeds_in_balanced_shape(const FiniteGroupTable& g, std::uint64_t p, std::uint64_t bound) {
  require_odd_prime(p);
  if (g.order() > 2000) fail(ErrorCode::InvalidArgument, "group order above 2000");
  // Element orders of the shape divide n p with n prime to p and every prime of n = 1 mod p.
  for (Elem x = 0; x < g.order(); ++x) {
    const auto ord = static_cast<std::uint64_t>(g.element_order(x));
    if (ord % (p * p) == 0) return std::nullopt;
    for (auto [q, e] : factor_u64(ord)) {
      if (q != p && q % p != 1) return std::nullopt;
    }
  }
  if (bound == 0) bound = 10 * g.order();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if ((n * p * p) % g.order() != 0 || !balanced_exists(n, p)) continue;
    const std::uint64_t r = n == 1 ? 1 : balanced_build(n, p).first.r;
    ShapeGroup shape(n, p, r);
    if (auto images = find_monomorphism(g, shape)) return ShapeEmbedding{n, r, std::move(*images)};
  }
  fail(ErrorCode::SearchBoundExceeded, "no embedding with n <= " + std::to_string(bound));
}

}  // namespace divalg::groups
