#pragma once

// Balanced semidirect products Z/n x| Z/p and the target shape
// (Z/n x| Z/p) x Z/p.

#include <cstdint>
#include <optional>
#include <vector>

#include "divalg/groups/table.hpp"

namespace divalg::groups {

struct BalancedSdpDescriptor {
  std::uint64_t n = 1;
  std::uint64_t p = 3;
  std::uint64_t r = 1;  // b a b^-1 = a^r
};

/// Every prime factor q of n satisfies q = 1 mod p (true for n = 1).
bool balanced_exists(std::uint64_t n, std::uint64_t p);

/// Table of Z/n x|_r Z/p with a^i b^j at index i + n j.
FiniteGroupTable semidirect_table(std::uint64_t n, std::uint64_t p, std::uint64_t r);

/// Smallest r with r^p = 1 mod n and gcd(r - 1, n) = 1.  Throws NoBalancedProduct.
std::pair<BalancedSdpDescriptor, FiniteGroupTable> balanced_build(std::uint64_t n, std::uint64_t p);

/// (Z/n x|_r Z/p) x Z/p given implicitly; (i, j, k) is encoded as i + n (j + p k).
class ShapeGroup {
 public:
  ShapeGroup(std::uint64_t n, std::uint64_t p, std::uint64_t r);
  std::uint64_t order() const { return n_ * p_ * p_; }
  std::uint64_t identity() const { return 0; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
  int element_order(std::uint64_t x) const;
  std::uint64_t n() const { return n_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t r() const { return r_; }

 private:
  std::uint64_t n_, p_, r_;
  std::vector<std::uint64_t> r_powers_;
};

/// Z/n x|_r Z/p given implicitly; a^i b^j is encoded as i + n j.
class SemidirectGroup {
 public:
  SemidirectGroup(std::uint64_t n, std::uint64_t p, std::uint64_t r) : shape_(n, p, r) {}
  std::uint64_t order() const { return shape_.n() * shape_.p(); }
  std::uint64_t identity() const { return 0; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return shape_.mul(x, y); }
  int element_order(std::uint64_t x) const { return shape_.element_order(x); }

 private:
  ShapeGroup shape_;
};

struct ShapeEmbedding {
  std::uint64_t n = 1;
  std::uint64_t r = 1;
  std::vector<std::uint64_t> images;  // element of G -> encoded element of the shape
};

/// Smallest n <= bound (default 10 |G|) with balanced_exists(n, p) and a
/// verified monomorphism G -> shape(n, p).  nullopt when element orders rule
/// out every n; SearchBoundExceeded when the bound runs out.
std::optional<ShapeEmbedding> embeds_in_balanced_shape(const FiniteGroupTable& g, std::uint64_t p,
                                                   std::uint64_t bound = 0);

bool is_odd_prime(std::uint64_t p);

}  // namespace divalg::groups
