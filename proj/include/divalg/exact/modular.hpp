#pragma once

// Small-integer number theory, polynomials over F_p, and reduction of field
// elements at degree-one primes.  Used for load-time certificates and as a
// fast filter in the heuristic power test.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divalg/exact/number_field.hpp"

namespace divalg::exact {

using u64 = std::uint64_t;

std::vector<u64> primes_up_to(u64 bound);
bool is_prime_u64(u64 n);
/// Trial-division factorization, ascending primes.
std::vector<std::pair<u64, int>> factor_u64(u64 n);
u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inv_mod(u64 a, u64 m);

/// Integer cyclotomic polynomial Phi_m, constant term first.
std::vector<Integer> cyclotomic_polynomial(u64 m);

// Polynomials over F_p, constant term first, no trailing zeros.
using PolyP = std::vector<u64>;

PolyP reduce_poly(const std::vector<Integer>& f, u64 p);
std::vector<u64> roots_mod_p(const PolyP& f, u64 p);
bool squarefree_mod_p(const PolyP& f, u64 p);
/// Degrees of the irreducible factors of a squarefree polynomial mod p.
std::vector<int> factor_degrees_mod_p(PolyP f, u64 p);

/// A ring map from the power-basis order of a field onto F_p, given by the
/// images of the flat basis elements.
struct ResidueMap {
  u64 prime = 0;
  std::vector<u64> basis_values;
};

/// Degree-one residue maps at p.  Empty unless every polynomial of the tower
/// is squarefree mod p (so the order is p-maximal) and has a root.
std::vector<ResidueMap> residue_maps(const NumberField& field, u64 p, std::size_t limit = 64);

/// Image of x, or nullopt when a coordinate denominator is divisible by p.
std::optional<u64> reduce(const ResidueMap& map, const FieldElement& x);

}  // namespace divalg::exact
