#pragma once

// Verification runners: each produces a deterministic report whose checks
// name the statement they verify.

#include <cstdint>
#include <string>
#include <vector>

#include "divalg/csa/catalog.hpp"
#include "divalg/exact/catalog.hpp"
#include "divalg/scenarios/catalog.hpp"
#include "divalg/scenarios/report.hpp"

namespace divalg::scenarios {

struct Context {
  const exact::FieldCatalog* fields = nullptr;
  const csa::AlgebraCatalog* algebras = nullptr;
  const GroupCatalog* groups = nullptr;
  std::size_t closure_bound = projective::kDefaultClosureBound;
  std::uint64_t seed = 0x5EED;
};

struct SuiteOptions {
  std::int64_t gamma_max_order = 64;
  std::size_t pairings_per_shape = 10000;
  std::uint64_t n_max = 200;
  std::vector<std::uint64_t> primes{3, 5, 7};
  int nrd_pairs = 100;
  std::vector<std::size_t> quaternion_orders{8, 16, 32, 64};
};

/// N_G normal, G/N_G abelian of order dividing n^2, finite lift, plus the
/// pairing, isotropic subgroup and invariant subfield checks per group.
VerificationReport run_main_suite(const Context& ctx);
void run_main_entry(const Context& ctx, const CatalogEntry& entry, VerificationReport& report);

/// Embedding into (Z/n x| Z/p) x Z/p for groups over prime-degree algebras.
VerificationReport run_prime_degree_suite(const Context& ctx);

/// Binary icosahedral group over Q(sqrt5) and its A5 quotient.
VerificationReport run_icosahedral(const Context& ctx);

VerificationReport run_gamma_suite(std::int64_t max_order, std::size_t pairings_per_shape, std::uint64_t seed);
VerificationReport run_balanced_suite(std::uint64_t n_max, const std::vector<std::uint64_t>& primes);

/// Nrd(xy) = Nrd(x) Nrd(y) and Nrd(c) = c^n on seeded random samples.
VerificationReport run_nrd_laws(const Context& ctx, int pairs);

/// Scalar-power and reduced-norm criteria agree on every catalog element.
VerificationReport run_finite_order_routes(const Context& ctx);

/// Generalized quaternion modulo center is dihedral of half the order.
VerificationReport run_quaternion_quotients(const std::vector<std::size_t>& orders);

/// Trace and degree divisibility for subgroups of L*/k*.
VerificationReport run_galois(const Context& ctx);

/// "main", "main-prime", "a5", "gamma", "balanced", "nrd", "finite-order",
/// "quaternion-quotient", "galois"; "all" runs each of them in this order.
const std::vector<std::string>& scenario_names();
std::vector<VerificationReport> run_scenario(const std::string& name, const Context& ctx, const SuiteOptions& opts);

}  // namespace divalg::scenarios
