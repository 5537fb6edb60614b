// Load-time certificates for catalog fields: irreducibility of the defining
// polynomial, automorphism data, and the exact number of roots of unity.

#include <bitset>
#include <string>

#include "divalg/error.hpp"
#include "divalg/exact/modular.hpp"
#include "divalg/exact/number_field.hpp"

namespace divalg::exact {

namespace {

constexpr u64 kPrimeSearchBound = 6000;

[[noreturn]] void reject(const NumberField& f, const std::string& msg) {
  fail(ErrorCode::CatalogError, f.label() + ": " + msg);
}

std::bitset<64> subset_sums(const std::vector<int>& degrees) {
  std::bitset<64> s;
  s.set(0);
  for (int d : degrees) s |= s << d;
  return s;
}

bool has_rational_root(const std::vector<Integer>& f) {
  if (f[0] == 0) return true;
  Integer c = abs(f[0]);
  // Monic: rational roots are integer divisors of the constant term.
  for (Integer d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    for (const Integer& cand : {d, Integer(-d), Integer(c / d), Integer(-(c / d))}) {
      Integer acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = acc * cand + f[i];
      if (acc == 0) return true;
    }
  }
  return false;
}

bool irreducible_over_q(const NumberField& field) {
  const auto& f = field.defining_polynomial();
  const int d = field.degree();
  for (u64 m = 1; m <= static_cast<u64>(6 * d * d + 6); ++m) {
    if (euler_phi(m) == static_cast<u64>(d) && cyclotomic_polynomial(m) == f) return true;
  }
  if (d <= 3) return !has_rational_root(f);
  if (d >= 64) return false;
  std::bitset<64> possible;
  for (int i = 0; i <= d; ++i) possible.set(i);
  std::bitset<64> target;
  target.set(0);
  target.set(d);
  for (u64 p : primes_up_to(kPrimeSearchBound)) {
    const PolyP fp = reduce_poly(f, p);
    if (!squarefree_mod_p(fp, p)) continue;
    possible &= subset_sums(factor_degrees_mod_p(fp, p));
    if (possible == target) return true;
  }
  return false;
}

bool irreducible_over_base(const NumberField& field) {
  if (field.degree() > 3) return false;
  const auto& base = *field.base();
  for (u64 p : primes_up_to(kPrimeSearchBound)) {
    if (residue_maps(base, p, 1).empty()) continue;
    if (roots_mod_p(reduce_poly(field.defining_polynomial(), p), p).empty()) return true;
  }
  return false;
}

FieldElement evaluate_defining(const NumberField& field, const FieldElement& x) {
  const auto& f = field.defining_polynomial();
  FieldElement acc = field.zero();
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * x + field.from_rational(Rational(f[i]));
  }
  return acc;
}

bool has_exact_order(const FieldElement& x, u64 w) {
  if (!x.pow(static_cast<long long>(w)).is_one()) return false;
  for (auto [q, e] : factor_u64(w)) {
    if (x.pow(static_cast<long long>(w / q)).is_one()) return false;
  }
  return true;
}

std::optional<FieldElement> search_torsion_witness(const NumberField& field, u64 w) {
  const int d = field.absolute_degree();
  for (int i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      auto x = field.basis_element(i) * Rational(sign);
      if (has_exact_order(x, w)) return x;
    }
  }
  long long total = 1;
  for (int i = 0; i < d && total <= 100000; ++i) total *= 3;
  if (total > 100000) return std::nullopt;
  std::vector<Rational> c(d, Rational(0));
  for (long long code = 0; code < total; ++code) {
    long long r = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<int>(r % 3) - 1;
      r /= 3;
    }
    auto x = field.from_coords(c);
    if (!x.is_zero() && has_exact_order(x, w)) return x;
  }
  return std::nullopt;
}

}  // namespace

void validate_field(NumberField& field, const FieldSpec& spec) {
  // Irreducibility.
  const bool irreducible = field.base()->is_rationals() ? irreducible_over_q(field) : irreducible_over_base(field);
  if (!irreducible) reject(field, "could not certify irreducibility of the defining polynomial");

  // Automorphisms: roots of f, fixing the base by construction, distinct, closed.
  const auto theta = field.generator();
  std::vector<std::vector<Rational>> seen;
  for (std::size_t i = 0; i < field.automorphism_count(); ++i) {
    auto image = field.automorphism_image(i);
    if (!evaluate_defining(field, image).is_zero()) reject(field, "automorphism " + std::to_string(i) + " does not map the generator to a root");
    for (const auto& s : seen) {
      if (s == image.coords()) reject(field, "duplicate automorphism " + std::to_string(i));
    }
    seen.push_back(image.coords());
  }
  for (std::size_t i = 0; i < field.automorphism_count(); ++i) {
    for (std::size_t j = 0; j < field.automorphism_count(); ++j) {
      auto composed = field.apply_automorphism(i, field.automorphism_image(j));
      bool found = false;
      for (const auto& s : seen) found = found || s == composed.coords();
      if (!found) reject(field, "automorphisms are not closed under composition");
    }
  }

  // Roots of unity.
  const u64 w = static_cast<u64>(spec.torsion_order);
  if (spec.torsion_order < 2 || w % 2 != 0) reject(field, "torsion_order must be even and at least 2");
  std::optional<FieldElement> witness;
  if (spec.torsion_generator) {
    if (static_cast<int>(spec.torsion_generator->size()) != field.absolute_degree()) {
      reject(field, "torsion_generator has wrong coordinate count");
    }
    witness = field.from_coords(*spec.torsion_generator);
    if (!has_exact_order(*witness, w)) reject(field, "torsion_generator is not a primitive root of unity of order " + std::to_string(w));
  } else {
    witness = search_torsion_witness(field, w);
    if (!witness) reject(field, "no primitive root of unity of order " + std::to_string(w) + " found");
  }
  field.torsion_coords_ = witness->coords();

  const u64 d = static_cast<u64>(field.absolute_degree());
  const auto primes = primes_up_to(kPrimeSearchBound);
  for (u64 m = 3; m <= 6 * d * d + 6; ++m) {
    if (d % euler_phi(m) != 0 || w % m == 0) continue;
    bool certified = false;
    for (u64 p : primes) {
      if (m % p == 0 || (p - 1) % m == 0) continue;
      if (!residue_maps(field, p, 1).empty()) {
        certified = true;
        break;
      }
    }
    if (!certified) reject(field, "cannot exclude roots of unity of order " + std::to_string(m));
  }
}

}  // namespace divalg::exact
