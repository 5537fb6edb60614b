#include "divalg/exact/field_ops.hpp"

#include <algorithm>

#include "divalg/error.hpp"
#include "divalg/exact/linear_algebra.hpp"
#include "divalg/exact/modular.hpp"
#include "divalg/exact/quadratic_integers.hpp"

namespace divalg::exact {

std::vector<FieldElement> minimal_polynomial(const FieldElement& x, const FieldPtr& over) {
  const FieldPtr& field = x.field();
  const int n = relative_degree(*field, *over);
  const int a = over->absolute_degree();
  const int d_abs = field->absolute_degree();
  std::vector<FieldElement> powers{field->one()};
  for (int d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * x);
    RationalMatrix m(d_abs, a * d);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < a; ++i) {
        auto col = (field->basis_element(i) * powers[j]).coords();
        for (int r = 0; r < d_abs; ++r) m(r, j * a + i) = col[r];
      }
    }
    auto sol = solve(std::move(m), powers[d].coords());
    if (!sol) continue;
    std::vector<FieldElement> poly;
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> c(sol->begin() + j * a, sol->begin() + (j + 1) * a);
      for (auto& v : c) v = -v;
      poly.push_back(over->from_coords(std::move(c)));
    }
    poly.push_back(over->one());
    return poly;
  }
  fail(ErrorCode::FieldMismatch, "no minimal polynomial found within the extension degree");
}

FieldElement trace(const FieldElement& x, const FieldPtr& over) {
  const FieldPtr& field = x.field();
  const int n = relative_degree(*field, *over);
  const int a = over->absolute_degree();
  FieldElement total = over->zero();
  for (int beta = 0; beta < n; ++beta) {
    auto prod = x * field->basis_element(static_cast<std::size_t>(beta) * a);
    std::vector<Rational> block(prod.coords().begin() + beta * a, prod.coords().begin() + (beta + 1) * a);
    total += over->from_coords(std::move(block));
  }
  return total;
}

Rational absolute_norm(const FieldElement& x) {
  const FieldPtr& field = x.field();
  const int d = field->absolute_degree();
  RationalMatrix m(d, d);
  for (int b = 0; b < d; ++b) {
    auto col = (x * field->basis_element(b)).coords();
    for (int r = 0; r < d; ++r) m(r, b) = col[r];
  }
  Rational det = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int c = 0; c < d; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < d; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (int c = col; c < d; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<int> is_root_of_unity(const FieldElement& x) {
  if (x.is_zero()) fail(ErrorCode::ZeroInput, "is_root_of_unity of zero");
  const int w = x.field()->torsion_order();
  if (!x.pow(w).is_one()) return std::nullopt;
  for (u64 d : divisors(static_cast<u64>(w))) {
    if (x.pow(static_cast<long long>(d)).is_one()) return static_cast<int>(d);
  }
  return w;
}

namespace {

std::optional<QuadraticRing> quadratic_ring_of(const NumberField& field) {
  if (field.is_rationals() || !field.base()->is_rationals()) return std::nullopt;
  const auto& f = field.defining_polynomial();
  if (f == std::vector<Integer>{1, 0, 1}) return QuadraticRing::Gaussian;
  if (f == std::vector<Integer>{1, 1, 1}) return QuadraticRing::Eisenstein;
  return std::nullopt;
}

PowerRoot finish(const FieldElement& a, FieldElement c, int alpha) {
  FieldElement unit = a / c.pow(alpha);
  auto order = is_root_of_unity(unit);
  if (!order) fail(ErrorCode::CrossCheckFailed, "power_test produced a non-torsion quotient");
  return PowerRoot{std::move(c), std::move(unit), *order};
}

bool rational_power(const Rational& q, int alpha, Rational& root) {
  Integer num, den;
  if (!exact_root(abs(q.get_num()), static_cast<unsigned long>(alpha), num)) return false;
  if (!exact_root(q.get_den(), static_cast<unsigned long>(alpha), den)) return false;
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

std::optional<PowerRoot> power_test_rational(const FieldElement& a, int alpha) {
  Rational root;
  if (!rational_power(a[0], alpha, root)) return std::nullopt;
  return finish(a, a.field()->from_rational(root), alpha);
}

std::optional<PowerRoot> power_test_quadratic(const FieldElement& a, int alpha, QuadraticRing ring) {
  const QuadArith ar(ring);
  const FieldPtr& field = a.field();
  Integer d = lcm(a[0].get_den(), a[1].get_den());
  QuadInt x{a[0].get_num() * (d / a[0].get_den()), a[1].get_num() * (d / a[1].get_den())};

  std::vector<Integer> primes;
  for (auto& [p, e] : factor_integer(ar.norm(x))) primes.push_back(p);
  if (d != 1) {
    for (auto& [p, e] : factor_integer(d)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  FieldElement c = field->one();
  for (const auto& p : primes) {
    int vp_d = 0;
    for (Integer t = d; t % p == 0; t /= p) ++vp_d;
    for (const auto& [pi, e] : ar.primes_above(p)) {
      int v = 0;
      while (auto q = ar.divide_exact(x, pi)) {
        x = *q;
        ++v;
      }
      v -= e * vp_d;
      if (v % alpha != 0) return std::nullopt;
      FieldElement pi_el = field->from_coords({Rational(pi.x), Rational(pi.y)});
      c *= pi_el.pow(v / alpha);
    }
  }
  return finish(a, std::move(c), alpha);
}

bool is_fp_power(u64 y, int alpha, u64 p) {
  const u64 g = static_cast<u64>(gcd64(alpha, static_cast<std::int64_t>(p - 1)));
  return pow_mod(y, (p - 1) / g, p) == 1;
}

struct Probe {
  ResidueMap map;
  u64 a_value;
  std::vector<u64> allowed;  // images of the roots of unity not yet excluded
};

constexpr long long kSearchBudget = 1000000;

std::optional<PowerRoot> power_test_heuristic(const FieldElement& a, int alpha) {
  const FieldPtr& field = a.field();
  if (is_root_of_unity(a)) return finish(a, field->one(), alpha);

  // Norm obstruction: |N(a)| = |N(c)|^alpha.
  Rational root;
  if (!rational_power(absolute_norm(a), alpha, root)) return std::nullopt;

  // Modular obstruction at degree-one primes, per root of unity.
  const int w = field->torsion_order();
  const auto zeta = field->torsion_generator();
  std::vector<FieldElement> mu{field->one()};
  for (int k = 1; k < w; ++k) mu.push_back(mu.back() * zeta);
  std::vector<bool> excluded(w, false);
  std::vector<Probe> probes;
  for (u64 p : primes_up_to(2000)) {
    if (p < 3 || probes.size() >= 24) continue;
    for (auto& map : residue_maps(*field, p, 4)) {
      auto av = reduce(map, a);
      if (!av || *av == 0) continue;
      Probe probe{map, *av, {}};
      for (int k = 0; k < w; ++k) {
        auto zv = reduce(map, mu[k]);
        if (!zv) continue;
        if (!is_fp_power(mul_mod(*av, inv_mod(*zv, p), p), alpha, p)) excluded[k] = true;
      }
      probes.push_back(std::move(probe));
    }
  }
  if (std::all_of(excluded.begin(), excluded.end(), [](bool b) { return b; })) return std::nullopt;
  for (auto& probe : probes) {
    for (int k = 0; k < w; ++k) {
      if (excluded[k]) continue;
      if (auto zv = reduce(probe.map, mu[k])) probe.allowed.push_back(*zv);
    }
  }

  auto passes_probes = [&](const FieldElement& c) {
    for (const auto& probe : probes) {
      const u64 p = probe.map.prime;
      auto cv = reduce(probe.map, c);
      if (!cv) continue;
      if (*cv == 0) return false;
      u64 q = mul_mod(probe.a_value, inv_mod(pow_mod(*cv, static_cast<u64>(alpha), p), p), p);
      if (std::find(probe.allowed.begin(), probe.allowed.end(), q) == probe.allowed.end()) return false;
    }
    return true;
  };

  // Bounded search by increasing coordinate height.  Denominators: 1, 2 and the
  // denominator of |N(c)| (times 2), which clears c for ideals of coprime norm.
  std::vector<long> dens{1, 2};
  if (root.get_den().fits_slong_p() && root.get_den() < 100000) {
    dens.push_back(root.get_den().get_si());
    dens.push_back(2 * root.get_den().get_si());
  }
  std::sort(dens.begin(), dens.end());
  dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
  const int dim = field->absolute_degree();
  long long tested = 0;
  std::vector<long> num(dim);
  for (long h = 1; tested < kSearchBudget; ++h) {
    for (long den : dens) {
      std::fill(num.begin(), num.end(), -h);
      while (true) {
        bool at_height = std::any_of(num.begin(), num.end(), [h](long v) { return v == h || v == -h; });
        if (at_height) {
          std::vector<Rational> coords(dim);
          for (int i = 0; i < dim; ++i) {
            coords[i] = Rational(num[i], den);
            coords[i].canonicalize();
          }
          FieldElement c = field->from_coords(std::move(coords));
          ++tested;
          if (passes_probes(c)) {
            FieldElement unit = a / c.pow(alpha);
            if (auto order = is_root_of_unity(unit)) return PowerRoot{std::move(c), std::move(unit), *order};
          }
          if (tested >= kSearchBudget) break;
        }
        int i = 0;
        while (i < dim && num[i] == h) num[i++] = -h;
        if (i == dim) break;
        ++num[i];
      }
      if (tested >= kSearchBudget) break;
    }
  }
  fail(ErrorCode::HeuristicInconclusive,
       "power_test(" + a.to_string() + ", " + std::to_string(alpha) + ") undecided in " + field->label());
}

}  // namespace

bool power_test_is_exact(const NumberField& field) {
  return field.is_rationals() || quadratic_ring_of(field).has_value();
}

std::optional<PowerRoot> power_test(const FieldElement& a, int alpha) {
  if (a.is_zero()) fail(ErrorCode::ZeroInput, "power_test of zero");
  if (alpha < 1) fail(ErrorCode::InvalidArgument, "power_test exponent must be positive");
  const FieldPtr& field = a.field();
  if (field->is_rationals()) return power_test_rational(a, alpha);
  if (auto ring = quadratic_ring_of(*field)) return power_test_quadratic(a, alpha, *ring);
  return power_test_heuristic(a, alpha);
}

}  // namespace divalg::exact
