#include "divalg/groups/icosahedral.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "divalg/error.hpp"

namespace divalg::groups {

using exact::FieldElement;

namespace {

bool is_even_permutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) inversions += p[a] > p[b];
  }
  return inversions % 2 == 0;
}

}  // namespace

BinaryIcosahedral binary_icosahedral(const csa::AlgebraPtr& quaternions) {
  const auto& k = quaternions->base();
  const auto& big = quaternions->splitting();
  if (quaternions->degree() != 2 || k->degree() != 2 || k->base() == nullptr || !k->base()->is_rationals() || k->defining_polynomial() != std::vector<Integer>{-5, 0, 1}) {
    fail(ErrorCode::InvalidArgument, "expected a quaternion algebra over Q(sqrt5)");
  }
  if (quaternions->a() != k->from_rational(-1) || big->generator() * big->generator() != big->from_rational(-1)) {
    fail(ErrorCode::InvalidArgument, "expected the algebra (-1,-1)");
  }
  auto val = [&](Rational a, Rational b) { return k->from_coords({a, b}); };
  const Rational h(1, 2), q(1, 4);
  const FieldElement zero = k->zero(), one = k->one(), half = val(h, 0);
  const FieldElement phi_half = val(q, q), phi_inv_half = val(-q, q);
  const FieldElement i = big->generator();

  auto quaternion = [&](const std::array<FieldElement, 4>& c) {
    return quaternions->from_coords({embed(c[0], big) + embed(c[1], big) * i, embed(c[2], big) + embed(c[3], big) * i});
  };

  std::vector<std::array<FieldElement, 4>> coords;
  for (int pos = 0; pos < 4; ++pos) {
    for (int s : {1, -1}) {
      std::array<FieldElement, 4> c{zero, zero, zero, zero};
      c[pos] = s == 1 ? one : -one;
      coords.push_back(c);
    }
  }
  for (int signs = 0; signs < 16; ++signs) {
    std::array<FieldElement, 4> c;
    for (int b = 0; b < 4; ++b) c[b] = (signs >> b) & 1 ? -half : half;
    coords.push_back(c);
  }
  const std::array<FieldElement, 4> base_vals{zero, half, phi_half, phi_inv_half};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    if (!is_even_permutation(perm)) continue;
    for (int signs = 0; signs < 8; ++signs) {
      std::array<FieldElement, 4> c;
      for (int slot = 0; slot < 4; ++slot) {
        const int src = perm[slot];
        c[slot] = base_vals[src];
        if (src > 0 && ((signs >> (src - 1)) & 1)) c[slot] = -c[slot];
      }
      coords.push_back(c);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  BinaryIcosahedral out{{}, FiniteGroupTable(1, {0})};
  std::map<std::vector<Rational>, Elem, RationalVectorLess> index;
  out.elements.push_back(quaternions->one());
  index.emplace(quaternions->one().flat(), 0);
  for (const auto& c : coords) {
    auto x = quaternion(c);
    if (index.emplace(x.flat(), static_cast<Elem>(out.elements.size())).second) out.elements.push_back(std::move(x));
  }
  const std::size_t n = out.elements.size();
  if (n != 120) fail(ErrorCode::InvalidArgument, "expected 120 distinct units, got " + std::to_string(n));
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find((out.elements[a] * out.elements[b]).flat());
      if (it == index.end()) fail(ErrorCode::InvalidArgument, "unit set is not closed under multiplication");
      table[a * n + b] = it->second;
    }
  }
  out.table = FiniteGroupTable(n, std::move(table));
  return out;
}

std::map<int, int> a5_histogram() { return {{1, 1}, {2, 15}, {3, 20}, {5, 24}}; }

}  // namespace divalg::groups
