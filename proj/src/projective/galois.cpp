#include "divalg/projective/galois.hpp"

#include <map>

#include "divalg/error.hpp"
#include "divalg/exact/field_ops.hpp"
#include "divalg/exact/linear_algebra.hpp"

namespace divalg::projective {

using exact::FieldElement;

namespace {

FieldElement normalize(const FieldElement& x, const exact::FieldPtr& k) {
  if (x.is_zero()) fail(ErrorCode::NotAUnit, "zero is not a unit");
  for (const auto& b : exact::coords_over(x, k)) {
    if (!b.is_zero()) return x / exact::embed(b, x.field());
  }
  fail(ErrorCode::NotAUnit, "zero is not a unit");
}

// Q-dimension of the k-span of the elements.
int q_rank(const std::vector<FieldElement>& xs, const exact::FieldPtr& k) {
  if (xs.empty()) return 0;
  const auto& field = xs[0].field();
  std::vector<std::vector<Rational>> cols;
  for (const auto& x : xs) {
    for (int i = 0; i < k->absolute_degree(); ++i) cols.push_back((exact::embed(k->basis_element(i), field) * x).coords());
  }
  exact::RationalMatrix m(field->absolute_degree(), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int r = 0; r < m.rows(); ++r) m(r, static_cast<int>(c)) = cols[c][r];
  }
  return exact::rank(std::move(m));
}

}  // namespace

GaloisReport verify_galois(const std::vector<FieldElement>& gens, const exact::FieldPtr& k, std::size_t bound) {
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "need at least one generator (use 1 for the trivial group)");
  const auto& L = gens[0].field();
  if (!L->has_ancestor(*k)) fail(ErrorCode::FieldMismatch, k->label() + " is not below " + L->label());
  GaloisReport out;
  std::vector<FieldElement> normed;
  for (const auto& g : gens) {
    exact::require_same_field(g, gens[0]);
    normed.push_back(normalize(g, k));
  }
  std::map<std::vector<Rational>, std::size_t, RationalVectorLess> index;
  out.elements.push_back(L->one());
  index.emplace(L->one().coords(), 0);
  for (std::size_t qi = 0; qi < out.elements.size(); ++qi) {
    for (const auto& g : normed) {
      FieldElement y = normalize(out.elements[qi] * g, k);
      if (index.emplace(y.coords(), out.elements.size()).second) {
        out.elements.push_back(std::move(y));
        if (out.elements.size() > bound) fail(ErrorCode::BoundExceeded, "subgroup exceeds " + std::to_string(bound) + " elements");
      }
    }
  }
  const std::size_t n = out.elements.size();

  std::vector<FieldElement> lifts;
  std::vector<char> in_b(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement& x = out.elements[i];
    FieldElement p = x;
    int alpha = 1;
    while (!exact::lies_in(p, *k)) {
      p *= x;
      if (static_cast<std::size_t>(++alpha) > bound) fail(ErrorCode::BoundExceeded, "no power of " + x.to_string() + " lies in " + k->label());
    }
    if (auto root = exact::power_test(exact::restrict_to(p, k), alpha)) {
      in_b[i] = 1;
      out.b_members.push_back(i);
      lifts.push_back(x / exact::embed(root->c, L));
    }
  }
  out.b_is_subgroup = true;
  for (auto a : out.b_members) {
    for (auto b : out.b_members) {
      out.b_is_subgroup = out.b_is_subgroup && in_b[index.at(normalize(out.elements[a] * out.elements[b], k).coords())];
    }
  }

  // K = k(lifts of B), grown until the k-span is closed under the lifts.
  std::vector<FieldElement> span{L->one()};
  int r = q_rank(span, k);
  for (std::size_t qi = 0; qi < span.size(); ++qi) {
    for (const auto& l : lifts) {
      std::vector<FieldElement> trial = span;
      trial.push_back(span[qi] * l);
      const int r2 = q_rank(trial, k);
      if (r2 > r) {
        span = std::move(trial);
        r = r2;
      }
    }
  }
  out.degree_K_over_k = r / k->absolute_degree();
  out.degree_L_over_k = exact::relative_degree(*L, *k);
  const std::size_t quotient = n / out.b_members.size();
  out.divides = out.b_is_subgroup && n % out.b_members.size() == 0 &&
                (out.degree_L_over_k / out.degree_K_over_k) % static_cast<int>(quotient) == 0;
  if (out.b_members.size() == 1) {
    out.traces_checked = true;
    for (std::size_t i = 1; i < n; ++i) out.traces_vanish = out.traces_vanish && exact::trace(out.elements[i], k).is_zero();
  }
  return out;
}

}  // namespace divalg::projective
