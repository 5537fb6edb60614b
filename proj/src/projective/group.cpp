#include "divalg/projective/group.hpp"

#include <map>

#include "divalg/error.hpp"
#include "divalg/exact/field_ops.hpp"
#include "divalg/exact/modular.hpp"

namespace divalg::projective {

namespace {

FieldElement first_nonzero_k_entry(const AlgebraElement& x) {
  const auto& k = x.algebra()->base();
  for (const auto& c : x.coords()) {
    for (const auto& b : exact::coords_over(c, k)) {
      if (!b.is_zero()) return b;
    }
  }
  fail(ErrorCode::NotAUnit, "zero is not a unit");
}

}  // namespace

ProjectiveUnit project(const AlgebraElement& x) {
  if (x.is_zero()) fail(ErrorCode::NotAUnit, "zero is not a unit");
  if (csa::reduced_norm(x).is_zero()) fail(ErrorCode::NotAUnit, x.to_string() + " has reduced norm 0");
  return ProjectiveUnit(first_nonzero_k_entry(x).inverse() * x);
}

ProjectiveUnit operator*(const ProjectiveUnit& a, const ProjectiveUnit& b) {
  AlgebraElement p = a.rep_ * b.rep_;
  return ProjectiveUnit(first_nonzero_k_entry(p).inverse() * p);
}

ProjectiveUnit ProjectiveUnit::inverse() const { return project(csa::inverse(rep_)); }

std::optional<FieldElement> as_scalar(const AlgebraElement& x) {
  for (std::size_t i = 1; i < x.coords().size(); ++i) {
    if (!x[i].is_zero()) return std::nullopt;
  }
  const auto& k = x.algebra()->base();
  if (!exact::lies_in(x[0], *k)) return std::nullopt;
  return exact::restrict_to(x[0], k);
}

std::optional<Elem> ProjectiveGroup::index_of(const ProjectiveUnit& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == x) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

ProjectiveGroup closure(const std::vector<ProjectiveUnit>& gens, const AlgebraPtr& algebra, std::size_t bound) {
  if (bound < 1) fail(ErrorCode::InvalidArgument, "closure bound must be positive");
  for (const auto& g : gens) {
    if (g.rep().algebra() != algebra) fail(ErrorCode::AlgebraMismatch, "generator from another algebra");
  }
  std::vector<ProjectiveUnit> elems{project(algebra->one())};
  std::map<std::vector<Rational>, Elem, RationalVectorLess> index{{elems[0].rep().flat(), 0}};
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : gens) {
      ProjectiveUnit y = elems[qi] * g;
      if (index.emplace(y.rep().flat(), static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > bound) fail(ErrorCode::BoundExceeded, "closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find((elems[a] * elems[b]).rep().flat());
      if (it == index.end()) fail(ErrorCode::BoundExceeded, "closure is not closed");
      t[a * n + b] = it->second;
    }
  }
  return ProjectiveGroup{algebra, std::move(elems), FiniteGroupTable(n, std::move(t))};
}

std::pair<int, FieldElement> scalar_power(const ProjectiveUnit& x, std::size_t bound) {
  AlgebraElement p = x.rep();
  for (std::size_t alpha = 1; alpha <= bound; ++alpha) {
    if (auto a = as_scalar(p)) return {static_cast<int>(alpha), *a};
    p = p * x.rep();
  }
  fail(ErrorCode::BoundExceeded, "no scalar power up to " + std::to_string(bound));
}

int order_in_quotient(const ProjectiveUnit& x, std::size_t bound) { return scalar_power(x, bound).first; }

long multiplicative_order(const AlgebraElement& x, long bound) {
  AlgebraElement p = x;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * x;
  }
  fail(ErrorCode::BoundExceeded, "no finite order up to " + std::to_string(bound));
}

LiftDecision decide_finite_lift(const ProjectiveUnit& x, std::size_t bound) {
  const auto& alg = x.rep().algebra();
  auto [alpha, a] = scalar_power(x, bound);
  LiftDecision out;
  const auto root = exact::power_test(a, alpha);
  out.scalar_route = root.has_value();
  out.norm_route = exact::power_test(csa::reduced_norm(x.rep()), alg->degree()).has_value();
  if (root) {
    FiniteLift fl;
    fl.lift = root->c.inverse() * x.rep();
    fl.alpha = alpha;
    fl.scalar = a;
    // lift^alpha = unit, a root of unity of order unit_order.
    const long m = static_cast<long>(alpha) * root->unit_order;
    if (!fl.lift.pow(m).is_one()) fail(ErrorCode::CrossCheckFailed, "lift does not have the predicted order");
    fl.order = m;
    for (auto d : exact::divisors(static_cast<exact::u64>(m))) {
      if (fl.lift.pow(static_cast<long long>(d)).is_one()) {
        fl.order = static_cast<long>(d);
        break;
      }
    }
    out.lift = std::move(fl);
  }
  return out;
}

std::optional<FiniteLift> finite_order_lift(const ProjectiveUnit& x, std::size_t bound) {
  LiftDecision d = decide_finite_lift(x, bound);
  if (d.scalar_route != d.norm_route) {
    fail(ErrorCode::CrossCheckFailed, "scalar-power and reduced-norm criteria disagree on " + x.rep().to_string());
  }
  return std::move(d.lift);
}

}  // namespace divalg::projective
