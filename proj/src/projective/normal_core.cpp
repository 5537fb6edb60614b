#include "divalg/projective/normal_core.hpp"

#include <algorithm>

#include "divalg/error.hpp"
#include "divalg/exact/modular.hpp"

namespace divalg::projective {

NGResult compute_NG(const ProjectiveGroup& g, std::size_t bound) {
  NGResult out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (auto lift = finite_order_lift(g.elements[x], bound)) {
      out.members.push_back(x);
      out.lifts.emplace(x, std::move(*lift));
    }
  }
  out.is_subgroup = groups::is_subgroup(g.table, out.members);
  out.is_normal = out.is_subgroup && groups::is_normal(g.table, out.members);
  if (out.is_normal) {
    out.quotient = groups::quotient_by(g.table, out.members);
    out.quotient_abelian = out.quotient->table.is_abelian();
  }
  return out;
}

LiftedGroup lift_NG(const ProjectiveGroup& g, const NGResult& ng, std::size_t bound) {
  const auto& alg = g.algebra;
  std::vector<AlgebraElement> gens;
  for (const auto& [x, fl] : ng.lifts) gens.push_back(fl.lift);
  LiftedGroup out{{alg->one()}, FiniteGroupTable(1, {0}), {}, false};
  std::map<std::vector<Rational>, Elem, RationalVectorLess> index{{alg->one().flat(), 0}};
  for (std::size_t qi = 0; qi < out.elements.size(); ++qi) {
    for (const auto& s : gens) {
      AlgebraElement y = out.elements[qi] * s;
      if (index.emplace(y.flat(), static_cast<Elem>(out.elements.size())).second) {
        out.elements.push_back(std::move(y));
        if (out.elements.size() > bound) fail(ErrorCode::BoundExceeded, "lifted group exceeds " + std::to_string(bound) + " elements");
      }
    }
  }
  const std::size_t n = out.elements.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find((out.elements[a] * out.elements[b]).flat());
      if (it == index.end()) fail(ErrorCode::BoundExceeded, "lifted set is not closed");
      t[a * n + b] = it->second;
    }
  }
  out.table = FiniteGroupTable(n, std::move(t));
  std::vector<char> hit(g.order(), 0);
  bool inside = true;
  for (const auto& x : out.elements) {
    out.orders.push_back(multiplicative_order(x, static_cast<long>(n)));
    auto idx = g.index_of(project(x));
    if (!idx || !std::binary_search(ng.members.begin(), ng.members.end(), *idx)) {
      inside = false;
    } else {
      hit[*idx] = 1;
    }
  }
  out.projects_onto = inside;
  for (Elem m : ng.members) out.projects_onto = out.projects_onto && hit[m];
  return out;
}

FieldElement beta(const ProjectiveUnit& x, const ProjectiveUnit& y) {
  const AlgebraElement c = x.rep() * y.rep() * csa::inverse(x.rep()) * csa::inverse(y.rep());
  auto s = as_scalar(c);
  if (!s) fail(ErrorCode::NotCentral, "elements do not commute modulo scalars");
  return *s;
}

PairedGroup paired_group_of(const ProjectiveGroup& g) {
  PairedGroup out;
  out.decomposition = groups::abelian_decomposition(g.table);
  const auto& d = out.decomposition;
  const std::size_t r = d.factors.size();
  const auto& k = g.algebra->base();
  const FieldElement zeta = k->torsion_generator();
  const int w = k->torsion_order();
  out.paired.invariant_factors = d.factors;
  out.paired.pairing.assign(r, std::vector<Rational>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const FieldElement b = beta(g.elements[d.basis[i]], g.elements[d.basis[j]]);
      FieldElement p = k->one();
      int t = 0;
      while (t < w && p != b) {
        p *= zeta;
        ++t;
      }
      if (t == w) fail(ErrorCode::NonTorsionPairingValue, "pairing value " + b.to_string() + " is not a root of unity");
      Rational q(t, w);
      q.canonicalize();
      out.paired.pairing[i][j] = q;
    }
  }
  out.paired.validate();
  return out;
}

GammaResult gamma_of(const ProjectiveGroup& g) {
  GammaResult out;
  out.paired = paired_group_of(g);
  std::vector<Elem> gens;
  for (const auto& c : groups::gamma_subgroup(out.paired.paired)) gens.push_back(out.paired.decomposition.element_of.at(c));
  out.gamma = g.table.generated(gens);
  std::vector<AlgebraElement> lifts;
  for (Elem x : out.gamma) lifts.push_back(g.elements[x].rep());
  out.field = csa::generated_subfield(lifts, g.algebra);
  return out;
}

InvariantSubfield invariant_subfield(const ProjectiveGroup& g, const NGResult& ng) {
  const auto factors = exact::factor_u64(g.order());
  if (factors.size() > 1) fail(ErrorCode::InvalidArgument, "group of order " + std::to_string(g.order()) + " is not a p-group");
  if (!ng.is_normal) fail(ErrorCode::StabilityCheckFailed, "N_G is not normal");
  InvariantSubfield out;
  const std::uint64_t p = factors.empty() ? 1 : factors[0].first;
  const auto ng_table = groups::subgroup_table(g.table, ng.members);
  const auto tag = groups::recognize(ng_table);
  using Kind = groups::StructureTag::Kind;

  if (ng.members.size() == 1) {
    out.branch = "trivial";
    out.generators_from = ng.members;
  } else if (tag.kind == Kind::Cyclic) {
    out.branch = "cyclic";
    out.generators_from = ng.members;
  } else if (p != 2) {
    out.branch = "odd";
    out.generators_from = ng.members;
  } else if (tag.kind == Kind::Dihedral && tag.order >= 8) {
    out.branch = "dihedral";
    for (Elem x : ng.members) {
      if (static_cast<std::size_t>(g.table.element_order(x)) * 2 == ng.members.size()) {
        out.generators_from = g.table.generated({x});
        break;
      }
    }
  } else if (tag.kind == Kind::Dihedral && tag.order == 4) {
    out.branch = "klein";
    // G-stable order-two subgroups; least normalized representative wins.
    std::optional<Elem> best;
    for (Elem x : ng.members) {
      if (x == g.table.identity()) continue;
      Subgroup h{g.table.identity(), x};
      std::sort(h.begin(), h.end());
      if (!groups::is_normal(g.table, h)) continue;
      if (!best || compare(g.elements[x].rep().flat(), g.elements[*best].rep().flat()) < 0) best = x;
    }
    if (!best) fail(ErrorCode::StabilityCheckFailed, "no G-stable subgroup of order 2 in N_G");
    out.generators_from = {g.table.identity(), *best};
    std::sort(out.generators_from.begin(), out.generators_from.end());
  } else {
    fail(ErrorCode::StabilityCheckFailed, "N_G is " + tag.to_string() + ", expected cyclic or dihedral");
  }

  std::vector<AlgebraElement> lifts;
  for (Elem x : out.generators_from) lifts.push_back(ng.lifts.at(x).lift);
  out.field = csa::generated_subfield(lifts, g.algebra);

  for (const auto& u : g.elements) {
    const AlgebraElement inv = csa::inverse(u.rep());
    for (const auto& b : out.field.basis) {
      if (!csa::contains(out.field, u.rep() * b * inv)) {
        fail(ErrorCode::StabilityCheckFailed, "conjugation by " + u.rep().to_string() + " leaves the subfield");
      }
    }
  }
  for (Elem x : ng.members) {
    const AlgebraElement& l = ng.lifts.at(x).lift;
    bool trivial = true;
    for (const auto& b : out.field.basis) trivial = trivial && l * b == b * l;
    if (trivial) out.acting_trivially.push_back(x);
    if (trivial != csa::contains(out.field, l)) {
      fail(ErrorCode::StabilityCheckFailed, "action kernel does not match the lifts inside the subfield");
    }
  }
  return out;
}

}  // namespace divalg::projective
