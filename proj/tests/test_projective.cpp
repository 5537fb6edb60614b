#include <random>

#include "doctest.h"

#include "catalogs.hpp"
#include "divalg/error.hpp"
#include "divalg/projective/galois.hpp"
#include "divalg/projective/normal_core.hpp"

using namespace divalg;
using namespace divalg::projective;
using testing::algebras;
using testing::catalog_group;

namespace {

AlgebraElement quat(const std::vector<int>& wxyz) {
  std::vector<Rational> flat(wxyz.begin(), wxyz.end());
  return algebras().get("hamilton-q")->from_flat(flat);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("projection normalizes scalars away") {
  CHECK(project(quat({0, 3, 0, 0})) == project(quat({0, 1, 0, 0})));
  CHECK(project(quat({0, -2, 0, 0})).rep() == quat({0, 1, 0, 0}));
  CHECK(project(quat({2, 2, 0, 0})).rep() == quat({1, 1, 0, 0}));
  CHECK(project(quat({5, 0, 0, 0})).is_identity());
  CHECK(code_of([] { project(quat({0, 0, 0, 0})); }) == ErrorCode::NotAUnit);
  // i^2 = -1 is a scalar.
  auto i = project(quat({0, 1, 0, 0}));
  CHECK((i * i).is_identity());
  CHECK(i.inverse() == i);
}

TEST_CASE("closure examples") {
  const auto& h = algebras().get("hamilton-q");
  auto klein = closure({project(quat({0, 1, 0, 0})), project(quat({0, 0, 1, 0}))}, h);
  CHECK(klein.order() == 4);
  CHECK(groups::recognize(klein.table).kind == groups::StructureTag::Kind::Dihedral);  // order 4 dihedral is Klein
  CHECK(klein.index_of(project(quat({0, 0, 0, 7}))).has_value());

  CHECK(closure({project(h->one())}, h).order() == 1);

  // (1+i)^2 = 2i ~ i and i^2 ~ 1.
  auto c = closure({project(quat({1, 1, 0, 0}))}, h);
  CHECK(c.order() == 4);
  CHECK(groups::recognize(c.table).kind == groups::StructureTag::Kind::Cyclic);

  // 1 + 2i has infinite order modulo scalars.
  CHECK(code_of([&] { closure({project(quat({1, 2, 0, 0}))}, h, 50); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("scalar powers") {
  auto [alpha, a] = scalar_power(project(quat({0, 1, 0, 0})));
  CHECK(alpha == 2);
  CHECK(a == exact::NumberField::rationals()->from_rational(-1));
  auto [one_alpha, one] = scalar_power(project(quat({1, 0, 0, 0})));
  CHECK(one_alpha == 1);
  CHECK(one.is_one());
  const auto& cubic = algebras().get("cubic-q-zeta7");
  auto [za, zs] = scalar_power(project(cubic->z()));
  CHECK(za == 3);
  CHECK(zs == cubic->a());
  CHECK(order_in_quotient(project(quat({1, 1, 0, 0}))) == 4);
}

TEST_CASE("finite-order lifts") {
  auto li = finite_order_lift(project(quat({0, 1, 0, 0})));
  REQUIRE(li.has_value());
  CHECK(li->order == 4);
  CHECK(project(li->lift) == project(quat({0, 1, 0, 0})));

  // (1+i)^4 = -4 is not a rational 4th power up to sign; Nrd(1+i) = 2.
  auto d = decide_finite_lift(project(quat({1, 1, 0, 0})));
  CHECK_FALSE(d.scalar_route);
  CHECK_FALSE(d.norm_route);
  CHECK_FALSE(d.lift.has_value());
  CHECK(csa::reduced_norm(quat({1, 1, 0, 0}))[0] == 2);

  // z^3 = 2 is not a cube in Q.
  const auto& cubic = algebras().get("cubic-q-zeta7");
  CHECK_FALSE(finite_order_lift(project(cubic->z())).has_value());

  CHECK(multiplicative_order(quat({0, 1, 0, 0}), 100) == 4);
  CHECK(code_of([] { multiplicative_order(quat({1, 1, 0, 0}), 100); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("scalar and norm routes agree on every catalog element") {
  for (const auto& entry : testing::groups().entries()) {
    auto g = catalog_group(entry.id);
    for (const auto& x : g.elements) {
      auto d = decide_finite_lift(x);
      CHECK(d.scalar_route == d.norm_route);
      CHECK(d.lift.has_value() == d.scalar_route);
      if (d.lift) CHECK(multiplicative_order(d.lift->lift, 10000) == d.lift->order);
    }
  }
}

TEST_CASE("N_G and its lift") {
  auto klein = catalog_group("hamilton-klein-ij");
  auto ng = compute_NG(klein);
  CHECK(ng.members.size() == 4);
  CHECK(ng.is_normal);
  CHECK(ng.quotient_abelian);
  auto lifted = lift_NG(klein, ng);
  CHECK(lifted.elements.size() == 8);
  CHECK(lifted.projects_onto);
  CHECK(groups::recognize(lifted.table) ==
        groups::StructureTag{groups::StructureTag::Kind::GeneralizedQuaternion, 8, 0, 0});

  auto trivial = catalog_group("hamilton-trivial");
  auto tng = compute_NG(trivial);
  CHECK(tng.members.size() == 1);
  CHECK(lift_NG(trivial, tng).elements.size() == 1);

  // Z/3 x Z/3 whose generators cube to non-cubes: N_G trivial.
  auto w = catalog_group("cubic-w-cbrt2-theta-z");
  CHECK(w.order() == 9);
  CHECK(compute_NG(w).members.size() == 1);

  // Cyclic N_G of order 3 from a root of unity in K: lift is cyclic and projects onto N_G.
  auto z9 = catalog_group("cubic-w-zeta9-zeta-z");
  auto ng9 = compute_NG(z9);
  CHECK(ng9.members.size() == 3);
  auto l9 = lift_NG(z9, ng9);
  CHECK(l9.projects_onto);
  CHECK(groups::recognize(l9.table).kind == groups::StructureTag::Kind::Cyclic);
}

TEST_CASE("commutator pairing") {
  auto i = project(quat({0, 1, 0, 0}));
  auto j = project(quat({0, 0, 1, 0}));
  const auto q = exact::NumberField::rationals();
  CHECK(beta(i, i).is_one());
  CHECK(beta(i, j) == q->from_rational(-1));
  CHECK(beta(i, project(quat({3, 5, 0, 0}))).is_one());
  // (1+i) rotates j to k, and kj^-1 = i is not central.
  CHECK(code_of([&] { beta(project(quat({1, 1, 0, 0})), j); }) == ErrorCode::NotCentral);

  // Independent of the lifts chosen.
  std::mt19937_64 rng(0x5EED);
  const auto& h = algebras().get("hamilton-q");
  for (int t = 0; t < 20; ++t) {
    auto x = quat({0, static_cast<int>(rng() % 9 + 1), 0, 0});
    auto y = quat({0, 0, static_cast<int>(rng() % 9 + 1), 0});
    auto c = as_scalar(x * y * csa::inverse(x) * csa::inverse(y));
    REQUIRE(c.has_value());
    CHECK(*c == beta(i, j));
  }
  CHECK(as_scalar(h->z()) == std::nullopt);
}

TEST_CASE("paired groups and Gamma") {
  auto klein = paired_group_of(catalog_group("hamilton-klein-ij"));
  CHECK(klein.paired.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(klein.paired.pairing[0][1] == Rational(1, 2));
  auto gk = gamma_of(catalog_group("hamilton-klein-ij"));
  CHECK(gk.gamma.size() == 2);
  CHECK(gk.field.degree == 2);

  auto cyc = catalog_group("hamilton-cyclic-1+i");
  auto pc = paired_group_of(cyc);
  CHECK(pc.paired.invariant_factors == std::vector<std::int64_t>{4});
  CHECK(pc.paired.pairing[0][0] == 0);
  CHECK(gamma_of(cyc).gamma.size() == cyc.order());

  auto triv = paired_group_of(catalog_group("hamilton-trivial"));
  CHECK(triv.paired.order() == 1);

  CHECK(code_of([] { paired_group_of(catalog_group("hamilton-octahedral")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("invariant subfields") {
  auto run = [](const std::string& id) {
    auto g = catalog_group(id);
    return invariant_subfield(g, compute_NG(g));
  };
  auto t = run("hamilton-trivial");
  CHECK(t.branch == "trivial");
  CHECK(t.field.degree == 1);
  auto c = run("cubic-w-zeta9-zeta-z");
  CHECK(c.branch == "cyclic");
  CHECK(c.field.degree == 3);
  auto k = run("hamilton-klein-ij");
  CHECK(k.branch == "klein");
  CHECK(k.field.degree == 2);
  auto d = run("hamilton-dihedral-1+i-j");
  CHECK(d.branch == "klein");  // N_G is the Klein image of {i, j}
  CHECK(d.field.degree == 2);
  CHECK(code_of([&] { run("cubic-sqrt-7-zeta7-frobenius"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("finite subgroups of L*/k*") {
  const auto& fields = testing::fields();
  auto trivial = verify_galois({fields.get("Q(cbrt2)")->one()}, fields.get("Q"));
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.degree_K_over_k == 1);
  CHECK(trivial.divides);

  // t^3 = 2: A = <t> of order 3, no finite-order lift, tr(t) = 0.
  auto cb = verify_galois({fields.get("Q(cbrt2)")->generator()}, fields.get("Q"));
  CHECK(cb.elements.size() == 3);
  CHECK(cb.b_members.size() == 1);
  CHECK(cb.traces_checked);
  CHECK(cb.traces_vanish);
  CHECK(cb.degree_L_over_k == 3);
  CHECK(cb.divides);

  // zeta7 is itself a root of unity: B = A and K = L.
  auto z7 = verify_galois({fields.get("Q(zeta7)")->generator()}, fields.get("Q"));
  CHECK(z7.b_members.size() == z7.elements.size());
  CHECK(z7.degree_K_over_k == z7.degree_L_over_k);
  CHECK(z7.divides);
}
