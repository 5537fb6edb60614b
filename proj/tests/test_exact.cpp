#include <random>

#include "doctest.h"

#include "divalg/error.hpp"
#include "divalg/exact/catalog.hpp"
#include "divalg/exact/field_ops.hpp"
#include "divalg/exact/linear_algebra.hpp"
#include "divalg/exact/modular.hpp"
#include "divalg/exact/quadratic_integers.hpp"

using namespace divalg;
using namespace divalg::exact;

namespace {

const FieldCatalog& fields() {
  static const FieldCatalog cat = FieldCatalog::load(std::string(DIVALG_DATA_DIR) + "/fields.json");
  return cat;
}

FieldElement el(const std::string& label, std::vector<Rational> c) { return fields().get(label)->from_coords(std::move(c)); }

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  while (true) {
    std::vector<Rational> c(f->absolute_degree());
    for (auto& v : c) v = dist(rng);
    auto x = f->from_coords(std::move(c));
    if (!x.is_zero()) return x;
  }
}

std::vector<Rational> rats(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  auto w = el("Q(w)", rats({0, 1}));
  CHECK((w * w * w).is_one());
  CHECK((w * (w * w)).is_one());

  auto phi = el("Q(sqrt5)", {Rational(1, 2), Rational(1, 2)});
  auto phi_inv = el("Q(sqrt5)", {Rational(-1, 2), Rational(1, 2)});
  CHECK((phi * phi_inv).is_one());

  auto q = NumberField::rationals();
  CHECK(q->from_rational(Rational(2, 3)) + q->from_rational(Rational(1, 6)) == q->from_rational(Rational(5, 6)));
}

TEST_CASE("field arithmetic errors") {
  auto a = el("Q(i)", rats({1, 1}));
  auto b = el("Q(w)", rats({1, 1}));
  CHECK_THROWS_AS(a + b, Error);
  try {
    (void)(a / fields().get("Q(i)")->zero());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("inverse law on every catalog field") {
  std::mt19937_64 rng(0x5EED);
  for (const auto& label : fields().labels()) {
    const auto& f = fields().get(label);
    for (int k = 0; k < 10; ++k) {
      auto x = random_element(f, rng);
      CHECK((x * (f->one() / x)).is_one());
    }
  }
}

TEST_CASE("minimal polynomial") {
  auto q = NumberField::rationals();
  auto mp = minimal_polynomial(el("Q(w)", rats({0, 1})), q);
  REQUIRE(mp.size() == 3);
  CHECK(mp[0][0] == 1);
  CHECK(mp[1][0] == 1);
  CHECK(mp[2][0] == 1);

  auto one = minimal_polynomial(fields().get("Q(zeta9)")->one(), q);
  REQUIRE(one.size() == 2);
  CHECK(one[0][0] == -1);

  // zeta7 + zeta7^-1; oracle: elementary symmetric functions of its three conjugates.
  const auto& z7 = fields().get("Q(zeta7)");
  auto zeta = z7->generator();
  auto conj = [&](int k) { return zeta.pow(k) + zeta.pow(7 - k); };
  auto e1 = conj(1) + conj(2) + conj(3);
  auto e2 = conj(1) * conj(2) + conj(1) * conj(3) + conj(2) * conj(3);
  auto e3 = conj(1) * conj(2) * conj(3);
  REQUIRE(e1.is_rational());
  REQUIRE(e2.is_rational());
  REQUIRE(e3.is_rational());
  auto eta_poly = minimal_polynomial(conj(1), q);
  REQUIRE(eta_poly.size() == 4);
  CHECK(eta_poly[2][0] == -e1[0]);
  CHECK(eta_poly[1][0] == e2[0]);
  CHECK(eta_poly[0][0] == -e3[0]);
  CHECK(eta_poly[0][0] == -1);
  CHECK(eta_poly[1][0] == -2);
  CHECK(eta_poly[2][0] == 1);

  // Substitution and degree divisibility on random tower elements, over both ancestors.
  std::mt19937_64 rng(7);
  const auto& l = fields().get("Q(sqrt-7,zeta7)");
  for (const auto& over : {q, fields().get("Q(sqrt-7)")}) {
    for (int k = 0; k < 5; ++k) {
      auto x = random_element(l, rng);
      auto p = minimal_polynomial(x, over);
      auto acc = l->zero();
      for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + embed(p[i], l);
      CHECK(acc.is_zero());
      CHECK(relative_degree(*l, *over) % static_cast<int>(p.size() - 1) == 0);
    }
  }
}

TEST_CASE("trace") {
  auto q = NumberField::rationals();
  CHECK(trace(el("Q(w)", rats({0, 1})), q)[0] == -1);
  const auto& l = fields().get("Q(sqrt-7,zeta7)");
  const auto& k = fields().get("Q(sqrt-7)");
  CHECK(trace(l->one(), k) == k->from_rational(3));

  // Q[t]/(t^3 - 2): oracle is the diagonal of the companion matrix of t^3 - 2.
  const auto& c = fields().get("Q(cbrt2)");
  const std::vector<Integer>& f = c->defining_polynomial();
  RationalMatrix companion(3, 3);
  for (int i = 1; i < 3; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < 3; ++i) companion(i, 2) = -Rational(f[i]);
  Rational diag = companion(0, 0) + companion(1, 1) + companion(2, 2);
  CHECK(trace(c->generator(), q)[0] == diag);
  CHECK(diag == 0);

  // Additivity, k-linearity and transitivity through Q -> Q(w) -> Q(zeta9).
  std::mt19937_64 rng(11);
  const auto& big = fields().get("Q(zeta9)");
  const auto& mid = fields().get("Q(w)");
  for (int i = 0; i < 20; ++i) {
    auto x = random_element(big, rng);
    auto y = random_element(big, rng);
    auto s = random_element(mid, rng);
    CHECK(trace(x + y, mid) == trace(x, mid) + trace(y, mid));
    CHECK(trace(embed(s, big) * x, mid) == s * trace(x, mid));
    CHECK(trace(x, q) == trace(trace(x, mid), q));
  }
}

TEST_CASE("roots of unity") {
  auto q = NumberField::rationals();
  CHECK(is_root_of_unity(q->from_rational(-1)) == 2);
  CHECK(is_root_of_unity(el("Q(w)", rats({0, 1}))) == 3);
  CHECK_FALSE(is_root_of_unity(q->from_rational(2)).has_value());
  CHECK_THROWS_AS(is_root_of_unity(q->zero()), Error);

  for (const auto& label : fields().labels()) {
    const auto& f = fields().get(label);
    auto zeta = f->torsion_generator();
    CHECK(is_root_of_unity(zeta) == f->torsion_order());
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5; ++k) {
      auto x = random_element(f, rng);
      CHECK(is_root_of_unity(x).has_value() == x.pow(f->torsion_order()).is_one());
    }
  }
  CHECK(is_root_of_unity(fields().get("Q(zeta9)")->torsion_generator().pow(6)) == 3);
}

TEST_CASE("power test examples over Q") {
  auto q = NumberField::rationals();
  auto r = power_test(q->from_rational(8), 3);
  REQUIRE(r);
  CHECK(r->c[0] == 2);
  auto s = power_test(q->from_rational(-4), 2);
  REQUIRE(s);
  CHECK(s->c[0] == 2);
  CHECK(s->unit[0] == -1);
  CHECK_FALSE(power_test(q->from_rational(2), 2).has_value());
  CHECK_FALSE(power_test(q->from_rational(-4), 4).has_value());
  CHECK(power_test(q->from_rational(Rational(-27, 8)), 3)->c[0] == Rational(3, 2));
}

TEST_CASE("power test over Gaussian and Eisenstein integers") {
  // 2 = -i (1 + i)^2
  auto two_i = power_test(el("Q(i)", rats({2, 0})), 2);
  REQUIRE(two_i);
  CHECK(two_i->c.pow(2) * two_i->unit == el("Q(i)", rats({2, 0})));
  CHECK_FALSE(power_test(el("Q(i)", rats({3, 0})), 2).has_value());
  CHECK_FALSE(power_test(el("Q(i)", rats({5, 0})), 2).has_value());
  CHECK(power_test(el("Q(i)", rats({-4, 0})), 4).has_value());  // -4 = (1+i)^4
  CHECK(power_test(el("Q(w)", rats({3, 0})), 2).has_value());
  CHECK_FALSE(power_test(el("Q(w)", rats({2, 0})), 2).has_value());
  CHECK_FALSE(power_test(el("Q(w)", rats({3, 1})), 3).has_value());

  // Soundness and completeness on a = c^alpha * zeta^k with random c.
  std::mt19937_64 rng(0x5EED);
  for (const char* label : {"Q(i)", "Q(w)"}) {
    const auto& f = fields().get(label);
    for (int trial = 0; trial < 40; ++trial) {
      auto c = random_element(f, rng);
      c *= Rational(1, 1 + static_cast<int>(rng() % 5));
      int alpha = 1 + static_cast<int>(rng() % 6);
      auto a = c.pow(alpha) * f->torsion_generator().pow(static_cast<long long>(rng() % 12));
      auto r = power_test(a, alpha);
      REQUIRE(r);
      CHECK(r->c.pow(alpha) * r->unit == a);
      CHECK(is_root_of_unity(r->unit).has_value());
    }
  }
}

TEST_CASE("heuristic power test") {
  const auto& f = fields().get("Q(sqrt5)");
  CHECK_FALSE(power_test_is_exact(*f));
  auto a = el("Q(sqrt5)", {Rational(3, 2), Rational(1, 2)});  // golden ratio squared
  auto r = power_test(a, 2);
  REQUIRE(r);
  CHECK(r->c.pow(2) * r->unit == a);
  // 2 is excluded by norm-compatible modular obstructions, not by search.
  CHECK_FALSE(power_test(f->from_rational(2), 2).has_value());
  CHECK_FALSE(power_test(f->from_rational(3), 2).has_value());  // norm 9, but 3 is not a square up to sign
  CHECK_FALSE(power_test(f->from_rational(2), 3).has_value());  // norm 4 is no cube
}

TEST_CASE("catalog validation rejects bad fields") {
  auto bad = [](const std::string& text) {
    try {
      FieldCatalog::from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code() == ErrorCode::CatalogError;
    }
    return false;
  };
  CHECK(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[-1,0,1],"torsion_order":2}])"));
  CHECK(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[1,0,1],"torsion_order":2}])"));
  CHECK(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[1,0,1],"automorphisms":[[1,1]],"torsion_order":4}])"));
  CHECK(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[1,0,0,0,1],"torsion_order":8,
                 "automorphisms":[[0,1,0,0],[0,0,0,1],[0,-1,0,0]]}])"));
  CHECK(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[4,0,0,0,1],"torsion_order":2}])"));
  CHECK(bad(R"([{"label":"Q","base_label":null,"defining_polynomial":[1,0,1],"torsion_order":4}])"));
  CHECK_FALSE(bad(R"([{"label":"x","base_label":null,"defining_polynomial":[1,0,0,0,1],"torsion_order":8}])"));
}

TEST_CASE("modular helpers") {
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(factor_degrees_mod_p(reduce_poly({1, 3, -3, -4, 1, 1}, 2), 2) == std::vector<int>{5});
  CHECK(euler_phi(36) == 12);
  auto factors = factor_integer(Integer("1000000016000000063"));  // 1000000007 * 1000000009
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == Integer("1000000007"));
}
