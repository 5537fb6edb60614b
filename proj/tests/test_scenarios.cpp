#include "doctest.h"

#include "catalogs.hpp"
#include "divalg/error.hpp"
#include "divalg/scenarios/oracles.hpp"
#include "divalg/scenarios/runners.hpp"

using namespace divalg;
using namespace divalg::scenarios;

namespace {

ErrorCode catalog_error(const std::string& text) {
  try {
    GroupCatalog::from_json(Json::parse(text), testing::algebras());
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

Context context() { return Context{&testing::fields(), &testing::algebras(), &testing::groups()}; }

const Check* find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("group catalog validation") {
  const std::string gens = R"("algebra":"hamilton-q","generators":[[[0,1],[0,0]]])";
  CHECK(catalog_error(R"([{"id":"a",)" + gens + R"(,"expected":{"order":2},"provenance":{"order":"[TRIVIAL]"}}])") ==
        ErrorCode::InvalidArgument);  // accepted, no error
  CHECK(catalog_error(R"([{"id":"a",)" + gens + R"(,"expected":{"order":2},"provenance":{}}])") == ErrorCode::CatalogError);
  CHECK(catalog_error(R"([{"id":"a",)" + gens + R"(,"expected":{"order":2},"provenance":{"order":"[PAPER]"}}])") ==
        ErrorCode::CatalogError);
  CHECK(catalog_error(R"([{"id":"a",)" + gens + R"(,"expected":{"order":2},"provenance":{"order":"[DERIVED: guess]"}}])") ==
        ErrorCode::CatalogError);
  CHECK(catalog_error(R"([{"id":"a","algebra":"nope","generators":[]}])") == ErrorCode::CatalogError);
  CHECK(catalog_error(R"([{"id":"a","algebra":"hamilton-q","generators":[[[0,1]]]}])") == ErrorCode::CatalogError);
  CHECK(catalog_error(R"({"groups": 3})") == ErrorCode::CatalogError);
}

TEST_CASE("every catalog expectation carries a provenance tag") {
  for (const auto& e : testing::groups().entries()) {
    for (const auto& [key, value] : e.expected.items()) {
      REQUIRE(e.provenance.contains(key));
      const auto tag = e.provenance.at(key).get<std::string>();
      CHECK((tag == "[TRIVIAL]" || tag.rfind("[DERIVED: ", 0) == 0));
    }
  }
}

TEST_CASE("report overall status") {
  VerificationReport r("demo");
  CHECK(r.overall() == Status::Pass);
  r.add("a", "claim", "anchor", true);
  CHECK(r.overall() == Status::Pass);
  r.add(Check{"b", "claim", "anchor", Status::Inconclusive, Json::object()});
  CHECK(r.overall() == Status::Inconclusive);
  r.add("c", "claim", "", true);
  CHECK(r.overall() == Status::Fail);
  CHECK(r.failing_ids() == std::vector<std::string>{"b", "c"});
  auto j = r.to_json();
  CHECK(j.at("scenario") == "demo");
  CHECK(j.at("overall") == "fail");
  CHECK(j.at("checks").size() == 3);
  const auto tsv = r.to_tsv();
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 5);  // header, three checks, overall
}

TEST_CASE("reports are deterministic and anchored") {
  auto ctx = context();
  for (const auto& name : {"main", "finite-order", "quaternion-quotient", "galois", "a5"}) {
    auto a = run_scenario(name, ctx, {}).front();
    auto b = run_scenario(name, ctx, {}).front();
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.overall() == Status::Pass);
    for (const auto& c : a.checks()) CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("main-prime shape witnesses") {
  auto r = run_prime_degree_suite(context());
  CHECK(r.overall() == Status::Pass);
  const auto* frob = find(r, "cubic-sqrt-7-zeta7-frobenius/shape");
  REQUIRE(frob != nullptr);
  CHECK(frob->witness.at("n") == 7);
}

TEST_CASE("gamma suite on small orders") {
  auto r = run_gamma_suite(16, 10000, 0x5EED);
  CHECK(r.overall() == Status::Pass);
  const auto* nine = find(r, "gamma/symplectic-9x9");
  REQUIRE(nine != nullptr);
  CHECK(nine->witness.at("gamma_order") == 9);
}

TEST_CASE("balanced suite") {
  CHECK(run_balanced_suite(50, {3, 5, 7}).overall() == Status::Pass);
  // 91 = 7 * 13: multipliers acting as (2, 3) and (2, 9) on the two primary
  // parts are not related by r -> r^j, giving two classes.
  auto r = run_balanced_suite(100, {3});
  const auto* unique = find(r, "balanced/unique-p3");
  REQUIRE(unique != nullptr);
  CHECK(unique->status == Status::Fail);
  REQUIRE(unique->witness.at("counterexamples").size() == 1);
  CHECK(unique->witness.at("counterexamples")[0].at("n") == 91);
  CHECK(unique->witness.at("counterexamples")[0].at("classes") == 2);
  CHECK(find(r, "balanced/classes-p3")->status == Status::Pass);
  CHECK(find(r, "balanced/criterion-p3")->status == Status::Pass);
}

TEST_CASE("multiplier orbits") {
  CHECK(multiplier_orbit_count(multiplier_scan(7, 3), 7, 3) == 1);
  CHECK(multiplier_orbit_count(multiplier_scan(91, 3), 91, 3) == 2);
  CHECK(multiplier_orbit_count(multiplier_scan(11, 5), 11, 5) == 1);
  CHECK(multiplier_scan(4, 3).empty());
}

TEST_CASE("unknown scenario") {
  try {
    run_scenario("nope", context(), {});
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
