#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "catalogs.hpp"
#include "divalg/csa/subfield.hpp"
#include "divalg/error.hpp"

using namespace divalg;
using namespace divalg::csa;
using testing::algebras;

namespace {

AlgebraElement quat(const std::vector<int>& wxyz) {
  std::vector<Rational> flat(wxyz.begin(), wxyz.end());
  return algebras().get("hamilton-q")->from_flat(flat);
}

// Leibniz expansion over all permutations; independent of determinant().
FieldElement leibniz(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = m[0][0].field()->zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    FieldElement term = m[0][0].field()->one();
    for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix out(n, std::vector<FieldElement>(n, x[0][0].field()->zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) out[i][j] += x[i][l] * y[l][j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("quaternion relations") {
  auto i = quat({0, 1, 0, 0});
  auto j = quat({0, 0, 1, 0});
  auto k = quat({0, 0, 0, 1});
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -quat({1, 0, 0, 0}));
  CHECK(j * j == -quat({1, 0, 0, 0}));
  CHECK(k * k == -quat({1, 0, 0, 0}));
}

TEST_CASE("defining relations on every catalog algebra") {
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    auto c = alg->splitting()->generator();
    CHECK(alg->z() * alg->from_K(c) == alg->from_K(alg->sigma_power(1, c)) * alg->z());
    CHECK(alg->z().pow(alg->degree()) == alg->scalar(alg->a()));
    CHECK(embed_matrix(alg->one()) == embed_matrix(alg->one()));
    auto id = embed_matrix(alg->one());
    for (int r = 0; r < alg->degree(); ++r) {
      for (int s = 0; s < alg->degree(); ++s) CHECK(id[r][s] == (r == s ? alg->splitting()->one() : alg->splitting()->zero()));
    }
    auto diag = embed_matrix(alg->from_K(c));
    for (int r = 0; r < alg->degree(); ++r) CHECK(diag[r][r] == alg->sigma_power(r, c));
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(0x5EED);
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    const int pairs = alg->degree() <= 3 ? 100 : 30;
    for (int t = 0; t < pairs; ++t) {
      auto x = alg->random_element(rng);
      auto y = alg->random_element(rng);
      CHECK(embed_matrix(x * y) == matmul(embed_matrix(x), embed_matrix(y)));
    }
  }
}

TEST_CASE("reduced norm examples") {
  // Standard embedding of 1+i+j+k: [[1+i, 1+i], [-(1-i), 1-i]], determinant by hand.
  const auto& qi = testing::fields().get("Q(i)");
  auto one_plus_i = qi->from_coords({1, 1});
  auto one_minus_i = qi->from_coords({1, -1});
  FieldElement by_hand = one_plus_i * one_minus_i - one_plus_i * (-one_minus_i);
  CHECK(reduced_norm(quat({1, 1, 1, 1})) == exact::restrict_to(by_hand, exact::NumberField::rationals()));
  CHECK(reduced_norm(quat({1, 1, 1, 1}))[0] == 4);

  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    const int n = alg->degree();
    auto c = alg->base()->from_rational(Rational(-3, 2));
    CHECK(reduced_norm(alg->scalar(c)) == c.pow(n));
    // Nrd(z) = sign of the n-cycle times a.
    auto expected = alg->a() * Rational(n % 2 == 0 ? -1 : 1);
    CHECK(reduced_norm(alg->z()) == expected);
    CHECK(reduced_norm(alg->zero()).is_zero());
  }
}

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937_64 rng(5);
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    for (int t = 0; t < 5; ++t) {
      auto m = embed_matrix(alg->random_element(rng));
      CHECK(determinant(m) == leibniz(m));
    }
  }
}

TEST_CASE("reduced norm laws") {
  std::mt19937_64 rng(0x5EED);
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    const int n = alg->degree();
    for (int t = 0; t < 20; ++t) {
      auto x = alg->random_element(rng);
      auto y = alg->random_element(rng);
      CHECK(reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y));
      auto c = alg->base()->from_rational(1 + static_cast<int>(rng() % 7));
      CHECK(reduced_norm(c * x) == c.pow(n) * reduced_norm(x));
      CHECK_FALSE(reduced_norm(x).is_zero());
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(quat({1, 0, 0, 0})) == quat({1, 0, 0, 0}));
  CHECK(inverse(quat({0, 1, 0, 0})) == quat({0, -1, 0, 0}));
  auto x = quat({1, 1, 1, 1});
  auto expected = algebras().get("hamilton-q")->from_flat({Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(-1, 4)});
  CHECK(inverse(x) == expected);
  CHECK((x * expected).is_one());
  CHECK_THROWS_AS(inverse(quat({0, 0, 0, 0})), Error);

  std::mt19937_64 rng(9);
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    for (int t = 0; t < 5; ++t) {
      auto y = alg->random_element(rng);
      auto yi = inverse(y);
      CHECK((y * yi).is_one());
      CHECK((yi * y).is_one());
      CHECK(inverse(yi) == y);
    }
  }
}

TEST_CASE("generated subfield") {
  const auto& h = algebras().get("hamilton-q");
  auto sub1 = generated_subfield({h->one()}, h);
  CHECK(sub1.degree == 1);
  auto sub_i = generated_subfield({quat({0, 1, 0, 0})}, h);
  CHECK(sub_i.degree == 2);
  REQUIRE(sub_i.basis.size() == 2);
  CHECK(sub_i.basis[0].is_one());
  CHECK(sub_i.basis[1] == quat({0, 1, 0, 0}));
  try {
    generated_subfield({quat({0, 1, 0, 0}), quat({0, 0, 1, 0})}, h);
    FAIL("expected NonCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommutative);
  }
  std::mt19937_64 rng(13);
  for (const auto& label : algebras().labels()) {
    const auto& alg = algebras().get(label);
    auto x = alg->random_element(rng);
    auto sub = generated_subfield({x}, alg);
    CHECK(alg->degree() % sub.degree == 0);
    CHECK(contains(sub, x * x));
  }
}

TEST_CASE("algebra catalog validation") {
  auto load = [](const std::string& text) {
    try {
      AlgebraCatalog::from_json(Json::parse(text), testing::fields());
    } catch (const Error& e) {
      return e.code() == ErrorCode::CatalogError;
    }
    return false;
  };
  // Split algebra (1 is a norm) claimed as division: rejected by the sanity check.
  CHECK(load(R"js([{"label":"m2","base_field":"Q","splitting_field":"Q(i)","sigma_index":1,"a":[1],"degree":2,
                 "division":{"certified":true,"citation":"wrong"}}])js"));
  CHECK_FALSE(load(R"js([{"label":"m2","base_field":"Q","splitting_field":"Q(i)","sigma_index":1,"a":[1],"degree":2,
                 "division":{"certified":false,"citation":""}}])js"));
  CHECK(load(R"js([{"label":"bad","base_field":"Q","splitting_field":"Q(i)","sigma_index":0,"a":[-1],"degree":2}])js"));
  CHECK(load(R"js([{"label":"bad","base_field":"Q","splitting_field":"Q(i)","sigma_index":1,"a":[0],"degree":2}])js"));
  CHECK(division_status(*algebras().get("hamilton-q")) == "certified_external");
}
